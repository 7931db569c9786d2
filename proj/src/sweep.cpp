#include <future>

#include "polcd/community.hpp"
#include "polcd/errors.hpp"

namespace polcd {

SweepReport gammaSweep(const WeightedGraph& g, const MembershipProfile& prof, const OperatorConfig& operators,
                       std::span<const double> gammas, const SweepOptions& opts) {
    if (prof.size() != g.numNodes()) throw ContractViolation("membership profile does not match the graph");
    for (double gamma : gammas)
        if (!(gamma >= 0.0 && gamma <= 1.0)) throw ContractViolation("gamma outside [0,1]");

    const TwoAdditiveFuzzyMeasure measure(buildDialogueMatrix(prof, operators));
    const AssociatedGraphMatrix f = associatedGraph(measure, operators.symmetrizer);

    auto runOne = [&](std::optional<double> gamma) {
        SweepRow row;
        row.gamma = gamma;
        Detection det;
        if (gamma) {
            const BlendSpec spec{*gamma, opts.rescale};
            const WeightMatrix m = blend(g.weights(), f, spec);
            det = detectCommunities(g.weights(), m, opts.seed);
            row.blendModularity = modularity(m, det.partition);
        } else {
            det = louvain(g.weights(), opts.seed);
        }
        row.partition = std::move(det.partition);
        row.trace = std::move(det.trace);
        row.modularity = modularity(g.weights(), row.partition);
        if (!gamma) row.blendModularity = row.modularity;
        row.cohesion = partitionCohesion(row.partition, prof, operators, opts.normMode);
        return row;
    };

    SweepReport report;
    report.seed = opts.seed;
    report.operators = operators;
    report.normMode = opts.normMode;
    report.rescale = opts.rescale;

    std::vector<std::optional<double>> points{std::nullopt};
    points.insert(points.end(), gammas.begin(), gammas.end());
    if (opts.parallel) {
        std::vector<std::future<SweepRow>> futures;
        for (const auto& p : points) futures.push_back(std::async(std::launch::async, runOne, p));
        for (auto& fut : futures) report.rows.push_back(fut.get());
    } else {
        for (const auto& p : points) report.rows.push_back(runOne(p));
    }
    return report;
}

}  // namespace polcd
