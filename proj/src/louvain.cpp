#include <algorithm>
#include <limits>
#include <string>

#include "polcd/community.hpp"
#include "polcd/errors.hpp"
#include "polcd/random.hpp"

namespace polcd {

WeightMatrix blend(const WeightMatrix& a, const AssociatedGraphMatrix& f, const BlendSpec& spec) {
    const std::size_t n = a.size();
    if (f.entries.size() != n) throw ContractViolation("blend: matrix dimensions differ");
    if (!(spec.gamma >= 0.0 && spec.gamma <= 1.0)) throw ContractViolation("blend: gamma outside [0,1]");
    double scale = 1.0;
    if (spec.rescale) {
        const double massF = f.entries.grandSum();
        if (!(massF > 0.0)) throw ContractViolation("blend: cannot rescale an all-zero associated graph");
        scale = a.offDiagonal().grandSum() / massF;
    }
    const double g = spec.gamma;
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m(i, j) = g * a(i, j) + (1.0 - g) * (scale * f.entries(i, j));
    std::vector<double> self(n);
    for (std::size_t i = 0; i < n; ++i) self[i] = g * a.selfWeight(i);
    return WeightMatrix(std::move(m), std::move(self));
}

namespace {

constexpr std::size_t kMaxSweeps = 100000;

struct LevelOutcome {
    std::vector<std::size_t> community;  // per level node, founder-id labels
    std::vector<double> sweepModularity;
    std::size_t moves = 0;
    bool capped = false;
};

// One local-moving phase (Phase 1).
LevelOutcome localMoving(const WeightMatrix& structure, const WeightMatrix& gainW, Rng& rng) {
    const std::size_t n = structure.size();
    LouvainState state(gainW);
    const auto order = rng.permutation(n);

    std::vector<std::vector<std::size_t>> neighbors(n);
    for (std::size_t i = 0; i < n; ++i) neighbors[i] = structure.neighbors(i);

    LevelOutcome out;
    std::vector<double> linkTo(n, 0.0);
    std::vector<std::size_t> touched;
    bool stop = false;
    std::size_t sweeps = 0;
    while (!stop) {
        stop = true;
        std::size_t movesThisSweep = 0;
        for (auto i : order) {
            // link weight from i to each community, ascending j
            const auto row = gainW.offDiagonal().row(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || row[j] == 0.0) continue;
                const std::size_t c = state.communityOf(j);
                if (linkTo[c] == 0.0) touched.push_back(c);
                linkTo[c] += row[j];
            }
            const std::size_t own = state.communityOf(i);
            const double kiOwn = linkTo[own];

            std::size_t best = own;
            double bestGain = -std::numeric_limits<double>::infinity();
            for (auto j : neighbors[i]) {
                const std::size_t c = state.communityOf(j);
                const double g = c == own ? 0.0 : state.gain(i, linkTo[c], state.total(c), kiOwn);
                if (g > bestGain || (g == bestGain && c < best)) {
                    bestGain = g;
                    best = c;
                }
            }
            for (auto c : touched) linkTo[c] = 0.0;
            touched.clear();

            if (best != own && bestGain > 0.0) {
                state.move(i, best);
                ++movesThisSweep;
                stop = false;
            }
        }
        if (movesThisSweep > 0) {
            out.moves += movesThisSweep;
            out.sweepModularity.push_back(state.modularity());
        }
        if (++sweeps >= kMaxSweeps && !stop) {
            out.capped = true;
            break;
        }
    }
    out.community.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.community[i] = state.communityOf(i);
    return out;
}

// Full multi-level run on one connected component.
Partition runComponent(const WeightMatrix& structure0, const WeightMatrix& gain0, std::size_t componentIndex,
                       Rng& rng, LouvainTrace& trace) {
    const std::size_t n0 = structure0.size();
    if (n0 == 1) return Partition::singletons(1);
    if (!(gain0.twoM() > 0.0)) {
        trace.warnings.push_back("component " + std::to_string(componentIndex) +
                                 " has no weight in the gain matrix; nodes left as singletons");
        return Partition::singletons(n0);
    }

    std::vector<std::size_t> nodeToSuper(n0);
    for (std::size_t i = 0; i < n0; ++i) nodeToSuper[i] = i;

    WeightMatrix structure = structure0;
    WeightMatrix gainW = gain0;
    for (std::size_t level = 0;; ++level) {
        LevelOutcome outcome = localMoving(structure, gainW, rng);
        if (outcome.capped)
            trace.warnings.push_back("local moving hit the sweep cap at level " + std::to_string(level));
        const Partition levelPartition(outcome.community);
        for (auto& s : nodeToSuper) s = levelPartition.communityOf(s);
        const Partition snapshot(nodeToSuper);

        PassRecord rec;
        rec.component = componentIndex;
        rec.level = level;
        rec.partition = snapshot;
        rec.modularity = modularity(gain0, snapshot);
        rec.sweepModularity = std::move(outcome.sweepModularity);
        rec.moves = outcome.moves;
        trace.passes.push_back(std::move(rec));

        WeightMatrix structureAgg = structure.aggregate(levelPartition);
        if (structureAgg == structure) return snapshot;
        gainW = gainW.aggregate(levelPartition);
        structure = std::move(structureAgg);
    }
}

}  // namespace

Detection detectCommunities(const WeightMatrix& structure, const WeightMatrix& gain, std::uint64_t seed) {
    const std::size_t n = structure.size();
    if (gain.size() != n) throw ContractViolation("structure and gain matrices differ in size");
    if (n == 0 || !(structure.twoM() > 0.0))
        throw UndefinedModularityError("undefined-modularity: graph is empty or has no edges");

    Detection out;
    out.trace.permutationSeed = seed;
    out.trace.components = connectedComponents(structure).components;
    if (out.trace.components.size() > 1)
        out.trace.warnings.push_back("structure is disconnected (" + std::to_string(out.trace.components.size()) +
                                     " components); components are processed independently");

    Rng rng(seed);
    std::vector<std::size_t> labels(n);
    std::size_t offset = 0;
    for (std::size_t c = 0; c < out.trace.components.size(); ++c) {
        const auto& nodes = out.trace.components[c];
        Partition local;
        if (out.trace.components.size() == 1) {
            local = runComponent(structure, gain, c, rng, out.trace);
        } else {
            local = runComponent(structure.induced(nodes), gain.induced(nodes), c, rng, out.trace);
        }
        for (std::size_t k = 0; k < nodes.size(); ++k) labels[nodes[k]] = offset + local.communityOf(k);
        offset += local.numCommunities();
    }
    out.partition = Partition(labels);
    return out;
}

Detection louvain(const WeightMatrix& w, std::uint64_t seed) { return detectCommunities(w, w, seed); }

Detection polarizationLouvain(const WeightedGraph& g, const AssociatedGraphMatrix& f, const BlendSpec& spec,
                              std::uint64_t seed) {
    const WeightMatrix m = blend(g.weights(), f, spec);
    return detectCommunities(g.weights(), m, seed);
}

}  // namespace polcd
