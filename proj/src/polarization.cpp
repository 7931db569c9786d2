#include "polcd/polarization.hpp"

#include <cmath>
#include <string>

#include "polcd/errors.hpp"

namespace polcd {

MembershipProfile::MembershipProfile(std::vector<double> a, std::vector<double> b)
    : etaA(std::move(a)), etaB(std::move(b)) {
    if (etaA.size() != etaB.size()) throw ContractViolation("membership vectors differ in length");
    for (std::size_t i = 0; i < etaA.size(); ++i) {
        if (!(etaA[i] >= 0.0 && etaA[i] <= 1.0) || !(etaB[i] >= 0.0 && etaB[i] <= 1.0))
            throw ContractViolation("membership degree of node " + std::to_string(i) + " outside [0,1]");
    }
}

std::string toString(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::Risk: return "risk";
        case CapacityKind::Dialogue: return "dialogue";
        case CapacityKind::Combined: return "combined";
    }
    return "?";
}

PairwiseCapacityMatrix::PairwiseCapacityMatrix(Matrix entries, CapacityKind kind, double normalizer)
    : entries_(std::move(entries)), kind_(kind), normalizer_(normalizer) {
    if (!(normalizer_ > 0.0)) throw ContractViolation("capacity normalizer must be positive");
    const std::size_t n = entries_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (entries_(i, i) != 0.0) throw ContractViolation("capacity matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j)
            if (!(entries_(i, j) >= 0.0)) throw ContractViolation("capacity matrix entries must be non-negative");
    }
    if (!entries_.isSymmetric()) throw ContractViolation("capacity matrix must be symmetric");
}

double pairRisk(std::size_t i, std::size_t j, const MembershipProfile& prof, const OperatorConfig& cfg) {
    if (i == j) throw ContractViolation("pairRisk requires two distinct nodes");
    if (i >= prof.size() || j >= prof.size()) throw ContractViolation("pairRisk node index out of range");
    const double ab = evalOverlap(cfg, prof.etaA[i], prof.etaB[j]);
    const double ba = evalOverlap(cfg, prof.etaA[j], prof.etaB[i]);
    // order the grouping arguments so the value is bitwise symmetric in (i,j)
    return i < j ? evalGrouping(cfg, ab, ba) : evalGrouping(cfg, ba, ab);
}

double jdjPol(std::span<const std::size_t> nodes, const MembershipProfile& prof, const OperatorConfig& cfg) {
    double total = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a] != nodes[b]) total += pairRisk(nodes[a], nodes[b], prof, cfg);
    return total;
}

namespace {

template <class PairValue>
Matrix normalizedPairs(std::size_t n, PairValue value, double& normalizer) {
    Matrix raw(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) raw(i, j) = raw(j, i) = value(i, j);
    // ordered-pair total, fixed row-major order
    normalizer = raw.grandSum();
    if (!(normalizer > 0.0)) return raw;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = raw(i, j) / normalizer;
    return out;
}

}  // namespace

PairwiseCapacityMatrix buildRiskMatrix(const MembershipProfile& prof, const OperatorConfig& cfg) {
    if (prof.size() < 2) throw ContractViolation("risk matrix needs at least two nodes");
    double d = 0.0;
    Matrix p = normalizedPairs(prof.size(), [&](std::size_t i, std::size_t j) { return pairRisk(i, j, prof, cfg); }, d);
    if (!(d > 0.0))
        throw DegeneratePolarizationError("degenerate-polarization: no conflict exists; the risk measure is undefined");
    return {std::move(p), CapacityKind::Risk, d};
}

PairwiseCapacityMatrix buildDialogueMatrix(const MembershipProfile& prof, const OperatorConfig& cfg) {
    if (prof.size() < 2) throw ContractViolation("dialogue matrix needs at least two nodes");
    double d = 0.0;
    Matrix p = normalizedPairs(
        prof.size(), [&](std::size_t i, std::size_t j) { return evalNegation(cfg, pairRisk(i, j, prof, cfg)); }, d);
    if (!(d > 0.0))
        throw DegenerateDialogueError("degenerate-dialogue: every pair is fully polarized; the dialogue measure is undefined");
    return {std::move(p), CapacityKind::Dialogue, d};
}

double muValue(const TwoAdditiveFuzzyMeasure& m, std::span<const std::size_t> nodes) {
    const auto& p = m.matrix();
    double total = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        if (nodes[a] >= p.size()) throw ContractViolation("muValue node index out of range");
        for (std::size_t b = 0; b < nodes.size(); ++b) total += p(nodes[a], nodes[b]);
    }
    return total;
}

TwoAdditiveFuzzyMeasure convexCombine(std::span<const TwoAdditiveFuzzyMeasure> measures,
                                      std::span<const double> weights) {
    if (measures.empty() || measures.size() != weights.size())
        throw ContractViolation("convexCombine needs one weight per measure");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ContractViolation("convex weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw ContractViolation("convex weights must sum to 1");
    const std::size_t n = measures.front().size();
    Matrix out(n);
    for (std::size_t k = 0; k < measures.size(); ++k) {
        if (measures[k].size() != n) throw ContractViolation("convexCombine: measures differ in size");
        const auto& p = measures[k].matrix();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += weights[k] * p(i, j);
    }
    if (measures.size() == 1) return measures.front();
    return TwoAdditiveFuzzyMeasure(PairwiseCapacityMatrix(std::move(out), CapacityKind::Combined, 1.0));
}

std::string toString(NormMode mode) { return mode == NormMode::PositivePairs ? "positive-pairs" : "all-pairs"; }

NormMode parseNormMode(std::string_view id) {
    if (id == "positive-pairs") return NormMode::PositivePairs;
    if (id == "all-pairs") return NormMode::AllPairs;
    throw ConfigError("unknown norm mode '" + std::string(id) + "' (expected positive-pairs|all-pairs)");
}

CohesionReport partitionCohesion(const Partition& p, const MembershipProfile& prof, const OperatorConfig& cfg,
                                 NormMode mode) {
    if (p.numNodes() != prof.size()) throw ContractViolation("partition does not cover the membership profile");
    CohesionReport report;
    report.mode = mode;
    double sizeSum = 0.0, accPos = 0.0, accAll = 0.0;
    for (std::size_t c = 0; c < p.numCommunities(); ++c) {
        const auto& members = p.members(c);
        if (members.size() < 2) continue;
        CommunityCohesion cc;
        cc.community = c;
        cc.size = members.size();
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const double r = pairRisk(members[a], members[b], prof, cfg);
                cc.jdj += r;
                ++cc.allPairs;
                if (r > 0.0) ++cc.positivePairs;
            }
        }
        cc.normalizedAll = cc.jdj / static_cast<double>(cc.allPairs);
        if (cc.positivePairs > 0) {
            cc.normalizedPositive = cc.jdj / static_cast<double>(cc.positivePairs);
        } else {
            cc.normalizedPositive = 0.0;
            cc.flagged = true;
        }
        cc.normalized = mode == NormMode::PositivePairs ? cc.normalizedPositive : cc.normalizedAll;
        const double w = static_cast<double>(cc.size);
        sizeSum += w;
        accPos += cc.normalizedPositive * w;
        accAll += cc.normalizedAll * w;
        report.communities.push_back(cc);
    }
    if (report.communities.empty())
        throw UndefinedScoreError("undefined-score: no community has more than one member");
    report.polPositivePairs = accPos / sizeSum;
    report.polAllPairs = accAll / sizeSum;
    report.pol = mode == NormMode::PositivePairs ? report.polPositivePairs : report.polAllPairs;
    return report;
}

}  // namespace polcd
