#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polcd/capacity.hpp"
#include "polcd/graph.hpp"
#include "polcd/operators.hpp"
#include "polcd/partition.hpp"
#include "polcd/polarization.hpp"

namespace polcd {

/// Newman–Girvan modularity over ordered pairs, self weights included.
/// Throws UndefinedModularityError when 2m = 0.
double modularity(const WeightMatrix& w, const Partition& p);

/**
 * Mutable community assignment over a fixed weight matrix with the running
 * community totals needed for O(n) move gains.
 *
 * Community ids are the labels of the founding nodes (0..n-1); a community
 * id is valid while the community is non-empty.
 */
class LouvainState {
public:
    explicit LouvainState(const WeightMatrix& w);
    LouvainState(const WeightMatrix& w, const Partition& initial);

    std::size_t size() const noexcept { return community_.size(); }
    std::size_t communityOf(std::size_t i) const { return community_.at(i); }
    bool isCommunity(std::size_t c) const noexcept { return c < count_.size() && count_[c] > 0; }

    /// Σ_{j∈C, j≠i} W_ij.
    double weightTo(std::size_t i, std::size_t c) const;

    /// Modularity change caused by moving i alone into community `target`.
    double deltaQ(std::size_t i, std::size_t target) const;

    void move(std::size_t i, std::size_t target);

    /// Gain of moving i into a community with internal link weight `kiTarget`
    /// and total strength `totTarget`, given i's link weight `kiOwn` to the rest
    /// of its own community.
    double gain(std::size_t i, double kiTarget, double totTarget, double kiOwn) const;

    double total(std::size_t c) const { return tot_.at(c); }
    Partition partition() const { return Partition(community_); }
    double modularity() const { return polcd::modularity(w_, partition()); }
    const WeightMatrix& weights() const noexcept { return w_; }

private:
    const WeightMatrix& w_;
    std::vector<std::size_t> community_;
    std::vector<double> tot_;
    std::vector<std::size_t> count_;
};

struct BlendSpec {
    double gamma = 1.0;
    /// Scale F by ΣA/ΣF before blending so both terms carry the same mass.
    bool rescale = false;
};

/// M = γA + (1−γ)F.
WeightMatrix blend(const WeightMatrix& a, const AssociatedGraphMatrix& f, const BlendSpec& spec);

struct PassRecord {
    std::size_t component = 0;  ///< index into LouvainTrace::components
    std::size_t level = 0;
    Partition partition;        ///< over the component's nodes, in component order
    double modularity = 0.0;    ///< of `partition` on the component's gain matrix
    std::vector<double> sweepModularity;  ///< after each local-moving sweep that moved a node
    std::size_t moves = 0;
};

struct LouvainTrace {
    std::uint64_t permutationSeed = 0;
    std::vector<std::vector<std::size_t>> components;
    std::vector<PassRecord> passes;
    std::vector<std::string> warnings;
};

struct Detection {
    Partition partition;
    LouvainTrace trace;
};

/**
 * Two-role Louvain. Candidate moves for a node are the communities of its
 * neighbours in `structure`; move gains are evaluated on `gain`. Both matrices
 * are aggregated by community after each local-moving phase, and the process
 * recurses while the aggregated structure differs from the previous level.
 *
 * Visiting order is a pseudorandom permutation drawn from `seed`, redrawn at
 * every level. Ties at the best gain go to the smallest community id; a node
 * only moves for a strictly positive gain. Disconnected structure is split
 * into components that are processed independently (a warning is recorded).
 */
Detection detectCommunities(const WeightMatrix& structure, const WeightMatrix& gain, std::uint64_t seed);

/// Classic Louvain: structure and gain are the same matrix.
Detection louvain(const WeightMatrix& w, std::uint64_t seed);

Detection polarizationLouvain(const WeightedGraph& g, const AssociatedGraphMatrix& f, const BlendSpec& spec,
                              std::uint64_t seed);

struct SweepOptions {
    std::uint64_t seed = 0;
    NormMode normMode = NormMode::PositivePairs;
    bool rescale = false;
    bool parallel = true;
};

struct SweepRow {
    std::optional<double> gamma;  ///< empty for the classic Louvain baseline
    Partition partition;
    double modularity = 0.0;       ///< on the structural adjacency A
    double blendModularity = 0.0;  ///< on M (equals `modularity` for the baseline)
    CohesionReport cohesion;
    LouvainTrace trace;
};

struct SweepReport {
    std::uint64_t seed = 0;
    OperatorConfig operators;
    NormMode normMode = NormMode::PositivePairs;
    bool rescale = false;
    std::vector<SweepRow> rows;  ///< baseline first, then one row per requested γ
};

/// Baseline Louvain plus one Polarization Louvain run per γ, each scored with
/// partitionCohesion. The dialogue measure is built from (prof, operators).
SweepReport gammaSweep(const WeightedGraph& g, const MembershipProfile& prof, const OperatorConfig& operators,
                       std::span<const double> gammas, const SweepOptions& opts);

}  // namespace polcd
