#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polcd/matrix.hpp"
#include "polcd/operators.hpp"
#include "polcd/partition.hpp"

namespace polcd {

/// Per-node membership degrees to the two poles. The degrees need not sum to 1.
struct MembershipProfile {
    std::vector<double> etaA;
    std::vector<double> etaB;

    MembershipProfile() = default;
    /// Throws ContractViolation on length mismatch or values outside [0,1].
    MembershipProfile(std::vector<double> a, std::vector<double> b);

    std::size_t size() const noexcept { return etaA.size(); }
    MembershipProfile swappedPoles() const { return {etaB, etaA}; }
};

enum class CapacityKind { Risk, Dialogue, Combined };

std::string toString(CapacityKind kind);

/**
 * Normalized pairwise coefficient matrix of a 2-additive fuzzy measure.
 *
 * Symmetric, zero diagonal, non-negative, and the entries over ordered pairs
 * (i != j) sum to 1. `normalizer` is the ordered-pair total of the raw pair
 * values the entries were divided by (1 for convex combinations).
 */
class PairwiseCapacityMatrix {
public:
    PairwiseCapacityMatrix(Matrix entries, CapacityKind kind, double normalizer);

    std::size_t size() const noexcept { return entries_.size(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
    const Matrix& entries() const noexcept { return entries_; }
    CapacityKind kind() const noexcept { return kind_; }
    double normalizer() const noexcept { return normalizer_; }

private:
    Matrix entries_;
    CapacityKind kind_;
    double normalizer_;
};

/// μ(S) = Σ_{i,j∈S, i≠j} P_ij.
class TwoAdditiveFuzzyMeasure {
public:
    explicit TwoAdditiveFuzzyMeasure(PairwiseCapacityMatrix matrix) : matrix_(std::move(matrix)) {}

    const PairwiseCapacityMatrix& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return matrix_.size(); }

private:
    PairwiseCapacityMatrix matrix_;
};

/// φ(ϕ(ηA(i), ηB(j)), ϕ(ηA(j), ηB(i))). Requires i != j.
double pairRisk(std::size_t i, std::size_t j, const MembershipProfile& prof, const OperatorConfig& cfg);

/// Sum of pairRisk over unordered pairs of distinct members of `nodes`.
double jdjPol(std::span<const std::size_t> nodes, const MembershipProfile& prof, const OperatorConfig& cfg);

/// P⁻: pair risks divided by their ordered-pair total. Throws DegeneratePolarizationError if that total is 0.
PairwiseCapacityMatrix buildRiskMatrix(const MembershipProfile& prof, const OperatorConfig& cfg);

/// P⁺: negated pair risks divided by their ordered-pair total. Throws DegenerateDialogueError if that total is 0.
PairwiseCapacityMatrix buildDialogueMatrix(const MembershipProfile& prof, const OperatorConfig& cfg);

double muValue(const TwoAdditiveFuzzyMeasure& m, std::span<const std::size_t> nodes);

/// Σ α_k P_k. Weights must be non-negative and sum to 1 within 1e-12.
TwoAdditiveFuzzyMeasure convexCombine(std::span<const TwoAdditiveFuzzyMeasure> measures,
                                      std::span<const double> weights);

enum class NormMode { PositivePairs, AllPairs };

std::string toString(NormMode mode);
NormMode parseNormMode(std::string_view id);

struct CommunityCohesion {
    std::size_t community = 0;
    std::size_t size = 0;
    double jdj = 0.0;            ///< raw sum of pair risks
    std::size_t positivePairs = 0;
    std::size_t allPairs = 0;
    double normalized = 0.0;     ///< under the report's mode
    double normalizedPositive = 0.0;
    double normalizedAll = 0.0;
    bool flagged = false;        ///< positive-pairs denominator was 0
};

struct CohesionReport {
    NormMode mode = NormMode::PositivePairs;
    std::vector<CommunityCohesion> communities;  ///< only communities with more than one member
    double pol = 0.0;
    double polPositivePairs = 0.0;
    double polAllPairs = 0.0;
};

/// Size-weighted average of normalized community JDJ over non-singleton communities.
/// Throws UndefinedScoreError when every community is a singleton.
CohesionReport partitionCohesion(const Partition& p, const MembershipProfile& prof, const OperatorConfig& cfg,
                                 NormMode mode);

}  // namespace polcd
