#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polcd/matrix.hpp"
#include "polcd/operators.hpp"
#include "polcd/polarization.hpp"

namespace polcd {

/// Set function over at most 64 players; bit k of the mask marks player k.
using SetFunction = std::function<double(std::uint64_t)>;

inline constexpr std::size_t kBruteForceShapleyLimit = 10;

/// Exact Shapley value of `player` in `mu` restricted to `ground`, averaging the
/// marginal contribution over every ordering of `ground`. No renormalization.
/// Throws SizeLimitError when |ground| exceeds kBruteForceShapleyLimit.
double shapleyBruteForce(const SetFunction& mu, std::span<const std::size_t> ground, std::size_t player);

/// Shapley value over the full ground set {0..n-1}.
double shapleyBruteForce(const SetFunction& mu, std::size_t n, std::size_t player);

/// Adapts a 2-additive measure (copied) to a SetFunction; requires n <= 64.
SetFunction asSetFunction(const TwoAdditiveFuzzyMeasure& m);

/// Sh_i = Σ_k P_ik, summed in ascending k.
double shapleyClosedForm(const TwoAdditiveFuzzyMeasure& m, std::size_t i);

/// Sh_i^j = Σ_{k≠j} P_ik, summed in ascending k. Requires i != j.
double shapleyRestricted(const TwoAdditiveFuzzyMeasure& m, std::size_t i, std::size_t j);

struct ShapleyVector {
    std::vector<double> values;
};

ShapleyVector shapleyVector(const TwoAdditiveFuzzyMeasure& m);

struct AssociatedGraphMatrix {
    Matrix entries;
    Symmetrizer symmetrizer = Symmetrizer::Mean;
};

/// F_ij = ξ(Sh_i − Sh_i^j, Sh_j − Sh_j^i), with each difference taken as the
/// pair coefficient directly (the 2-additive shortcut), never by enumeration.
AssociatedGraphMatrix associatedGraph(const TwoAdditiveFuzzyMeasure& m, Symmetrizer xi);

/// Same construction on a raw pairwise matrix that may be asymmetric.
AssociatedGraphMatrix associatedGraph(const Matrix& pairwise, Symmetrizer xi);

}  // namespace polcd
