#pragma once

// Worked examples used across the unit and acceptance suites.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polcd/graph.hpp"
#include "polcd/matrix.hpp"
#include "polcd/operators.hpp"
#include "polcd/polarization.hpp"

namespace fixtures {

inline polcd::OperatorConfig maxProduct() {
    polcd::OperatorConfig cfg;
    cfg.grouping = polcd::Grouping::Max;
    cfg.overlap = polcd::Overlap::Product;
    return cfg;
}

inline polcd::OperatorConfig maxMin() {
    polcd::OperatorConfig cfg;
    cfg.grouping = polcd::Grouping::Max;
    cfg.overlap = polcd::Overlap::Min;
    return cfg;
}

/// Four crisp nodes, poles (A, B, A, B).
inline polcd::MembershipProfile fourCrisp() { return {{1, 0, 1, 0}, {0, 1, 0, 1}}; }

/// Eight crisp nodes, poles (A, B, B, A, A, A, B, B).
inline polcd::MembershipProfile eightCrisp() {
    return {{1, 0, 0, 1, 1, 1, 0, 0}, {0, 1, 1, 0, 0, 0, 1, 1}};
}

/// Seven fuzzy nodes of the worked blending example.
inline polcd::MembershipProfile sevenFuzzy() {
    return {{0.022, 0.756, 0.751, 0.5, 0.001, 0.102, 0.889}, {0.878, 0.144, 0.099, 0.5, 0.989, 0.888, 0.112}};
}

/// Its structural adjacency (unit weights).
inline constexpr std::array<std::array<int, 7>, 7> kSevenAdjacency{{
    {0, 1, 1, 0, 1, 0, 1},
    {1, 0, 1, 0, 0, 0, 0},
    {1, 1, 0, 1, 1, 0, 1},
    {0, 0, 1, 0, 1, 0, 0},
    {1, 0, 1, 1, 0, 1, 1},
    {0, 0, 0, 0, 1, 0, 1},
    {1, 0, 1, 0, 1, 1, 0},
}};

/// Printed dialogue matrix, scaled by its printed normalizer 22.574 (3 decimals).
inline constexpr double kSevenPrintedNormalizer = 22.574;
inline constexpr std::array<std::array<double, 7>, 7> kSevenPrintedDialogue{{
    {0.000, 0.336, 0.341, 0.561, 0.978, 0.910, 0.219},
    {0.336, 0.000, 0.892, 0.622, 0.252, 0.329, 0.872},
    {0.341, 0.892, 0.000, 0.625, 0.257, 0.333, 0.912},
    {0.561, 0.622, 0.625, 0.000, 0.506, 0.556, 0.556},
    {0.978, 0.252, 0.257, 0.506, 0.000, 0.899, 0.121},
    {0.910, 0.329, 0.333, 0.556, 0.899, 0.000, 0.211},
    {0.219, 0.872, 0.912, 0.556, 0.121, 0.211, 0.000},
}};

/// 0/1 conflict pattern for eightCrisp (scale 1/32).
inline constexpr std::array<std::array<int, 8>, 8> kEightRiskPattern{{
    {0, 1, 1, 0, 0, 0, 1, 1},
    {1, 0, 0, 1, 1, 1, 0, 0},
    {1, 0, 0, 1, 1, 1, 0, 0},
    {0, 1, 1, 0, 0, 0, 1, 1},
    {0, 1, 1, 0, 0, 0, 1, 1},
    {0, 1, 1, 0, 0, 0, 1, 1},
    {1, 0, 0, 1, 1, 1, 0, 0},
    {1, 0, 0, 1, 1, 1, 0, 0},
}};

/// 0/1 dialogue pattern for eightCrisp (scale 1/24).
inline constexpr std::array<std::array<int, 8>, 8> kEightDialoguePattern{{
    {0, 0, 0, 1, 1, 1, 0, 0},
    {0, 0, 1, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 0, 0, 1, 1},
    {1, 0, 0, 0, 1, 1, 0, 0},
    {1, 0, 0, 1, 0, 1, 0, 0},
    {1, 0, 0, 1, 1, 0, 0, 0},
    {0, 1, 1, 0, 0, 0, 0, 1},
    {0, 1, 1, 0, 0, 0, 1, 0},
}};

/// Subsets (1-based labels) and their tabulated risk / dialogue measure values
/// for fourCrisp under max/product.
struct TabulatedSubset {
    std::vector<std::size_t> members;  // 1-based
    double risk;
    double dialogue;
};

inline std::vector<TabulatedSubset> fourCrispTable() {
    return {
        {{1, 2}, 0.25, 0.0},      {{1, 3}, 0.0, 0.5},       {{1, 4}, 0.25, 0.0},      {{2, 3}, 0.25, 0.0},
        {{2, 4}, 0.0, 0.5},       {{3, 4}, 0.25, 0.0},      {{1, 2, 3}, 0.5, 0.5},    {{1, 2, 4}, 0.5, 0.5},
        {{1, 3, 4}, 0.5, 0.5},    {{2, 3, 4}, 0.5, 0.5},    {{1, 2, 3, 4}, 1.0, 1.0},
    };
}

inline std::vector<std::size_t> zeroBased(const std::vector<std::size_t>& oneBased) {
    std::vector<std::size_t> out;
    for (auto v : oneBased) out.push_back(v - 1);
    return out;
}

template <std::size_t N>
polcd::WeightMatrix weightsFrom(const std::array<std::array<int, N>, N>& a) {
    polcd::Matrix m(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i][j];
    return polcd::WeightMatrix(std::move(m));
}

inline polcd::WeightMatrix fromEdges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                     double w = 1.0) {
    polcd::Matrix m(n);
    for (auto [a, b] : edges) m(a, b) = m(b, a) = w;
    return polcd::WeightMatrix(std::move(m));
}

inline polcd::WeightedGraph sevenGraph() {
    std::vector<std::string> labels;
    for (int i = 1; i <= 7; ++i) labels.push_back(std::to_string(i));
    return {labels, weightsFrom(kSevenAdjacency)};
}

/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline polcd::WeightMatrix bridgedTriangles() {
    return fromEdges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

}  // namespace fixtures
