#pragma once

// Independent reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "polcd/graph.hpp"
#include "polcd/random.hpp"

namespace oracles {

/// Q from the textbook double sum over ordered pairs (i, j), including i == j.
inline double modularityDoubleSum(const polcd::WeightMatrix& w, const std::vector<std::size_t>& label) {
    const std::size_t n = w.size();
    std::vector<double> k(n, 0.0);
    double twoM = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) k[i] += (i == j ? 2.0 * w.selfWeight(i) : w(i, j));
        twoM += k[i];
    }
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (label[i] != label[j]) continue;
            const double a = i == j ? 2.0 * w.selfWeight(i) : w(i, j);
            q += a - k[i] * k[j] / twoM;
        }
    return q / twoM;
}

/// Calls `visit` with every set partition of {0..n-1} as a restricted growth string.
inline void forEachSetPartition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t maxLabel) {
        if (pos == n) {
            visit(rgs);
            return;
        }
        for (std::size_t c = 0; c <= maxLabel + 1; ++c) {
            rgs[pos] = c;
            rec(pos + 1, c > maxLabel ? c : maxLabel);
        }
    };
    if (n == 0) return;
    rgs[0] = 0;
    rec(1, 0);
}

inline double bestModularityExhaustive(const polcd::WeightMatrix& w, std::size_t* count = nullptr) {
    double best = -2.0;
    std::size_t seen = 0;
    forEachSetPartition(w.size(), [&](const std::vector<std::size_t>& rgs) {
        ++seen;
        best = std::max(best, modularityDoubleSum(w, rgs));
    });
    if (count) *count = seen;
    return best;
}

/// Erdős–Rényi style random weighted graph with integer weights in [1, maxWeight].
inline polcd::WeightMatrix randomGraph(polcd::Rng& rng, std::size_t n, double p, int maxWeight = 3) {
    polcd::Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) m(i, j) = m(j, i) = 1.0 + static_cast<double>(rng.below(maxWeight));
    return polcd::WeightMatrix(std::move(m));
}

/// BFS connectivity of `nodes` inside the graph of `w`.
inline bool inducesConnected(const polcd::WeightMatrix& w, const std::vector<std::size_t>& nodes) {
    if (nodes.size() <= 1) return true;
    std::vector<bool> in(w.size(), false), seen(w.size(), false);
    for (auto v : nodes) in[v] = true;
    std::vector<std::size_t> stack{nodes.front()};
    seen[nodes.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < w.size(); ++v)
            if (in[v] && !seen[v] && w(u, v) > 0.0) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == nodes.size();
}

}  // namespace oracles
