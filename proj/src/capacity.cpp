#include "polcd/capacity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polcd/errors.hpp"

namespace polcd {

double shapleyBruteForce(const SetFunction& mu, std::span<const std::size_t> ground, std::size_t player) {
    if (ground.size() > kBruteForceShapleyLimit)
        throw SizeLimitError("brute-force Shapley is limited to " + std::to_string(kBruteForceShapleyLimit) +
                             " players; use the closed form");
    if (std::find(ground.begin(), ground.end(), player) == ground.end())
        throw ContractViolation("player is not part of the ground set");
    for (auto g : ground)
        if (g >= 64) throw ContractViolation("set functions address at most 64 players");

    std::vector<std::size_t> order(ground.begin(), ground.end());
    std::sort(order.begin(), order.end());
    const std::uint64_t playerBit = std::uint64_t{1} << player;
    double total = 0.0;
    std::uint64_t count = 0;
    do {
        std::uint64_t pred = 0;
        for (auto k : order) {
            if (k == player) break;
            pred |= std::uint64_t{1} << k;
        }
        total += mu(pred | playerBit) - mu(pred);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return total / static_cast<double>(count);
}

double shapleyBruteForce(const SetFunction& mu, std::size_t n, std::size_t player) {
    std::vector<std::size_t> ground(n);
    std::iota(ground.begin(), ground.end(), std::size_t{0});
    return shapleyBruteForce(mu, ground, player);
}

SetFunction asSetFunction(const TwoAdditiveFuzzyMeasure& m) {
    if (m.size() > 64) throw ContractViolation("set function adapter supports at most 64 nodes");
    return [m](std::uint64_t mask) {
        std::vector<std::size_t> nodes;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (mask & (std::uint64_t{1} << k)) nodes.push_back(k);
        return muValue(m, nodes);
    };
}

double shapleyClosedForm(const TwoAdditiveFuzzyMeasure& m, std::size_t i) {
    if (i >= m.size()) throw ContractViolation("node index out of range");
    double s = 0.0;
    for (double v : m.matrix().entries().row(i)) s += v;
    return s;
}

double shapleyRestricted(const TwoAdditiveFuzzyMeasure& m, std::size_t i, std::size_t j) {
    if (i == j) throw ContractViolation("restricted Shapley value needs i != j");
    if (i >= m.size() || j >= m.size()) throw ContractViolation("node index out of range");
    const auto row = m.matrix().entries().row(i);
    double s = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (k != j) s += row[k];
    return s;
}

ShapleyVector shapleyVector(const TwoAdditiveFuzzyMeasure& m) {
    ShapleyVector out;
    out.values.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out.values.push_back(shapleyClosedForm(m, i));
    return out;
}

AssociatedGraphMatrix associatedGraph(const Matrix& pairwise, Symmetrizer xi) {
    const std::size_t n = pairwise.size();
    AssociatedGraphMatrix out{Matrix(n), xi};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.entries(i, j) = evalSymmetrizer(xi, pairwise(i, j), pairwise(j, i));
    return out;
}

AssociatedGraphMatrix associatedGraph(const TwoAdditiveFuzzyMeasure& m, Symmetrizer xi) {
    return associatedGraph(m.matrix().entries(), xi);
}

}  // namespace polcd
