#include "polcd/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polcd/errors.hpp"
#include "polcd/random.hpp"

namespace polcd {

SyntheticInstance generateSynthetic(const SyntheticSpec& spec) {
    auto unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!unit(spec.intraProb) || !unit(spec.interProb)) throw ConfigError("probabilities must lie in [0,1]");
    if (spec.blocks < 1) throw ConfigError("blocks must be >= 1");
    if (spec.nodesPerBlock < 1) throw ConfigError("nodes per block must be >= 1");
    if (!(spec.poleSharpness >= 1.0)) throw ConfigError("pole sharpness must be >= 1");
    if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) throw ConfigError("noise must lie in [0,1]");

    const std::size_t n = spec.nodesPerBlock * spec.blocks;
    Rng rng(spec.seed);

    SyntheticInstance out;
    out.block.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.block[i] = i / spec.nodesPerBlock;

    std::vector<double> etaA(n), etaB(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool poleA = out.block[i] % 2 == 1;
        if (spec.crisp) {
            etaA[i] = poleA ? 1.0 : 0.0;
            etaB[i] = 1.0 - etaA[i];
            continue;
        }
        const double near = std::pow(rng.uniform(), spec.poleSharpness);
        etaA[i] = poleA ? 1.0 - near : near;
        const double e = (2.0 * rng.uniform() - 1.0) * spec.noise;
        etaB[i] = std::clamp(1.0 - etaA[i] + e, 0.0, 1.0);
    }

    Matrix adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = out.block[i] == out.block[j] ? spec.intraProb : spec.interProb;
            if (rng.bernoulli(p)) adj(i, j) = adj(j, i) = 1.0;
        }
    }
    for (std::size_t i = 0; i < n && n > 1; ++i) {
        bool isolated = true;
        for (std::size_t j = 0; j < n && isolated; ++j) isolated = adj(i, j) == 0.0;
        if (!isolated) continue;
        std::size_t j;
        if (spec.nodesPerBlock > 1) {
            const std::size_t start = out.block[i] * spec.nodesPerBlock;
            do {
                j = start + rng.below(spec.nodesPerBlock);
            } while (j == i);
        } else {
            do {
                j = rng.below(n);
            } while (j == i);
        }
        adj(i, j) = adj(j, i) = 1.0;
    }

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
    out.graph = WeightedGraph(std::move(labels), WeightMatrix(std::move(adj)));
    out.profile = MembershipProfile(std::move(etaA), std::move(etaB));
    return out;
}

}  // namespace polcd
