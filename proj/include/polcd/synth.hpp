#pragma once

#include <cstddef>
#include <cstdint>

#include "polcd/graph.hpp"
#include "polcd/polarization.hpp"

namespace polcd {

/// Planted-partition graph with two-pole memberships.
struct SyntheticSpec {
    std::size_t nodesPerBlock = 30;
    std::size_t blocks = 2;
    double intraProb = 0.3;
    double interProb = 0.05;
    /// >= 1; larger values push membership degrees towards {0,1}.
    double poleSharpness = 8.0;
    /// Limit sharpness -> infinity: memberships exactly 0/1 and no noise.
    bool crisp = false;
    /// Bound on the perturbation of ηB around 1 − ηA.
    double noise = 0.05;
    std::uint64_t seed = 0;
};

struct SyntheticInstance {
    WeightedGraph graph;
    MembershipProfile profile;
    std::vector<std::size_t> block;  ///< planted block of each node
};

/**
 * Block b nodes get ηA concentrated at (b mod 2): ηA = u^s for even blocks and
 * 1 − u^s for odd ones, u uniform, s the sharpness. ηB = clip(1 − ηA + e) with
 * |e| <= noise. Edges are Bernoulli(intra) inside blocks and Bernoulli(inter)
 * across. A node left without edges is attached to a random node of its own
 * block so the edge CSV round-trips every node. Deterministic per seed.
 *
 * Throws ConfigError for invalid parameters.
 */
SyntheticInstance generateSynthetic(const SyntheticSpec& spec);

}  // namespace polcd
