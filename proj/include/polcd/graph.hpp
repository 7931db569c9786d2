#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polcd/matrix.hpp"
#include "polcd/partition.hpp"

namespace polcd {

/**
 * Symmetric non-negative weights between n vertices plus a separate
 * per-vertex self weight.
 *
 * The off-diagonal matrix always has a zero diagonal. Self weights only
 * appear after aggregation: a vertex standing for a group of original nodes
 * carries the undirected weight of the edges inside that group. Strengths
 * count a self weight twice, so that the sum of strengths (2m) is preserved
 * by aggregation.
 */
class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(Matrix offDiagonal, std::vector<double> selfWeights = {});

    std::size_t size() const noexcept { return off_.size(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return off_(i, j); }
    const Matrix& offDiagonal() const noexcept { return off_; }
    double selfWeight(std::size_t i) const noexcept { return self_[i]; }
    const std::vector<double>& selfWeights() const noexcept { return self_; }

    /// k_i = sum_j W_ij + 2 * self_i.
    double strength(std::size_t i) const noexcept { return strengths_[i]; }
    const std::vector<double>& strengths() const noexcept { return strengths_; }

    /// 2m, the sum of all strengths.
    double twoM() const noexcept { return twoM_; }

    /// Vertices j != i with W_ij > 0, ascending.
    std::vector<std::size_t> neighbors(std::size_t i) const;

    /// Induced sub-matrix on `nodes` (in the given order).
    WeightMatrix induced(const std::vector<std::size_t>& nodes) const;

    /// One vertex per community of `p`: off-diagonal entries sum inter-community
    /// weight, self weights collect intra-community weight.
    WeightMatrix aggregate(const Partition& p) const;

    friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
        return a.off_ == b.off_ && a.self_ == b.self_;
    }

private:
    Matrix off_;
    std::vector<double> self_;
    std::vector<double> strengths_;
    double twoM_ = 0.0;
};

/// Connected vertex sets ordered by size descending, ties broken by smallest member index.
struct ComponentDecomposition {
    std::vector<std::vector<std::size_t>> components;
};

ComponentDecomposition connectedComponents(const WeightMatrix& w);

/// Undirected weighted graph with labelled nodes. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<std::string> labels, WeightMatrix weights);

    std::size_t numNodes() const noexcept { return labels_.size(); }
    std::size_t numEdges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> indexOf(const std::string& label) const;

    const WeightMatrix& weights() const noexcept { return weights_; }
    const Matrix& adjacency() const noexcept { return weights_.offDiagonal(); }
    double strength(std::size_t i) const noexcept { return weights_.strength(i); }
    /// m = half the sum of strengths.
    double totalWeight() const noexcept { return weights_.twoM() / 2.0; }

    WeightedGraph induced(const std::vector<std::size_t>& nodes) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    WeightMatrix weights_;
};

struct LoadOptions {
    /// Rows (a,b) and (b,a) accumulate into one undirected weight. When false a
    /// reverse row of an existing edge is reported as a parse error.
    bool collapseDirected = true;
    /// Replace every accumulated weight by 1.
    bool binarize = false;
};

/// Reads the `source,target[,weight]` edge CSV. Node order is first appearance.
WeightedGraph loadEdgeList(const std::filesystem::path& path, const LoadOptions& opts = {});
WeightedGraph parseEdgeList(const std::string& text, const LoadOptions& opts = {});

/// Induced subgraph on the largest connected component.
WeightedGraph largestComponent(const WeightedGraph& g);

/// Community graph: labels are the community ids ("0", "1", ...).
WeightedGraph aggregateByPartition(const WeightedGraph& g, const Partition& p);

}  // namespace polcd
