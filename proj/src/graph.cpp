#include "polcd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "polcd/errors.hpp"
#include "text_util.hpp"

namespace polcd {

// ---------------------------------------------------------------------------
// WeightMatrix

WeightMatrix::WeightMatrix(Matrix offDiagonal, std::vector<double> selfWeights)
    : off_(std::move(offDiagonal)), self_(std::move(selfWeights)) {
    const std::size_t n = off_.size();
    if (self_.empty()) self_.assign(n, 0.0);
    if (self_.size() != n) throw ContractViolation("self weight vector does not match matrix size");
    strengths_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (off_(i, i) != 0.0) throw ContractViolation("weight matrix diagonal must be zero");
        double k = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = off_(i, j);
            if (!(w >= 0.0) || !std::isfinite(w)) throw ContractViolation("weights must be finite and non-negative");
            if (w != off_(j, i)) throw ContractViolation("weight matrix must be symmetric");
            k += w;
        }
        if (!(self_[i] >= 0.0)) throw ContractViolation("self weights must be non-negative");
        strengths_[i] = k + 2.0 * self_[i];
        twoM_ += strengths_[i];
    }
}

std::vector<std::size_t> WeightMatrix::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    const auto row = off_.row(i);
    for (std::size_t j = 0; j < row.size(); ++j)
        if (j != i && row[j] > 0.0) out.push_back(j);
    return out;
}

WeightMatrix WeightMatrix::induced(const std::vector<std::size_t>& nodes) const {
    Matrix sub(nodes.size());
    std::vector<double> self(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        self[a] = self_.at(nodes[a]);
        for (std::size_t b = 0; b < nodes.size(); ++b)
            if (a != b) sub(a, b) = off_(nodes[a], nodes[b]);
    }
    return WeightMatrix(std::move(sub), std::move(self));
}

WeightMatrix WeightMatrix::aggregate(const Partition& p) const {
    if (p.numNodes() != size()) throw ContractViolation("partition does not cover the weight matrix");
    const std::size_t k = p.numCommunities();
    Matrix agg(k);
    std::vector<double> self(k, 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
        const std::size_t ci = p.communityOf(i);
        self[ci] += self_[i];
        for (std::size_t j = i + 1; j < size(); ++j) {
            const double w = off_(i, j);
            if (w == 0.0) continue;
            const std::size_t cj = p.communityOf(j);
            if (ci == cj) {
                self[ci] += w;
            } else {
                agg(std::min(ci, cj), std::max(ci, cj)) += w;
            }
        }
    }
    // mirror the upper triangle so the result is bitwise symmetric
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c + 1; d < k; ++d) agg(d, c) = agg(c, d);
    return WeightMatrix(std::move(agg), std::move(self));
}

ComponentDecomposition connectedComponents(const WeightMatrix& w) {
    const std::size_t n = w.size();
    std::vector<bool> seen(n, false);
    ComponentDecomposition out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const std::size_t u = comp[head];
            for (std::size_t v = 0; v < n; ++v) {
                if (!seen[v] && w(u, v) > 0.0) {
                    seen[v] = true;
                    comp.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    // components were discovered in order of smallest member, so a stable sort
    // by size keeps the tie-break
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(std::vector<std::string> labels, WeightMatrix weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (labels_.size() != weights_.size()) throw ContractViolation("label count does not match matrix size");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw ContractViolation("duplicate node label '" + labels_[i] + "'");
    }
}

std::size_t WeightedGraph::numEdges() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < numNodes(); ++i)
        for (std::size_t j = i + 1; j < numNodes(); ++j)
            if (adjacency()(i, j) > 0.0) ++e;
    return e;
}

std::optional<std::size_t> WeightedGraph::indexOf(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

WeightedGraph WeightedGraph::induced(const std::vector<std::size_t>& nodes) const {
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (auto i : nodes) labels.push_back(labels_.at(i));
    return WeightedGraph(std::move(labels), weights_.induced(nodes));
}

// ---------------------------------------------------------------------------
// Edge list ingestion

WeightedGraph parseEdgeList(const std::string& text, const LoadOptions& opts) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    // keyed by (min,max) so the accumulation order does not depend on hashing
    std::map<std::pair<std::size_t, std::size_t>, double> weights;
    std::map<std::pair<std::size_t, std::size_t>, bool> seenForward;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, labels.size());
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    bool haveHeader = false;
    bool hasWeightColumn = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (lineNo == 1) detail::stripBom(line);
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        auto fields = detail::splitCsv(trimmed);
        if (!haveHeader) {
            if (fields.size() < 2 || fields.size() > 3 || fields[0] != "source" || fields[1] != "target" ||
                (fields.size() == 3 && fields[2] != "weight"))
                throw ParseError("expected header 'source,target[,weight]'", lineNo);
            hasWeightColumn = fields.size() == 3;
            haveHeader = true;
            continue;
        }
        if (fields.size() < 2 || fields.size() > (hasWeightColumn ? 3u : 2u))
            throw ParseError("wrong number of fields", lineNo);
        if (fields[0].empty() || fields[1].empty()) throw ParseError("empty node label", lineNo);
        double w = 1.0;
        if (fields.size() == 3 && !fields[2].empty()) {
            auto parsed = detail::parseDouble(fields[2]);
            if (!parsed || !std::isfinite(*parsed) || *parsed < 0.0)
                throw ParseError("invalid weight '" + fields[2] + "'", lineNo);
            w = *parsed;
        }
        if (fields[0] == fields[1]) throw RejectedEdgeError("self-loop on node '" + fields[0] + "'", lineNo);
        const std::size_t a = intern(fields[0]);
        const std::size_t b = intern(fields[1]);
        const auto key = std::minmax(a, b);
        if (!opts.collapseDirected) {
            auto it = seenForward.find(key);
            const bool forward = a < b;
            if (it != seenForward.end() && it->second != forward)
                throw ParseError("reverse edge '" + fields[0] + "," + fields[1] + "' in undirected input", lineNo);
            seenForward[key] = forward;
        }
        weights[key] += w;
    }
    if (!haveHeader) throw EmptyGraphError("edge list is empty");
    if (labels.empty()) throw EmptyGraphError("edge list has a header but no edges");

    Matrix adj(labels.size());
    for (const auto& [key, w] : weights) {
        const double v = opts.binarize ? (w > 0.0 ? 1.0 : 0.0) : w;
        adj(key.first, key.second) = v;
        adj(key.second, key.first) = v;
    }
    return WeightedGraph(std::move(labels), WeightMatrix(std::move(adj)));
}

WeightedGraph loadEdgeList(const std::filesystem::path& path, const LoadOptions& opts) {
    return parseEdgeList(detail::readFile(path), opts);
}

WeightedGraph largestComponent(const WeightedGraph& g) {
    if (g.numNodes() == 0) throw EmptyGraphError("graph is empty");
    auto dec = connectedComponents(g.weights());
    return g.induced(dec.components.front());
}

WeightedGraph aggregateByPartition(const WeightedGraph& g, const Partition& p) {
    if (p.numNodes() != g.numNodes()) throw ContractViolation("partition does not cover the graph");
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < p.numCommunities(); ++c) labels.push_back(std::to_string(c));
    return WeightedGraph(std::move(labels), g.weights().aggregate(p));
}

}  // namespace polcd
