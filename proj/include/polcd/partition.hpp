#pragma once

#include <cstddef>
#include <vector>

namespace polcd {

/// Node -> community assignment. Community ids are contiguous from 0 and are
/// numbered in order of first appearance when scanning nodes by index.
class Partition {
public:
    Partition() = default;

    /// Builds a partition from arbitrary (non-negative) labels; labels are compacted.
    explicit Partition(const std::vector<std::size_t>& labels);

    static Partition singletons(std::size_t n);
    static Partition single(std::size_t n);

    std::size_t numNodes() const noexcept { return assignment_.size(); }
    std::size_t numCommunities() const noexcept { return members_.size(); }

    std::size_t communityOf(std::size_t node) const { return assignment_.at(node); }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

    /// Members of community c in ascending node order.
    const std::vector<std::size_t>& members(std::size_t c) const { return members_.at(c); }
    const std::vector<std::vector<std::size_t>>& communities() const noexcept { return members_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> assignment_;
    std::vector<std::vector<std::size_t>> members_;
};

}  // namespace polcd
