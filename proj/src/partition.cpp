#include "polcd/partition.hpp"

#include <unordered_map>

namespace polcd {

Partition::Partition(const std::vector<std::size_t>& labels) {
    assignment_.resize(labels.size());
    std::unordered_map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(labels[i], members_.size());
        if (inserted) members_.emplace_back();
        assignment_[i] = it->second;
        members_[it->second].push_back(i);
    }
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    return Partition(labels);
}

Partition Partition::single(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
}

}  // namespace polcd
