#include <string>

#include "polcd/community.hpp"
#include "polcd/errors.hpp"

namespace polcd {

double modularity(const WeightMatrix& w, const Partition& p) {
    if (p.numNodes() != w.size()) throw ContractViolation("partition does not cover the weight matrix");
    const double twoM = w.twoM();
    if (!(twoM > 0.0)) throw UndefinedModularityError("undefined-modularity: graph has no weight");
    double q = 0.0;
    for (const auto& members : p.communities()) {
        double in = 0.0, tot = 0.0;
        for (auto i : members) {
            tot += w.strength(i);
            in += 2.0 * w.selfWeight(i);
            for (auto j : members) in += w(i, j);
        }
        q += in / twoM - (tot / twoM) * (tot / twoM);
    }
    return q;
}

LouvainState::LouvainState(const WeightMatrix& w) : LouvainState(w, Partition::singletons(w.size())) {}

LouvainState::LouvainState(const WeightMatrix& w, const Partition& initial)
    : w_(w), community_(w.size()), tot_(w.size(), 0.0), count_(w.size(), 0) {
    if (initial.numNodes() != w.size()) throw ContractViolation("initial partition does not cover the matrix");
    if (!(w.twoM() > 0.0)) throw UndefinedModularityError("undefined-modularity: graph has no weight");
    // community ids are the smallest member of each initial community
    for (const auto& members : initial.communities()) {
        const std::size_t id = members.front();
        for (auto i : members) {
            community_[i] = id;
            tot_[id] += w.strength(i);
            ++count_[id];
        }
    }
}

double LouvainState::weightTo(std::size_t i, std::size_t c) const {
    const auto row = w_.offDiagonal().row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (j != i && community_[j] == c) s += row[j];
    return s;
}

double LouvainState::gain(std::size_t i, double kiTarget, double totTarget, double kiOwn) const {
    const double m = w_.twoM() / 2.0;
    const double ki = w_.strength(i);
    const double totOwnRest = tot_[community_[i]] - ki;
    return (kiTarget - kiOwn) / m - ki * (totTarget - totOwnRest) / (2.0 * m * m);
}

double LouvainState::deltaQ(std::size_t i, std::size_t target) const {
    if (i >= size()) throw ContractViolation("node index out of range");
    if (!isCommunity(target)) throw ContractViolation("unknown community id " + std::to_string(target));
    const std::size_t own = community_[i];
    if (target == own) return 0.0;
    return gain(i, weightTo(i, target), tot_[target], weightTo(i, own));
}

void LouvainState::move(std::size_t i, std::size_t target) {
    if (i >= size()) throw ContractViolation("node index out of range");
    if (!isCommunity(target)) throw ContractViolation("unknown community id " + std::to_string(target));
    const std::size_t own = community_[i];
    if (own == target) return;
    const double ki = w_.strength(i);
    tot_[own] -= ki;
    --count_[own];
    if (count_[own] == 0) tot_[own] = 0.0;
    tot_[target] += ki;
    ++count_[target];
    community_[i] = target;
}

}  // namespace polcd
