#pragma once

#include <string>
#include <string_view>

namespace polcd {

/// Disjunctive aggregation: commutative, monotone, φ(x,0)=x.
enum class Grouping { Max, ProbabilisticSum };
/// Conjunctive aggregation: commutative, monotone, ϕ(x,0)=0.
enum class Overlap { Min, Product, GeometricMean };
enum class Negation { Standard };
/// Combines the two directed Shapley differences into one associated-graph weight.
enum class Symmetrizer { Max, Min, Mean };

struct OperatorConfig {
    Grouping grouping = Grouping::Max;
    Overlap overlap = Overlap::Product;
    Negation negation = Negation::Standard;
    Symmetrizer symmetrizer = Symmetrizer::Mean;

    friend bool operator==(const OperatorConfig&, const OperatorConfig&) = default;
};

// All evaluators throw ContractViolation for arguments outside their domain
// ([0,1] for the first three, [-1,1] for the symmetrizer).
double evalGrouping(Grouping op, double x, double y);
double evalOverlap(Overlap op, double x, double y);
double evalNegation(Negation op, double x);
double evalSymmetrizer(Symmetrizer op, double x, double y);

inline double evalGrouping(const OperatorConfig& cfg, double x, double y) { return evalGrouping(cfg.grouping, x, y); }
inline double evalOverlap(const OperatorConfig& cfg, double x, double y) { return evalOverlap(cfg.overlap, x, y); }
inline double evalNegation(const OperatorConfig& cfg, double x) { return evalNegation(cfg.negation, x); }

// Registry ids: "max", "probabilistic-sum" / "min", "product", "geometric-mean" /
// "standard" / "max", "min", "mean". Unknown ids raise ConfigError.
Grouping parseGrouping(std::string_view id);
Overlap parseOverlap(std::string_view id);
Negation parseNegation(std::string_view id);
Symmetrizer parseSymmetrizer(std::string_view id);

std::string toString(Grouping op);
std::string toString(Overlap op);
std::string toString(Negation op);
std::string toString(Symmetrizer op);

}  // namespace polcd
