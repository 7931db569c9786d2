#include "polcd/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polcd/errors.hpp"

namespace polcd {

namespace {

void requireUnit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0))
        throw ContractViolation(std::string(what) + ": argument " + std::to_string(x) + " outside [0,1]");
}

}  // namespace

double evalGrouping(Grouping op, double x, double y) {
    requireUnit(x, "grouping");
    requireUnit(y, "grouping");
    switch (op) {
        case Grouping::Max: return std::max(x, y);
        case Grouping::ProbabilisticSum: return x + y - x * y;
    }
    throw ContractViolation("unknown grouping operator");
}

double evalOverlap(Overlap op, double x, double y) {
    requireUnit(x, "overlap");
    requireUnit(y, "overlap");
    switch (op) {
        case Overlap::Min: return std::min(x, y);
        case Overlap::Product: return x * y;
        case Overlap::GeometricMean: return std::sqrt(x * y);
    }
    throw ContractViolation("unknown overlap operator");
}

double evalNegation(Negation op, double x) {
    requireUnit(x, "negation");
    switch (op) {
        case Negation::Standard: return 1.0 - x;
    }
    throw ContractViolation("unknown negation operator");
}

double evalSymmetrizer(Symmetrizer op, double x, double y) {
    if (!(x >= -1.0 && x <= 1.0) || !(y >= -1.0 && y <= 1.0))
        throw ContractViolation("symmetrizer: arguments outside [-1,1]");
    switch (op) {
        case Symmetrizer::Max: return std::max(x, y);
        case Symmetrizer::Min: return std::min(x, y);
        case Symmetrizer::Mean: return 0.5 * x + 0.5 * y;
    }
    throw ContractViolation("unknown symmetrizer");
}

Grouping parseGrouping(std::string_view id) {
    if (id == "max") return Grouping::Max;
    if (id == "probabilistic-sum") return Grouping::ProbabilisticSum;
    throw ConfigError("unknown grouping '" + std::string(id) + "' (expected max|probabilistic-sum)");
}

Overlap parseOverlap(std::string_view id) {
    if (id == "min") return Overlap::Min;
    if (id == "product") return Overlap::Product;
    if (id == "geometric-mean") return Overlap::GeometricMean;
    throw ConfigError("unknown overlap '" + std::string(id) + "' (expected min|product|geometric-mean)");
}

Negation parseNegation(std::string_view id) {
    if (id == "standard") return Negation::Standard;
    throw ConfigError("unknown negation '" + std::string(id) + "' (expected standard)");
}

Symmetrizer parseSymmetrizer(std::string_view id) {
    if (id == "max") return Symmetrizer::Max;
    if (id == "min") return Symmetrizer::Min;
    if (id == "mean") return Symmetrizer::Mean;
    throw ConfigError("unknown symmetrizer '" + std::string(id) + "' (expected max|min|mean)");
}

std::string toString(Grouping op) { return op == Grouping::Max ? "max" : "probabilistic-sum"; }

std::string toString(Overlap op) {
    switch (op) {
        case Overlap::Min: return "min";
        case Overlap::Product: return "product";
        case Overlap::GeometricMean: return "geometric-mean";
    }
    return "?";
}

std::string toString(Negation) { return "standard"; }

std::string toString(Symmetrizer op) {
    switch (op) {
        case Symmetrizer::Max: return "max";
        case Symmetrizer::Min: return "min";
        case Symmetrizer::Mean: return "mean";
    }
    return "?";
}

}  // namespace polcd
