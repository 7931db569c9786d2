#include <doctest.h>

#include <cmath>
#include <vector>

#include "polcd/errors.hpp"
#include "polcd/operators.hpp"

using namespace polcd;

namespace {

std::vector<double> grid() {
    std::vector<double> g;
    for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
    g.push_back(0.022);
    g.push_back(0.989);
    return g;
}

}  // namespace

TEST_CASE("grouping examples") {
    CHECK(evalGrouping(Grouping::Max, 0.3, 0.7) == 0.7);
    CHECK(evalGrouping(Grouping::ProbabilisticSum, 0.5, 0.5) == 0.75);
    for (double x : grid()) {
        CHECK(evalGrouping(Grouping::Max, x, 0.0) == x);
        CHECK(evalGrouping(Grouping::ProbabilisticSum, x, 0.0) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("overlap examples") {
    CHECK(evalOverlap(Overlap::Product, 0.022, 0.989) == doctest::Approx(0.021758).epsilon(1e-12));
    CHECK(evalOverlap(Overlap::Min, 1.0, 1.0) == 1.0);
    for (double x : grid()) {
        CHECK(evalOverlap(Overlap::Product, x, 0.0) == 0.0);
        CHECK(evalOverlap(Overlap::Min, x, 0.0) == 0.0);
        CHECK(evalOverlap(Overlap::GeometricMean, x, 0.0) == 0.0);
    }
}

TEST_CASE("negation examples and involution") {
    CHECK(evalNegation(Negation::Standard, 0.0) == 1.0);
    CHECK(evalNegation(Negation::Standard, 1.0) == 0.0);
    CHECK(evalNegation(Negation::Standard, 0.021758) == doctest::Approx(0.978242).epsilon(1e-12));
    for (double x : grid()) {
        CHECK(std::abs(evalNegation(Negation::Standard, evalNegation(Negation::Standard, x)) - x) <= 1e-12);
    }
}

TEST_CASE("axiom suite over a [0,1]^2 grid") {
    const auto g = grid();
    for (auto op : {Grouping::Max, Grouping::ProbabilisticSum}) {
        for (double x : g)
            for (double y : g) {
                const double v = evalGrouping(op, x, y);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK(std::abs(v - evalGrouping(op, y, x)) <= 1e-12);
                for (double y2 : g)
                    if (y2 >= y) CHECK(evalGrouping(op, x, y2) >= v - 1e-12);
            }
    }
    for (auto op : {Overlap::Min, Overlap::Product, Overlap::GeometricMean}) {
        for (double x : g)
            for (double y : g) {
                const double v = evalOverlap(op, x, y);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK(std::abs(v - evalOverlap(op, y, x)) <= 1e-12);
                for (double y2 : g)
                    if (y2 >= y) CHECK(evalOverlap(op, x, y2) >= v - 1e-12);
            }
    }
    for (double x : g)
        for (double y : g)
            if (y > x) CHECK(evalNegation(Negation::Standard, y) < evalNegation(Negation::Standard, x));
    for (auto op : {Symmetrizer::Max, Symmetrizer::Min, Symmetrizer::Mean})
        for (double x : g) CHECK(evalSymmetrizer(op, x, x) == x);
}

TEST_CASE("out-of-range inputs are contract violations, not clamped") {
    CHECK_THROWS_AS(evalGrouping(Grouping::Max, -0.1, 0.2), ContractViolation);
    CHECK_THROWS_AS(evalOverlap(Overlap::Product, 0.2, 1.5), ContractViolation);
    CHECK_THROWS_AS(evalNegation(Negation::Standard, 2.0), ContractViolation);
    CHECK_THROWS_AS(evalSymmetrizer(Symmetrizer::Mean, -1.5, 0.0), ContractViolation);
    CHECK(evalSymmetrizer(Symmetrizer::Min, -0.5, 0.5) == -0.5);
}

TEST_CASE("registry ids round-trip") {
    for (auto id : {"max", "probabilistic-sum"}) CHECK(toString(parseGrouping(id)) == id);
    for (auto id : {"min", "product", "geometric-mean"}) CHECK(toString(parseOverlap(id)) == id);
    CHECK(toString(parseNegation("standard")) == "standard");
    for (auto id : {"max", "min", "mean"}) CHECK(toString(parseSymmetrizer(id)) == id);
    CHECK_THROWS_AS(parseOverlap("prod"), ConfigError);
    CHECK_THROWS_AS(parseGrouping("sum"), ConfigError);
}
