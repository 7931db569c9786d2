#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polcd/errors.hpp"
#include "polcd/graph.hpp"
#include "polcd/random.hpp"

using namespace polcd;

TEST_CASE("edge list accumulates repeated rows") {
    const auto g = parseEdgeList("source,target\na,b\na,b\nb,c\n");
    REQUIRE(g.numNodes() == 3);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.adjacency()(0, 1) == 2.0);
    CHECK(g.adjacency()(1, 2) == 1.0);
    CHECK(g.totalWeight() == 3.0);
}

TEST_CASE("edge list collapses direction and honours weights and comments") {
    const auto g = parseEdgeList("# retweets\nsource,target,weight\nx,y,2.5\n\ny,x\n# end\nz,x,0.5\n");
    CHECK(g.adjacency()(0, 1) == 3.5);
    CHECK(g.adjacency()(1, 0) == 3.5);
    CHECK(g.adjacency()(2, 0) == 0.5);
    CHECK(g.strength(0) == 4.0);
}

TEST_CASE("edge list: binarize and strict undirected mode") {
    LoadOptions bin;
    bin.binarize = true;
    CHECK(parseEdgeList("source,target,weight\na,b,3\na,b,2\n", bin).adjacency()(0, 1) == 1.0);

    LoadOptions strict;
    strict.collapseDirected = false;
    CHECK(parseEdgeList("source,target\na,b\na,b\n", strict).adjacency()(0, 1) == 2.0);
    CHECK_THROWS_AS(parseEdgeList("source,target\na,b\nb,a\n", strict), ParseError);
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parseEdgeList("source,target,weight\na,b,1\nc\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parseEdgeList("source,target\na,b\nc,c\n");
        FAIL("expected a rejected edge");
    } catch (const RejectedEdgeError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parseEdgeList("source,target,weight\na,b,-1\n"), ParseError);
    CHECK_THROWS_AS(parseEdgeList("source,target,weight\na,b,1e\n"), ParseError);
    CHECK_THROWS_AS(parseEdgeList("from,to\na,b\n"), ParseError);
    CHECK_THROWS_AS(parseEdgeList(""), EmptyGraphError);
    CHECK_THROWS_AS(parseEdgeList("# nothing\n"), EmptyGraphError);
    CHECK_THROWS_AS(parseEdgeList("source,target\n"), EmptyGraphError);
}

TEST_CASE("worked example file loads into the printed adjacency") {
    const auto g = loadEdgeList(std::string(POLCD_TEST_DATA) + "/seven_edges.csv");
    const auto expected = fixtures::weightsFrom(fixtures::kSevenAdjacency);
    REQUIRE(g.numNodes() == 7);
    CHECK(g.labels() == fixtures::sevenGraph().labels());
    CHECK(g.weights() == expected);
    CHECK(g.numEdges() == 12);
}

TEST_CASE("largest component picks the lowest-index component on ties") {
    Matrix m(7);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        m(a, b) = m(b, a) = 1.0;
    const WeightedGraph g({"1", "2", "3", "4", "5", "6", "7"}, WeightMatrix(m));
    const auto lc = largestComponent(g);
    CHECK(lc.labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(lc.numEdges() == 3);

    const auto dec = connectedComponents(g.weights());
    REQUIRE(dec.components.size() == 3);
    CHECK(dec.components[2] == std::vector<std::size_t>{6});
}

TEST_CASE("largest component of a connected graph is the graph; idempotent") {
    const auto g = fixtures::sevenGraph();
    const auto lc = largestComponent(g);
    CHECK(lc.labels() == g.labels());
    CHECK(lc.weights() == g.weights());

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = oracles::randomGraph(rng, 25, 0.06);
        std::vector<std::string> labels;
        for (int i = 0; i < 25; ++i) labels.push_back("n" + std::to_string(i));
        const WeightedGraph rg(labels, w);
        const auto once = largestComponent(rg);
        const auto twice = largestComponent(once);
        CHECK(once.labels() == twice.labels());
        CHECK(once.weights() == twice.weights());
    }
    CHECK_THROWS_AS(largestComponent(WeightedGraph{}), EmptyGraphError);
}

TEST_CASE("aggregation: singletons, single community, 4-cycle") {
    const auto cycle = fixtures::fromEdges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const WeightedGraph g({"1", "2", "3", "4"}, cycle);

    const auto same = aggregateByPartition(g, Partition::singletons(4));
    CHECK(same.weights() == g.weights());

    const auto one = aggregateByPartition(g, Partition::single(4));
    CHECK(one.numNodes() == 1);
    CHECK(one.weights().twoM() == g.weights().twoM());

    const auto two = aggregateByPartition(g, Partition({0, 0, 1, 1}));
    REQUIRE(two.numNodes() == 2);
    CHECK(two.adjacency()(0, 1) == 2.0);
    CHECK(two.weights().selfWeight(0) == 1.0);
    CHECK(two.weights().selfWeight(1) == 1.0);
    CHECK(two.weights().twoM() == 8.0);

    CHECK_THROWS_AS(aggregateByPartition(g, Partition::singletons(3)), ContractViolation);
}

TEST_CASE("property: graph invariants and 2m preserved by aggregation") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(30);
        const auto w = oracles::randomGraph(rng, n, 0.2);
        CHECK(w.offDiagonal().isSymmetric());
        double sumK = 0.0;
        for (std::size_t i = 0; i < n; ++i) sumK += w.strength(i);
        CHECK(sumK == doctest::Approx(w.offDiagonal().grandSum()).epsilon(1e-15));

        std::vector<std::size_t> labels(n);
        const std::size_t k = 1 + rng.below(n);
        for (auto& l : labels) l = rng.below(k);
        const Partition p(labels);
        const auto agg = w.aggregate(p);
        CHECK(agg.twoM() == doctest::Approx(w.twoM()).epsilon(1e-14));
        // aggregating twice equals aggregating once by the composed partition
        const auto agg2 = agg.aggregate(Partition::single(agg.size()));
        CHECK(agg2.twoM() == doctest::Approx(w.twoM()).epsilon(1e-14));
    }
}

TEST_CASE("weight matrix rejects invalid input") {
    Matrix asym(2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(WeightMatrix{asym}, ContractViolation);
    Matrix neg(2);
    neg(0, 1) = neg(1, 0) = -1.0;
    CHECK_THROWS_AS(WeightMatrix{neg}, ContractViolation);
    Matrix diag(2);
    diag(0, 0) = 1.0;
    CHECK_THROWS_AS(WeightMatrix{diag}, ContractViolation);
    CHECK_THROWS_AS(WeightedGraph({"a", "a"}, WeightMatrix(Matrix(2))), ContractViolation);
}
