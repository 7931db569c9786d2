#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "fixtures.hpp"
#include "polcd/errors.hpp"
#include "polcd/io.hpp"
#include "polcd/synth.hpp"

using namespace polcd;

namespace {

std::string dataFile(const std::string& name) { return std::string(POLCD_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("membership file round-trips the worked profile") {
    const auto table = io::readMembership(dataFile("seven_membership.csv"));
    const auto g = fixtures::sevenGraph();
    const auto prof = io::alignMembership(table, g.labels());
    CHECK(prof.etaA == fixtures::sevenFuzzy().etaA);
    CHECK(prof.etaB == fixtures::sevenFuzzy().etaB);

    const auto again = io::parseMembership(io::formatMembershipCsv(g.labels(), prof));
    CHECK(again.labels == g.labels());
    CHECK(again.profile.etaA == prof.etaA);
}

TEST_CASE("membership alignment names missing and extra labels") {
    const auto table = io::readMembership(dataFile("missing_membership.csv"));
    try {
        io::alignMembership(table, fixtures::sevenGraph().labels());
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("missing='7'") != std::string::npos);
    }
    const auto extra = io::parseMembership("node,eta_a,eta_b\na,1,0\nb,0,1\nz,0,0\n");
    CHECK_THROWS_WITH_AS(io::alignMembership(extra, {"a", "b"}), doctest::Contains("extra='z'"), ConfigError);
}

TEST_CASE("membership parse errors") {
    CHECK_THROWS_AS(io::parseMembership("node,a,b\nx,1,0\n"), ParseError);
    CHECK_THROWS_AS(io::parseMembership("node,eta_a,eta_b\nx,1.2,0\n"), ParseError);
    CHECK_THROWS_AS(io::parseMembership("node,eta_a,eta_b\nx,1,0\nx,0,1\n"), ParseError);
    try {
        io::parseMembership("node,eta_a,eta_b\nx,1,0\ny,abc,0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("partition document round trip") {
    const auto g = fixtures::sevenGraph();
    const Partition p({0, 0, 1, 1, 2, 2, 2});
    io::PartitionDocument doc;
    doc.seed = 4;
    doc.gamma = 0.5;
    doc.modularity = 0.25;
    doc.pol = 0.125;
    const auto j = io::partitionToJson(p, g.labels(), doc);
    CHECK(j.dump() ==
          R"({"seed":4,"gamma":0.5,"communities":{"0":["1","2"],"1":["3","4"],"2":["5","6","7"]},"Q":0.25,"pol":0.125})");
    CHECK(io::partitionFromJson(io::Json::parse(j.dump()), g.labels()) == p);

    auto broken = j;
    broken["communities"]["2"] = io::Json::array({"5", "6", "x"});
    CHECK_THROWS_WITH_AS(io::partitionFromJson(broken, g.labels()), doctest::Contains("missing='7'"), ConfigError);
}

TEST_CASE("sweep CSV layout") {
    SweepOptions opts;
    opts.parallel = false;
    const std::vector<double> gammas{1.0, 0.0};
    const auto rep = gammaSweep(fixtures::sevenGraph(), fixtures::sevenFuzzy(), fixtures::maxProduct(), gammas, opts);
    const auto csv = io::sweepCsv(rep);
    CHECK(csv.rfind("gamma,n_communities_gt1,pol,Q\nbaseline,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    const auto j = io::sweepToJson(rep);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["gamma"].is_null());
    CHECK(j["rows"][1]["gamma"] == 1.0);
}

TEST_CASE("exports") {
    const auto g = fixtures::sevenGraph();
    const Partition p({0, 0, 1, 1, 2, 2, 2});
    const auto dot = io::exportDot(g, &p);
    CHECK(dot.rfind("graph G {\n", 0) == 0);
    CHECK(dot.find("\"1\" -- \"2\" [weight=1];") != std::string::npos);
    CHECK(dot.find("community=2") != std::string::npos);

    const auto nl = io::exportNodeLink(g, &p);
    CHECK(nl["nodes"].size() == 7);
    CHECK(nl["links"].size() == 12);
    CHECK(nl["nodes"][4]["community"] == 2);

    const auto reread = parseEdgeList(io::formatEdgeCsv(g));
    REQUIRE(reread.numNodes() == 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(reread.adjacency()(*reread.indexOf(g.label(i)), *reread.indexOf(g.label(j))) == g.adjacency()(i, j));
}

TEST_CASE("synthetic instances survive the CSV round trip") {
    SyntheticSpec spec;
    spec.seed = 3;
    const auto inst = generateSynthetic(spec);
    const auto g = parseEdgeList(io::formatEdgeCsv(inst.graph));
    const auto prof = io::alignMembership(io::parseMembership(io::formatMembershipCsv(inst.graph.labels(), inst.profile)),
                                          g.labels());
    CHECK(g.numNodes() == inst.graph.numNodes());
    CHECK(g.numEdges() == inst.graph.numEdges());
    for (std::size_t i = 0; i < g.numNodes(); ++i) {
        const auto k = *inst.graph.indexOf(g.label(i));
        CHECK(prof.etaA[i] == inst.profile.etaA[k]);
    }
}

TEST_CASE("number formatting is shortest round-trip") {
    CHECK(io::formatNumber(0.1) == "0.1");
    CHECK(io::formatNumber(1.0) == "1");
    CHECK(io::formatNumber(1.0 / 3.0) == "0.3333333333333333");
}
