#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polcd/capacity.hpp"
#include "polcd/community.hpp"
#include "polcd/graph.hpp"
#include "polcd/partition.hpp"
#include "polcd/polarization.hpp"

namespace polcd::io {

using Json = nlohmann::ordered_json;

/// Rows of a `node,eta_a,eta_b` file in file order.
struct MembershipTable {
    std::vector<std::string> labels;
    MembershipProfile profile;
};

MembershipTable parseMembership(const std::string& text);
MembershipTable readMembership(const std::filesystem::path& path);

/// Reorders the table to the graph's node order. Throws ConfigError naming
/// every missing and every extra label.
MembershipProfile alignMembership(const MembershipTable& table, const std::vector<std::string>& labels);

std::string formatMembershipCsv(const std::vector<std::string>& labels, const MembershipProfile& prof);
/// Edge CSV with a weight column; edges ordered by (min,max) endpoint index.
std::string formatEdgeCsv(const WeightedGraph& g);

/// Shortest round-trip decimal form.
std::string formatNumber(double v);

struct PartitionDocument {
    std::uint64_t seed = 0;
    std::optional<double> gamma;
    double modularity = 0.0;
    std::optional<double> pol;
    Json extra = Json::object();
};

Json partitionToJson(const Partition& p, const std::vector<std::string>& labels, const PartitionDocument& doc);

/// Reads the `communities` object of a partition document and maps it onto
/// `labels`. Throws ConfigError on unknown, duplicate, or missing labels.
Partition partitionFromJson(const Json& j, const std::vector<std::string>& labels);

Json cohesionToJson(const CohesionReport& r);
Json shapleyToJson(const std::vector<std::string>& labels, const std::vector<double>& values, bool oracle);
Json traceToJson(const LouvainTrace& t);

std::string sweepCsv(const SweepReport& r);
Json sweepToJson(const SweepReport& r);

/// DOT with one colour per community when `p` is given.
std::string exportDot(const WeightedGraph& g, const Partition* p = nullptr);
/// Node-link JSON: nodes by index, links by (min,max) endpoint.
Json exportNodeLink(const WeightedGraph& g, const Partition* p = nullptr);

void writeText(const std::filesystem::path& path, const std::string& text);
Json readJson(const std::filesystem::path& path);

}  // namespace polcd::io
