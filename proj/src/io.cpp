#include "polcd/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "polcd/errors.hpp"
#include "text_util.hpp"

namespace polcd::io {

// ---------------------------------------------------------------------------
// Membership CSV

MembershipTable parseMembership(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    bool haveHeader = false;
    std::vector<std::string> labels;
    std::vector<double> a, b;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineNo;
        if (lineNo == 1) detail::stripBom(line);
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const auto fields = detail::splitCsv(trimmed);
        if (!haveHeader) {
            if (fields.size() != 3 || fields[0] != "node" || fields[1] != "eta_a" || fields[2] != "eta_b")
                throw ParseError("expected header 'node,eta_a,eta_b'", lineNo);
            haveHeader = true;
            continue;
        }
        if (fields.size() != 3) throw ParseError("wrong number of fields", lineNo);
        if (fields[0].empty()) throw ParseError("empty node label", lineNo);
        if (!seen.insert(fields[0]).second) throw ParseError("duplicate node '" + fields[0] + "'", lineNo);
        double vals[2];
        for (int k = 0; k < 2; ++k) {
            const auto v = detail::parseDouble(fields[1 + k]);
            if (!v || !(*v >= 0.0 && *v <= 1.0))
                throw ParseError("membership degree '" + fields[1 + k] + "' is not a number in [0,1]", lineNo);
            vals[k] = *v;
        }
        labels.push_back(fields[0]);
        a.push_back(vals[0]);
        b.push_back(vals[1]);
    }
    if (!haveHeader) throw ParseError("membership file is empty", 0);
    return {std::move(labels), MembershipProfile(std::move(a), std::move(b))};
}

MembershipTable readMembership(const std::filesystem::path& path) {
    return parseMembership(detail::readFile(path));
}

namespace {

std::string joinQuoted(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += "'" + items[i] + "'";
    }
    return out;
}

}  // namespace

MembershipProfile alignMembership(const MembershipTable& table, const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> row;
    for (std::size_t i = 0; i < table.labels.size(); ++i) row.emplace(table.labels[i], i);
    std::vector<std::string> missing, extra;
    std::vector<double> a, b;
    std::set<std::string> wanted(labels.begin(), labels.end());
    for (const auto& l : labels) {
        auto it = row.find(l);
        if (it == row.end()) {
            missing.push_back(l);
            continue;
        }
        a.push_back(table.profile.etaA[it->second]);
        b.push_back(table.profile.etaB[it->second]);
    }
    for (const auto& l : table.labels)
        if (!wanted.count(l)) extra.push_back(l);
    if (!missing.empty() || !extra.empty()) {
        std::string msg = "membership does not match graph nodes;";
        if (!missing.empty()) msg += " missing=" + joinQuoted(missing);
        if (!extra.empty()) msg += (missing.empty() ? " " : "; ") + std::string("extra=") + joinQuoted(extra);
        throw ConfigError(msg);
    }
    return MembershipProfile(std::move(a), std::move(b));
}

std::string formatNumber(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string formatMembershipCsv(const std::vector<std::string>& labels, const MembershipProfile& prof) {
    std::string out = "node,eta_a,eta_b\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += labels[i] + "," + formatNumber(prof.etaA[i]) + "," + formatNumber(prof.etaB[i]) + "\n";
    return out;
}

std::string formatEdgeCsv(const WeightedGraph& g) {
    std::string out = "source,target,weight\n";
    for (std::size_t i = 0; i < g.numNodes(); ++i)
        for (std::size_t j = i + 1; j < g.numNodes(); ++j)
            if (g.adjacency()(i, j) > 0.0)
                out += g.label(i) + "," + g.label(j) + "," + formatNumber(g.adjacency()(i, j)) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Partition documents

Json partitionToJson(const Partition& p, const std::vector<std::string>& labels, const PartitionDocument& doc) {
    if (labels.size() != p.numNodes()) throw ContractViolation("label count does not match partition");
    Json j;
    j["seed"] = doc.seed;
    j["gamma"] = doc.gamma ? Json(*doc.gamma) : Json(nullptr);
    Json comms = Json::object();
    for (std::size_t c = 0; c < p.numCommunities(); ++c) {
        Json members = Json::array();
        for (auto i : p.members(c)) members.push_back(labels[i]);
        comms[std::to_string(c)] = std::move(members);
    }
    j["communities"] = std::move(comms);
    j["Q"] = doc.modularity;
    j["pol"] = doc.pol ? Json(*doc.pol) : Json(nullptr);
    for (auto it = doc.extra.begin(); it != doc.extra.end(); ++it) j[it.key()] = it.value();
    return j;
}

Partition partitionFromJson(const Json& j, const std::vector<std::string>& labels) {
    if (!j.is_object() || !j.contains("communities") || !j["communities"].is_object())
        throw ConfigError("partition document lacks a 'communities' object");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assignment(labels.size(), unassigned);
    std::vector<std::string> unknown, duplicate;
    std::size_t c = 0;
    for (const auto& [key, members] : j["communities"].items()) {
        if (!members.is_array()) throw ConfigError("community '" + key + "' is not a list");
        for (const auto& m : members) {
            if (!m.is_string()) throw ConfigError("community '" + key + "' holds a non-string label");
            const auto label = m.get<std::string>();
            auto it = index.find(label);
            if (it == index.end()) {
                unknown.push_back(label);
            } else if (assignment[it->second] != unassigned) {
                duplicate.push_back(label);
            } else {
                assignment[it->second] = c;
            }
        }
        ++c;
    }
    std::vector<std::string> missing;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (assignment[i] == unassigned) missing.push_back(labels[i]);
    if (!unknown.empty() || !duplicate.empty() || !missing.empty()) {
        std::string msg = "partition does not cover the node set;";
        if (!missing.empty()) msg += " missing=" + joinQuoted(missing);
        if (!unknown.empty()) msg += " unknown=" + joinQuoted(unknown);
        if (!duplicate.empty()) msg += " duplicate=" + joinQuoted(duplicate);
        throw ConfigError(msg);
    }
    return Partition(assignment);
}

Json cohesionToJson(const CohesionReport& r) {
    Json j;
    j["mode"] = toString(r.mode);
    Json comms = Json::array();
    for (const auto& c : r.communities) {
        Json e;
        e["id"] = c.community;
        e["size"] = c.size;
        e["jdj"] = c.normalized;
        e["jdj_raw"] = c.jdj;
        e["positive_pairs"] = c.positivePairs;
        e["all_pairs"] = c.allPairs;
        e["jdj_positive_pairs"] = c.normalizedPositive;
        e["jdj_all_pairs"] = c.normalizedAll;
        e["flagged"] = c.flagged;
        comms.push_back(std::move(e));
    }
    j["communities"] = std::move(comms);
    j["pol"] = r.pol;
    j["pol_positive_pairs"] = r.polPositivePairs;
    j["pol_all_pairs"] = r.polAllPairs;
    return j;
}

Json shapleyToJson(const std::vector<std::string>& labels, const std::vector<double>& values, bool oracle) {
    Json j;
    j["method"] = oracle ? "brute-force" : "closed-form";
    Json v = Json::object();
    for (std::size_t i = 0; i < labels.size(); ++i) v[labels[i]] = values.at(i);
    j["values"] = std::move(v);
    return j;
}

Json traceToJson(const LouvainTrace& t) {
    Json j;
    j["permutation_seed"] = t.permutationSeed;
    Json passes = Json::array();
    for (const auto& p : t.passes) {
        Json e;
        e["component"] = p.component;
        e["level"] = p.level;
        e["communities"] = p.partition.numCommunities();
        e["moves"] = p.moves;
        e["Q"] = p.modularity;
        e["sweep_Q"] = p.sweepModularity;
        passes.push_back(std::move(e));
    }
    j["passes"] = std::move(passes);
    j["warnings"] = t.warnings;
    return j;
}

// ---------------------------------------------------------------------------
// Sweep reports

namespace {

std::size_t nonSingletonCount(const Partition& p) {
    std::size_t k = 0;
    for (const auto& c : p.communities())
        if (c.size() > 1) ++k;
    return k;
}

}  // namespace

std::string sweepCsv(const SweepReport& r) {
    std::string out = "gamma,n_communities_gt1,pol,Q\n";
    for (const auto& row : r.rows) {
        out += (row.gamma ? formatNumber(*row.gamma) : std::string("baseline")) + "," +
               std::to_string(nonSingletonCount(row.partition)) + "," + formatNumber(row.cohesion.pol) + "," +
               formatNumber(row.modularity) + "\n";
    }
    return out;
}

Json sweepToJson(const SweepReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["grouping"] = toString(r.operators.grouping);
    j["overlap"] = toString(r.operators.overlap);
    j["negation"] = toString(r.operators.negation);
    j["symmetrizer"] = toString(r.operators.symmetrizer);
    j["norm_mode"] = toString(r.normMode);
    j["rescale"] = r.rescale;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["gamma"] = row.gamma ? Json(*row.gamma) : Json(nullptr);
        e["algorithm"] = row.gamma ? "polarization-louvain" : "louvain";
        e["n_communities_gt1"] = nonSingletonCount(row.partition);
        Json jdj = Json::array();
        for (const auto& c : row.cohesion.communities) jdj.push_back(c.normalized);
        e["jdj"] = std::move(jdj);
        e["pol"] = row.cohesion.pol;
        e["Q"] = row.modularity;
        e["Q_blend"] = row.blendModularity;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

// ---------------------------------------------------------------------------
// Graph export

namespace {

std::string dotQuote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                          "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string exportDot(const WeightedGraph& g, const Partition* p) {
    if (p && p->numNodes() != g.numNodes()) throw ContractViolation("partition does not cover the graph");
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t i = 0; i < g.numNodes(); ++i) {
        out << "  " << dotQuote(g.label(i));
        if (p) {
            const auto c = p->communityOf(i);
            out << " [community=" << c << ", style=filled, fillcolor=\"" << kPalette[c % std::size(kPalette)]
                << "\"]";
        }
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.numNodes(); ++i)
        for (std::size_t j = i + 1; j < g.numNodes(); ++j)
            if (g.adjacency()(i, j) > 0.0)
                out << "  " << dotQuote(g.label(i)) << " -- " << dotQuote(g.label(j))
                    << " [weight=" << formatNumber(g.adjacency()(i, j)) << "];\n";
    out << "}\n";
    return out.str();
}

Json exportNodeLink(const WeightedGraph& g, const Partition* p) {
    if (p && p->numNodes() != g.numNodes()) throw ContractViolation("partition does not cover the graph");
    Json j;
    j["directed"] = false;
    j["multigraph"] = false;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.numNodes(); ++i) {
        Json n;
        n["id"] = g.label(i);
        n["index"] = i;
        n["strength"] = g.strength(i);
        if (p) n["community"] = p->communityOf(i);
        nodes.push_back(std::move(n));
    }
    Json links = Json::array();
    for (std::size_t i = 0; i < g.numNodes(); ++i)
        for (std::size_t k = i + 1; k < g.numNodes(); ++k)
            if (g.adjacency()(i, k) > 0.0) {
                Json l;
                l["source"] = g.label(i);
                l["target"] = g.label(k);
                l["weight"] = g.adjacency()(i, k);
                links.push_back(std::move(l));
            }
    j["nodes"] = std::move(nodes);
    j["links"] = std::move(links);
    return j;
}

void writeText(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << text;
}

Json readJson(const std::filesystem::path& path) {
    try {
        return Json::parse(detail::readFile(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

}  // namespace polcd::io
