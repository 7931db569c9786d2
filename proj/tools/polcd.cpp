// polcd command line: detect, sweep, score, synth, shapley, export.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polcd/capacity.hpp"
#include "polcd/community.hpp"
#include "polcd/errors.hpp"
#include "polcd/graph.hpp"
#include "polcd/io.hpp"
#include "polcd/polarization.hpp"
#include "polcd/synth.hpp"

namespace fs = std::filesystem;
using namespace polcd;
using io::Json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

struct Options {
    std::string graph;
    std::string membership;
    std::string partition;
    std::string grouping = "max";
    std::string overlap = "product";
    std::string negation = "standard";
    std::string symmetrizer = "mean";
    std::string kind = "dialogue";
    double gamma = 0.5;
    std::string gammas = "0.5,0.4,0.3,0.2,0.1,0";
    std::uint64_t seed = 0;
    bool rescale = false;
    bool binarize = false;
    bool largestComponent = false;
    std::string normMode = "positive-pairs";
    std::string out = "polcd-out";
    std::string format = "both";
    bool oracle = false;
    SyntheticSpec synth;
};

OperatorConfig operators(const Options& o) {
    OperatorConfig cfg;
    cfg.grouping = parseGrouping(o.grouping);
    cfg.overlap = parseOverlap(o.overlap);
    cfg.negation = parseNegation(o.negation);
    cfg.symmetrizer = parseSymmetrizer(o.symmetrizer);
    return cfg;
}

std::vector<double> parseGammas(const std::string& text) {
    std::vector<double> out;
    std::string item;
    auto flush = [&] {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (!item.empty() || !out.empty()) throw ConfigError("empty entry in gamma list");
            return;
        }
        const auto last = item.find_last_not_of(" \t");
        const std::string token = item.substr(first, last - first + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw ConfigError("gamma '" + token + "' is not a number");
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("gamma " + token + " outside [0,1]");
        out.push_back(v);
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
            item.clear();
        } else {
            item += ch;
        }
    }
    if (!item.empty() || !out.empty()) flush();
    if (out.empty()) throw ConfigError("gamma list is empty");
    return out;
}

void checkGamma(double g) {
    if (!(g >= 0.0 && g <= 1.0)) throw ConfigError("gamma outside [0,1]");
}

WeightedGraph loadGraph(const Options& o) {
    if (o.graph.empty()) throw ConfigError("--graph is required");
    LoadOptions lo;
    lo.binarize = o.binarize;
    auto g = loadEdgeList(o.graph, lo);
    if (o.largestComponent) g = largestComponent(g);
    return g;
}

MembershipProfile loadProfile(const Options& o, const WeightedGraph& g) {
    if (o.membership.empty()) throw ConfigError("--membership is required");
    return io::alignMembership(io::readMembership(o.membership), g.labels());
}

TwoAdditiveFuzzyMeasure buildMeasure(const Options& o, const MembershipProfile& prof, const OperatorConfig& cfg) {
    if (o.kind == "dialogue") return TwoAdditiveFuzzyMeasure(buildDialogueMatrix(prof, cfg));
    if (o.kind == "risk") return TwoAdditiveFuzzyMeasure(buildRiskMatrix(prof, cfg));
    throw ConfigError("unknown measure kind '" + o.kind + "' (expected dialogue or risk)");
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

Json operatorsJson(const OperatorConfig& cfg) {
    Json j;
    j["grouping"] = toString(cfg.grouping);
    j["overlap"] = toString(cfg.overlap);
    j["negation"] = toString(cfg.negation);
    j["symmetrizer"] = toString(cfg.symmetrizer);
    return j;
}

void writeDetection(const fs::path& dir, const WeightedGraph& g, const Partition& p, const io::PartitionDocument& doc,
                    const CohesionReport& cohesion, const LouvainTrace& trace) {
    io::writeText(dir / "partition.json", dumpJson(io::partitionToJson(p, g.labels(), doc)));
    io::writeText(dir / "cohesion.json", dumpJson(io::cohesionToJson(cohesion)));
    io::writeText(dir / "partition.dot", io::exportDot(g, &p));
    io::writeText(dir / "trace.json", dumpJson(io::traceToJson(trace)));
}

int cmdDetect(const Options& o) {
    checkGamma(o.gamma);
    const auto cfg = operators(o);
    const auto mode = parseNormMode(o.normMode);
    const auto g = loadGraph(o);
    const auto prof = loadProfile(o, g);
    const auto measure = buildMeasure(o, prof, cfg);
    const auto f = associatedGraph(measure, cfg.symmetrizer);
    const BlendSpec spec{o.gamma, o.rescale};
    const auto m = blend(g.weights(), f, spec);
    const auto det = detectCommunities(g.weights(), m, o.seed);
    const auto cohesion = partitionCohesion(det.partition, prof, cfg, mode);

    io::PartitionDocument doc;
    doc.seed = o.seed;
    doc.gamma = o.gamma;
    doc.modularity = modularity(g.weights(), det.partition);
    doc.pol = cohesion.pol;
    doc.extra["Q_blend"] = modularity(m, det.partition);
    doc.extra["algorithm"] = "polarization-louvain";
    doc.extra["measure"] = o.kind;
    doc.extra["operators"] = operatorsJson(cfg);
    doc.extra["norm_mode"] = toString(mode);
    doc.extra["rescale"] = o.rescale;
    writeDetection(o.out, g, det.partition, doc, cohesion, det.trace);

    for (const auto& w : det.trace.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "communities=" << det.partition.numCommunities() << " Q=" << io::formatNumber(doc.modularity)
              << " pol=" << io::formatNumber(cohesion.pol) << " out=" << o.out << "\n";
    return 0;
}

int cmdSweep(const Options& o) {
    const auto gammas = parseGammas(o.gammas);
    const auto cfg = operators(o);
    SweepOptions so;
    so.seed = o.seed;
    so.normMode = parseNormMode(o.normMode);
    so.rescale = o.rescale;
    const auto g = loadGraph(o);
    const auto prof = loadProfile(o, g);
    const auto report = gammaSweep(g, prof, cfg, gammas, so);

    const fs::path out(o.out);
    io::writeText(out / "sweep.csv", io::sweepCsv(report));
    io::writeText(out / "sweep.json", dumpJson(io::sweepToJson(report)));
    for (const auto& row : report.rows) {
        io::PartitionDocument doc;
        doc.seed = o.seed;
        doc.gamma = row.gamma;
        doc.modularity = row.modularity;
        doc.pol = row.cohesion.pol;
        doc.extra["Q_blend"] = row.blendModularity;
        doc.extra["algorithm"] = row.gamma ? "polarization-louvain" : "louvain";
        const fs::path dir = out / (row.gamma ? "gamma-" + io::formatNumber(*row.gamma) : std::string("baseline"));
        writeDetection(dir, g, row.partition, doc, row.cohesion, row.trace);
    }
    std::cout << io::sweepCsv(report);
    return 0;
}

int cmdScore(const Options& o, bool writeOut) {
    if (o.partition.empty()) throw ConfigError("--partition is required");
    if (o.membership.empty()) throw ConfigError("--membership is required");
    const auto cfg = operators(o);
    const auto mode = parseNormMode(o.normMode);
    const auto table = io::readMembership(o.membership);
    const auto p = io::partitionFromJson(io::readJson(o.partition), table.labels);
    const auto report = partitionCohesion(p, table.profile, cfg, mode);
    const auto text = dumpJson(io::cohesionToJson(report));
    if (writeOut) io::writeText(fs::path(o.out) / "cohesion.json", text);
    std::cout << text;
    return 0;
}

int cmdSynth(const Options& o) {
    const auto inst = generateSynthetic(o.synth);
    const fs::path out(o.out);
    io::writeText(out / "edges.csv", io::formatEdgeCsv(inst.graph));
    io::writeText(out / "membership.csv", io::formatMembershipCsv(inst.graph.labels(), inst.profile));
    const Partition planted(inst.block);
    io::PartitionDocument doc;
    doc.seed = o.synth.seed;
    doc.modularity = modularity(inst.graph.weights(), planted);
    doc.extra["generator"] = {{"nodes_per_block", o.synth.nodesPerBlock}, {"blocks", o.synth.blocks},
                              {"intra", o.synth.intraProb},           {"inter", o.synth.interProb},
                              {"sharpness", o.synth.poleSharpness},   {"crisp", o.synth.crisp},
                              {"noise", o.synth.noise}};
    io::writeText(out / "planted.json", dumpJson(io::partitionToJson(planted, inst.graph.labels(), doc)));
    std::cout << "nodes=" << inst.graph.numNodes() << " edges=" << inst.graph.numEdges() << " out=" << o.out << "\n";
    return 0;
}

int cmdShapley(const Options& o) {
    if (o.membership.empty()) throw ConfigError("--membership is required");
    const auto cfg = operators(o);
    const auto table = io::readMembership(o.membership);
    const auto measure = buildMeasure(o, table.profile, cfg);
    std::vector<double> values;
    if (o.oracle) {
        const auto mu = asSetFunction(measure);
        for (std::size_t i = 0; i < measure.size(); ++i) values.push_back(shapleyBruteForce(mu, measure.size(), i));
    } else {
        values = shapleyVector(measure).values;
    }
    auto j = io::shapleyToJson(table.labels, values, o.oracle);
    j["measure"] = o.kind;
    j["operators"] = operatorsJson(cfg);
    const auto text = dumpJson(j);
    io::writeText(fs::path(o.out) / "shapley.json", text);
    std::cout << text;
    return 0;
}

int cmdExport(const Options& o) {
    const auto g = loadGraph(o);
    std::optional<Partition> p;
    if (!o.partition.empty()) p = io::partitionFromJson(io::readJson(o.partition), g.labels());
    const Partition* pp = p ? &*p : nullptr;
    const fs::path out(o.out);
    if (o.format != "dot" && o.format != "json" && o.format != "both")
        throw ConfigError("unknown export format '" + o.format + "' (expected dot, json or both)");
    if (o.format != "json") io::writeText(out / "graph.dot", io::exportDot(g, pp));
    if (o.format != "dot") io::writeText(out / "graph.json", dumpJson(io::exportNodeLink(g, pp)));
    std::cout << "nodes=" << g.numNodes() << " edges=" << g.numEdges() << " out=" << o.out << "\n";
    return 0;
}

int fail(int code, const std::string& kind, std::string message) {
    // messages from the library may already carry the kind as a prefix
    if (message.rfind(kind + ": ", 0) == 0) message = message.substr(kind.size() + 2);
    std::cerr << "error: " << kind << ": " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polarization-aware community detection on two-pole membership profiles"};
    app.set_config("--config", "", "Flat key=value file; keys are long option names, flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    Options o;
    app.add_option("--graph", o.graph, "Edge CSV: source,target[,weight]");
    app.add_option("--membership", o.membership, "Membership CSV: node,eta_a,eta_b");
    app.add_option("--partition", o.partition, "Partition JSON (score, export)");
    app.add_option("--grouping", o.grouping, "max | probabilistic-sum")->capture_default_str();
    app.add_option("--overlap", o.overlap, "min | product | geometric-mean")->capture_default_str();
    app.add_option("--negation", o.negation, "standard")->capture_default_str();
    app.add_option("--symmetrizer", o.symmetrizer, "max | min | mean")->capture_default_str();
    app.add_option("--kind", o.kind, "Measure used as the associated graph: dialogue | risk")->capture_default_str();
    app.add_option("--gamma", o.gamma, "Weight of the structural graph in the blend")->capture_default_str();
    app.add_option("--gammas", o.gammas, "Comma-separated gamma list for sweep")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed of the node visiting order")->capture_default_str();
    app.add_flag("--rescale", o.rescale, "Scale the associated graph to the structural mass before blending");
    app.add_flag("--binarize", o.binarize, "Replace accumulated edge weights by 1");
    app.add_flag("--largest-component", o.largestComponent, "Keep only the largest connected component");
    app.add_option("--norm-mode", o.normMode, "positive-pairs | all-pairs")->capture_default_str();
    auto* outOpt = app.add_option("--out", o.out, "Output directory")->capture_default_str();
    app.add_option("--format", o.format, "export: dot | json | both")->capture_default_str();
    app.add_flag("--oracle", o.oracle, "shapley: permutation brute force (at most 10 nodes)");
    app.add_option("--nodes-per-block", o.synth.nodesPerBlock, "synth")->capture_default_str();
    app.add_option("--blocks", o.synth.blocks, "synth")->capture_default_str();
    app.add_option("--intra", o.synth.intraProb, "synth: edge probability inside a block")->capture_default_str();
    app.add_option("--inter", o.synth.interProb, "synth: edge probability across blocks")->capture_default_str();
    app.add_option("--sharpness", o.synth.poleSharpness, "synth: >= 1, concentration at the block pole")
        ->capture_default_str();
    app.add_option("--noise", o.synth.noise, "synth: bound on the eta_b perturbation")->capture_default_str();
    app.add_flag("--crisp", o.synth.crisp, "synth: exact 0/1 memberships");

    auto* detect = app.add_subcommand("detect", "Polarization Louvain at one gamma")->fallthrough();
    auto* sweep = app.add_subcommand("sweep", "Baseline Louvain plus one run per gamma")->fallthrough();
    auto* score = app.add_subcommand("score", "Cohesion report of a partition")->fallthrough();
    auto* synth = app.add_subcommand("synth", "Planted two-pole graph and memberships")->fallthrough();
    auto* shapley = app.add_subcommand("shapley", "Shapley values of the pairwise measure")->fallthrough();
    auto* exportCmd = app.add_subcommand("export", "DOT and node-link JSON of a graph")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitConfig, "config", e.what());
    }

    try {
        o.synth.seed = o.seed;
        if (detect->parsed()) return cmdDetect(o);
        if (sweep->parsed()) return cmdSweep(o);
        if (score->parsed()) return cmdScore(o, outOpt->count() > 0);
        if (synth->parsed()) return cmdSynth(o);
        if (shapley->parsed()) return cmdShapley(o);
        if (exportCmd->parsed()) return cmdExport(o);
    } catch (const RejectedEdgeError& e) {
        return fail(kExitConfig, "rejected-edge", e.what());
    } catch (const ParseError& e) {
        return fail(kExitConfig, "parse", e.what());
    } catch (const EmptyGraphError& e) {
        return fail(kExitConfig, "empty-graph", e.what());
    } catch (const ConfigError& e) {
        return fail(kExitConfig, "config", e.what());
    } catch (const SizeLimitError& e) {
        return fail(kExitConfig, "size-limit", e.what());
    } catch (const DegeneratePolarizationError& e) {
        return fail(kExitDegenerate, "degenerate-polarization", e.what());
    } catch (const DegenerateDialogueError& e) {
        return fail(kExitDegenerate, "degenerate-dialogue", e.what());
    } catch (const UndefinedScoreError& e) {
        return fail(kExitDegenerate, "undefined-score", e.what());
    } catch (const UndefinedModularityError& e) {
        return fail(kExitDegenerate, "undefined-modularity", e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
