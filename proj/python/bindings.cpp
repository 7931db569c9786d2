#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polcd/capacity.hpp"
#include "polcd/community.hpp"
#include "polcd/errors.hpp"
#include "polcd/graph.hpp"
#include "polcd/io.hpp"
#include "polcd/polarization.hpp"
#include "polcd/synth.hpp"

namespace py = pybind11;
using namespace polcd;

namespace {

py::array_t<double> toArray(const Matrix& m) {
    const auto n = static_cast<py::ssize_t>(m.size());
    py::array_t<double> out({n, n});
    auto r = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i)
        for (py::ssize_t j = 0; j < n; ++j) r(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
}

Matrix fromArray(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ContractViolation("expected a square matrix");
    const auto n = static_cast<std::size_t>(a.shape(0));
    Matrix m(n);
    auto r = a.unchecked<2>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = r(i, j);
    return m;
}

OperatorConfig makeOperators(const std::string& grouping, const std::string& overlap, const std::string& negation,
                             const std::string& symmetrizer) {
    return {parseGrouping(grouping), parseOverlap(overlap), parseNegation(negation), parseSymmetrizer(symmetrizer)};
}

TwoAdditiveFuzzyMeasure measureFor(const MembershipProfile& prof, const OperatorConfig& ops, const std::string& kind) {
    if (kind == "dialogue") return TwoAdditiveFuzzyMeasure(buildDialogueMatrix(prof, ops));
    if (kind == "risk") return TwoAdditiveFuzzyMeasure(buildRiskMatrix(prof, ops));
    throw ConfigError("unknown measure kind '" + kind + "'");
}

py::dict cohesionDict(const CohesionReport& r) {
    return py::module_::import("json").attr("loads")(io::cohesionToJson(r).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polarization-aware community detection";

    auto base = py::register_exception<Error>(m, "PolcdError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<EmptyGraphError>(m, "EmptyGraphError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DegeneratePolarizationError>(m, "DegeneratePolarizationError", base.ptr());
    py::register_exception<DegenerateDialogueError>(m, "DegenerateDialogueError", base.ptr());
    py::register_exception<UndefinedScoreError>(m, "UndefinedScoreError", base.ptr());
    py::register_exception<UndefinedModularityError>(m, "UndefinedModularityError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

    py::class_<OperatorConfig>(m, "Operators")
        .def(py::init(&makeOperators), py::arg("grouping") = "max", py::arg("overlap") = "product",
             py::arg("negation") = "standard", py::arg("symmetrizer") = "mean")
        .def_property_readonly("grouping", [](const OperatorConfig& c) { return toString(c.grouping); })
        .def_property_readonly("overlap", [](const OperatorConfig& c) { return toString(c.overlap); })
        .def_property_readonly("negation", [](const OperatorConfig& c) { return toString(c.negation); })
        .def_property_readonly("symmetrizer", [](const OperatorConfig& c) { return toString(c.symmetrizer); })
        .def("__repr__", [](const OperatorConfig& c) {
            return "Operators(grouping='" + toString(c.grouping) + "', overlap='" + toString(c.overlap) +
                   "', negation='" + toString(c.negation) + "', symmetrizer='" + toString(c.symmetrizer) + "')";
        });

    py::class_<MembershipProfile>(m, "Profile")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("eta_a"), py::arg("eta_b"))
        .def_readonly("eta_a", &MembershipProfile::etaA)
        .def_readonly("eta_b", &MembershipProfile::etaB)
        .def("__len__", &MembershipProfile::size)
        .def("swapped_poles", &MembershipProfile::swappedPoles);

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init([](std::vector<std::string> labels, const py::array_t<double>& adjacency) {
                 return WeightedGraph(std::move(labels), WeightMatrix(fromArray(adjacency)));
             }),
             py::arg("labels"), py::arg("adjacency"))
        .def_property_readonly("labels", &WeightedGraph::labels)
        .def_property_readonly("num_nodes", &WeightedGraph::numNodes)
        .def_property_readonly("num_edges", &WeightedGraph::numEdges)
        .def_property_readonly("total_weight", &WeightedGraph::totalWeight)
        .def("adjacency", [](const WeightedGraph& g) { return toArray(g.adjacency()); })
        .def("index_of", &WeightedGraph::indexOf)
        .def("largest_component", [](const WeightedGraph& g) { return largestComponent(g); })
        .def("to_dot", [](const WeightedGraph& g) { return io::exportDot(g); })
        .def("__repr__", [](const WeightedGraph& g) {
            return "Graph(nodes=" + std::to_string(g.numNodes()) + ", edges=" + std::to_string(g.numEdges()) + ")";
        });

    m.def(
        "load_edge_list",
        [](const std::string& path, bool binarize) {
            LoadOptions lo;
            lo.binarize = binarize;
            return loadEdgeList(path, lo);
        },
        py::arg("path"), py::arg("binarize") = false);
    m.def(
        "parse_edge_list",
        [](const std::string& text, bool binarize) {
            LoadOptions lo;
            lo.binarize = binarize;
            return parseEdgeList(text, lo);
        },
        py::arg("text"), py::arg("binarize") = false);
    m.def(
        "read_membership",
        [](const std::string& path, const WeightedGraph* graph) -> py::object {
            const auto table = io::readMembership(path);
            if (graph) return py::cast(io::alignMembership(table, graph->labels()));
            return py::make_tuple(table.labels, table.profile);
        },
        py::arg("path"), py::arg("graph") = nullptr,
        "Returns a Profile aligned to `graph`, or (labels, Profile) in file order.");

    m.def("pair_risk", &pairRisk, py::arg("i"), py::arg("j"), py::arg("profile"), py::arg("operators") = OperatorConfig{});
    m.def(
        "jdj_pol",
        [](const std::vector<std::size_t>& nodes, const MembershipProfile& prof, const OperatorConfig& ops) {
            return jdjPol(nodes, prof, ops);
        },
        py::arg("nodes"), py::arg("profile"), py::arg("operators") = OperatorConfig{});
    m.def(
        "capacity_matrix",
        [](const MembershipProfile& prof, const OperatorConfig& ops, const std::string& kind) {
            const auto meas = measureFor(prof, ops, kind);
            return py::make_tuple(toArray(meas.matrix().entries()), meas.matrix().normalizer());
        },
        py::arg("profile"), py::arg("operators") = OperatorConfig{}, py::arg("kind") = "dialogue",
        "Normalized pairwise matrix and the ordered-pair total it was divided by.");
    m.def(
        "mu",
        [](const py::array_t<double>& pairwise, const std::vector<std::size_t>& nodes) {
            const TwoAdditiveFuzzyMeasure meas(PairwiseCapacityMatrix(fromArray(pairwise), CapacityKind::Combined, 1.0));
            return muValue(meas, nodes);
        },
        py::arg("pairwise"), py::arg("nodes"));
    m.def(
        "shapley",
        [](const MembershipProfile& prof, const OperatorConfig& ops, const std::string& kind, bool bruteForce) {
            const auto meas = measureFor(prof, ops, kind);
            if (!bruteForce) return shapleyVector(meas).values;
            const auto fn = asSetFunction(meas);
            std::vector<double> out;
            for (std::size_t i = 0; i < meas.size(); ++i) out.push_back(shapleyBruteForce(fn, meas.size(), i));
            return out;
        },
        py::arg("profile"), py::arg("operators") = OperatorConfig{}, py::arg("kind") = "dialogue",
        py::arg("brute_force") = false);

    m.def(
        "modularity",
        [](const WeightedGraph& g, const std::vector<std::size_t>& assignment) {
            return modularity(g.weights(), Partition(assignment));
        },
        py::arg("graph"), py::arg("assignment"));
    m.def(
        "louvain", [](const WeightedGraph& g, std::uint64_t seed) { return louvain(g.weights(), seed).partition.assignment(); },
        py::arg("graph"), py::arg("seed") = 0);
    m.def(
        "polarization_louvain",
        [](const WeightedGraph& g, const MembershipProfile& prof, const OperatorConfig& ops, double gamma, bool rescale,
           std::uint64_t seed, const std::string& kind) {
            const auto meas = measureFor(prof, ops, kind);
            const auto f = associatedGraph(meas, ops.symmetrizer);
            const BlendSpec spec{gamma, rescale};
            const auto blended = blend(g.weights(), f, spec);
            const auto det = detectCommunities(g.weights(), blended, seed);
            py::dict out;
            out["assignment"] = det.partition.assignment();
            out["Q"] = modularity(g.weights(), det.partition);
            out["Q_blend"] = modularity(blended, det.partition);
            out["warnings"] = det.trace.warnings;
            return out;
        },
        py::arg("graph"), py::arg("profile"), py::arg("operators") = OperatorConfig{}, py::arg("gamma") = 0.5,
        py::arg("rescale") = false, py::arg("seed") = 0, py::arg("kind") = "dialogue");
    m.def(
        "cohesion",
        [](const std::vector<std::size_t>& assignment, const MembershipProfile& prof, const OperatorConfig& ops,
           const std::string& mode) { return cohesionDict(partitionCohesion(Partition(assignment), prof, ops, parseNormMode(mode))); },
        py::arg("assignment"), py::arg("profile"), py::arg("operators") = OperatorConfig{},
        py::arg("norm_mode") = "positive-pairs");
    m.def(
        "gamma_sweep",
        [](const WeightedGraph& g, const MembershipProfile& prof, const OperatorConfig& ops,
           const std::vector<double>& gammas, std::uint64_t seed, const std::string& mode, bool rescale) {
            SweepOptions so;
            so.seed = seed;
            so.normMode = parseNormMode(mode);
            so.rescale = rescale;
            SweepReport report;
            {
                py::gil_scoped_release release;
                report = gammaSweep(g, prof, ops, gammas, so);
            }
            py::list rows;
            for (const auto& row : report.rows) {
                py::dict d;
                d["gamma"] = row.gamma ? py::cast(*row.gamma) : py::none();
                d["assignment"] = row.partition.assignment();
                d["Q"] = row.modularity;
                d["Q_blend"] = row.blendModularity;
                d["pol"] = row.cohesion.pol;
                d["cohesion"] = cohesionDict(row.cohesion);
                rows.append(d);
            }
            return rows;
        },
        py::arg("graph"), py::arg("profile"), py::arg("operators") = OperatorConfig{},
        py::arg("gammas") = std::vector<double>{0.5, 0.4, 0.3, 0.2, 0.1, 0.0}, py::arg("seed") = 0,
        py::arg("norm_mode") = "positive-pairs", py::arg("rescale") = false);
    m.def(
        "synthesize",
        [](std::size_t nodesPerBlock, std::size_t blocks, double intra, double inter, double sharpness, bool crisp,
           double noise, std::uint64_t seed) {
            SyntheticSpec spec;
            spec.nodesPerBlock = nodesPerBlock;
            spec.blocks = blocks;
            spec.intraProb = intra;
            spec.interProb = inter;
            spec.poleSharpness = sharpness;
            spec.crisp = crisp;
            spec.noise = noise;
            spec.seed = seed;
            auto inst = generateSynthetic(spec);
            return py::make_tuple(inst.graph, inst.profile, inst.block);
        },
        py::arg("nodes_per_block") = 30, py::arg("blocks") = 2, py::arg("intra") = 0.3, py::arg("inter") = 0.05,
        py::arg("sharpness") = 8.0, py::arg("crisp") = false, py::arg("noise") = 0.05, py::arg("seed") = 0,
        "Returns (graph, profile, planted block per node).");
}
