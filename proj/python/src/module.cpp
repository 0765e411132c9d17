#include <edgemagic/caterpillar_labeler.hpp>
#include <edgemagic/constellation_labeler.hpp>
#include <edgemagic/io.hpp>
#include <edgemagic/search.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace edgemagic;

namespace {
    SearchBudget make_budget(std::uint64_t max_nodes, long long max_ms)
    {
        SearchBudget budget;
        budget.max_nodes = max_nodes;
        budget.max_time = std::chrono::milliseconds(max_ms);
        return budget;
    }

    Army make_army(int r, int s, int p, const std::vector<std::string> & shapes)
    {
        if (shapes.empty())
            return Army::uniform(r, s, p);
        std::vector<CaterpillarShape> parsed;
        for (auto & text : shapes)
            parsed.push_back(CaterpillarShape::parse(r, s, text));
        if (parsed.size() == 1)
            parsed.resize(static_cast<std::size_t>(p), parsed.front());
        return Army(std::move(parsed));
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Edge-magic labelings of constellations and caterpillar armies";

    py::register_exception<ForestError>(m, "ForestError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<LabelingException>(m, "LabelingError", PyExc_ValueError);

    py::class_<ForestGraph>(m, "Forest")
        .def_property_readonly("n", [](const ForestGraph & g) { return g.n; })
        .def_property_readonly("m", &ForestGraph::m)
        .def_property_readonly("edges",
            [](const ForestGraph & g) {
                std::vector<std::pair<int, int>> out;
                for (auto & e : g.edges)
                    out.emplace_back(e.u, e.v);
                return out;
            })
        .def("to_json", [](const ForestGraph & g) { return forest_to_json(g).dump(2); })
        .def_static("from_json", [](const std::string & text) {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception & e) {
                throw InputError(e.what());
            }
            return forest_from_json(doc);
        })
        .def("__repr__", [](const ForestGraph & g) {
            return "<Forest n=" + std::to_string(g.n) + " m=" + std::to_string(g.m()) + ">";
        });

    py::class_<TotalLabeling>(m, "Labeling")
        .def(py::init([](std::vector<int> vertex_labels, std::vector<int> edge_labels) {
            return TotalLabeling{std::move(vertex_labels), std::move(edge_labels), std::nullopt};
        }), py::arg("vertex_labels"), py::arg("edge_labels"))
        .def_readonly("vertex_labels", &TotalLabeling::vertex_labels)
        .def_readonly("edge_labels", &TotalLabeling::edge_labels)
        .def_readonly("magic_constant", &TotalLabeling::magic_constant)
        .def("__eq__", [](const TotalLabeling & a, const TotalLabeling & b) { return a == b; });

    m.def("make_forest", [](int n, const std::vector<std::pair<int, int>> & edges) {
        std::vector<Edge> list;
        for (auto [u, v] : edges)
            list.push_back({u, v});
        return make_forest(n, std::move(list));
    }, py::arg("n"), py::arg("edges"));
    m.def("constellation", [](std::vector<StarSize> sizes) { return build_constellation(Constellation(std::move(sizes))); },
        py::arg("sizes"));
    m.def("army", [](int r, int s, int p, const std::vector<std::string> & shapes) {
        return build_army(make_army(r, s, p, shapes));
    }, py::arg("r"), py::arg("s"), py::arg("p"), py::arg("shapes") = std::vector<std::string>{});
    m.def("path", &build_path, py::arg("n"));

    m.def("is_symmetric", &is_symmetric, py::arg("sizes"));
    m.def("symmetric_order", [](std::vector<StarSize> sizes) { return symmetric_order(std::move(sizes)).sizes(); },
        py::arg("sizes"));
    m.def("enumerate_odd_constellations", [](int max_n) {
        std::vector<std::pair<std::vector<StarSize>, bool>> out;
        for (auto & entry : enumerate_odd_constellations(max_n))
            out.emplace_back(entry.sizes, entry.symmetric);
        return out;
    }, py::arg("max_n"));

    m.def("standard_labeling", [](std::vector<StarSize> sizes) { return standard_labeling(Constellation(std::move(sizes))); },
        py::arg("sizes"));
    m.def("predicted_magic_constant", [](std::vector<StarSize> sizes) {
        return predicted_magic_constant(Constellation(std::move(sizes)));
    }, py::arg("sizes"));
    m.def("army_labeling", [](int r, int s, int p, const std::vector<std::string> & shapes) {
        return army_labeling(make_army(r, s, p, shapes));
    }, py::arg("r"), py::arg("s"), py::arg("p"), py::arg("shapes") = std::vector<std::string>{});
    m.def("army_magic_constant", &army_magic_constant, py::arg("r"), py::arg("s"), py::arg("p"));

    m.def("verify", [](const ForestGraph & g, const TotalLabeling & t, bool super) {
        auto verdict = super ? verify_super_edge_magic(g, t) : verify_edge_magic(g, t);
        py::dict out;
        out["ok"] = verdict.ok();
        out["error"] = to_string(verdict.error);
        out["magic_constant"] = verdict.magic_constant;
        out["message"] = verdict.message;
        return out;
    }, py::arg("forest"), py::arg("labeling"), py::arg("super") = false);

    m.def("extend_vertex_labeling", [](const ForestGraph & g, std::vector<int> labels) {
        return extend_vertex_labeling(g, VertexLabeling{std::move(labels)});
    }, py::arg("forest"), py::arg("vertex_labels"));

    m.def("labeling_to_json", [](const ForestGraph & g, const TotalLabeling & t, const std::string & kind) {
        return labeling_to_json(g, t, kind).dump(2);
    }, py::arg("forest"), py::arg("labeling"), py::arg("kind") = "edge-magic");
    m.def("labeling_from_json", [](const ForestGraph & g, const std::string & text) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception & e) {
            throw InputError(e.what());
        }
        return labeling_from_json(g, doc);
    }, py::arg("forest"), py::arg("text"));
    m.def("export_dot", &export_dot, py::arg("forest"), py::arg("labeling"));

    m.def("search", [](const ForestGraph & g, bool super, int jobs, bool all_constants, std::uint64_t max_nodes,
                       long long max_ms) {
        auto budget = make_budget(max_nodes, max_ms);
        budget.mode = super ? SearchMode::SuperEdgeMagic : SearchMode::EdgeMagic;
        SearchOptions options;
        options.jobs = jobs;
        options.all_constants = all_constants;
        SearchReport report;
        {
            py::gil_scoped_release release;
            report = search_labeling(g, budget, options);
        }
        return std::make_pair(report_to_json(g, report).dump(), report.labeling);
    }, py::arg("forest"), py::arg("super") = true, py::arg("jobs") = 1, py::arg("all_constants") = false,
        py::arg("max_nodes") = 10'000'000, py::arg("max_ms") = 60'000);

    m.def("scan", [](int max_n, int jobs, std::uint64_t max_nodes, long long max_ms) {
        SearchOptions options;
        options.jobs = jobs;
        std::vector<ScanRecord> records;
        {
            py::gil_scoped_release release;
            records = scan_lee_kong(max_n, make_budget(max_nodes, max_ms), options);
        }
        std::vector<std::string> out;
        for (auto & record : records)
            out.push_back(scan_record_to_json(record).dump());
        return out;
    }, py::arg("max_n"), py::arg("jobs") = 1, py::arg("max_nodes") = 10'000'000, py::arg("max_ms") = 60'000);
}
