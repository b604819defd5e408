#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tiltfan/brauer.hpp"
#include "tiltfan/cluster.hpp"
#include "tiltfan/io.hpp"
#include "tiltfan/kase.hpp"
#include "tiltfan/weyl.hpp"

namespace py = pybind11;
using namespace tiltfan;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string fan_text(const Fan& f) { return fan_to_json(f).dump(); }

std::string cluster_fan(const std::string& matrix, std::size_t budget) {
    GfanResult r = enumerate_gfan(bmatrix_from_json(parse_json(matrix, "matrix")), budget);
    json j = fan_to_json(r.fan);
    j["budget_exhausted"] = r.exhausted;
    j["explored"] = r.explored;
    return j.dump();
}

std::string mutate_sequence(const std::string& matrix, const std::vector<int>& seq) {
    ExtendedSeed s = initial_seed(bmatrix_from_json(parse_json(matrix, "matrix")));
    for (int k : seq) s = mutate(s, k);
    auto rows = [](const IntMatrix& m) {
        json a = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json r = json::array();
            for (const auto& x : m.row(i)) r.push_back(int_to_json(x));
            a.push_back(r);
        }
        return a;
    };
    return json{{"B", rows(s.B)}, {"C", rows(s.C)}, {"G", rows(s.G)}}.dump();
}

std::string brauer(const std::string& graph) {
    BrauerGraph g = brauer_from_json(parse_json(graph, "graph"));
    BrauerFan bf = brauer_fan(g);
    json j = fan_to_json(bf.fan);
    j["graph_type"] = graph_type_name(classify_graph(g));
    json walks = json::array();
    for (const auto& w : bf.walks) walks.push_back(walk_string(g, w));
    j["walks"] = walks;
    return j.dump();
}

std::string analyze_fan(const std::string& fan, long ell) {
    return analysis_to_json(analyze(fan_from_json(parse_json(fan, "fan")), ell)).dump();
}

std::string classify_fan(const std::string& fan) {
    Fan f = fan_from_json(parse_json(fan, "fan"));
    ConvexityReport cr = convexity_report(f);
    json j{{"convex", cr.convex}};
    if (cr.convex) j["reflexive"] = dual_polytope(f).reflexive;
    if (f.rank == 2) {
        Rank2Class c = rank2_classify(f);
        j["rank2_class"] = c.convex ? json(c.cls) : json(nullptr);
    }
    return j.dump();
}

std::vector<long> eulerian(const std::string& type, int n) {
    std::vector<long> out;
    for (const auto& x : descent_histogram(cartan_preset(type, n))) out.push_back(x.get_si());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "g-fans, g-polytopes and their combinatorics";
    // kept alive for the interpreter's lifetime
    static PyObject* exc = py::exception<Error>(m, "TiltfanError").release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc, (std::string(error_name(e.kind())) + ": " + e.what()).c_str());
        }
    });
    m.attr("SCHEMA_VERSION") = kSchemaVersion;
    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
    m.def("cluster_fan", &cluster_fan, py::arg("matrix"), py::arg("budget"));
    m.def("mutate_sequence", &mutate_sequence, py::arg("matrix"), py::arg("sequence"));
    m.def("brauer_fan", &brauer, py::arg("graph"));
    m.def("coxeter_fan", [](const std::string& t, int n) { return fan_text(coxeter_fan(cartan_preset(t, n))); },
          py::arg("type"), py::arg("n"));
    m.def("kase_fan", [](int l, int mm) { return fan_text(kase_family_fan(l, mm)); }, py::arg("l"), py::arg("m"));
    m.def("analyze", &analyze_fan, py::arg("fan"), py::arg("ehrhart"));
    m.def("classify", &classify_fan, py::arg("fan"));
    m.def("eulerian", &eulerian, py::arg("type"), py::arg("n"));
}
