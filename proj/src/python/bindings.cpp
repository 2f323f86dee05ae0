#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptlens/analysis.hpp"
#include "ptlens/automorphism.hpp"
#include "ptlens/error.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/io.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/pattern.hpp"
#include "ptlens/primitive_tree.hpp"
#include "ptlens/verify.hpp"

namespace py = pybind11;
using ptlens::io::json;

namespace {

// The data model is JSON-shaped on both sides; bridging through the json
// module keeps the bindings thin and the schemas identical to the CLI's.
json to_cpp(const py::handle& obj) {
    py::module_ pyjson = py::module_::import("json");
    auto dumped = py::cast<std::string>(pyjson.attr("dumps")(obj));
    return json::parse(dumped);
}

py::object to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

py::list report_to_py(const ptlens::Report& report) {
    py::list out;
    for (const auto& v : report.violations) out.append(v);
    return out;
}

ptlens::GenConfig config_from(int radius, int branching, int bridge_length,
                              std::uint64_t seed) {
    ptlens::GenConfig cfg;
    cfg.radius = radius;
    cfg.branching = branching;
    cfg.bridge_length = bridge_length;
    cfg.seed = seed;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lens-space primitive trees: structure cases, truncated complexes, "
              "tree involutions, and chord-diagram surgery";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ptlens::Error& e) {
            PyErr_SetString(PyExc_ValueError,
                            (e.code() + ": " + std::string(e.what())).c_str());
        }
    });

    m.def(
        "normalize",
        [](long long p, long long q) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            return py::make_tuple(L.p, L.q);
        },
        py::arg("p"), py::arg("q"),
        "Reduce (p, q) to the canonical representative with 1 <= q <= p/2.");

    m.def(
        "are_homeomorphic",
        [](std::pair<long long, long long> a, std::pair<long long, long long> b) {
            return ptlens::are_homeomorphic(a, b);
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "classify",
        [](long long p, long long q) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            return to_py(json{{"p", L.p},
                              {"q", L.q},
                              {"case", std::string(case_name(classify(L)))}});
        },
        py::arg("p"), py::arg("q"), "Normalized pair plus its structure-case tag.");

    m.def(
        "generate",
        [](long long p, long long q, int radius, int branching, int bridge_length,
           std::uint64_t seed) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            return to_py(ptlens::io::to_json(
                ptlens::generate(L, config_from(radius, branching, bridge_length, seed))));
        },
        py::arg("p"), py::arg("q"), py::arg("radius") = 2, py::arg("branching") = 2,
        py::arg("bridge_length") = 2, py::arg("seed") = 0,
        "Deterministic truncation of the primitive disk complex.");

    m.def("validate_complex", [](const py::handle& complex_obj) {
        return report_to_py(ptlens::validate(ptlens::io::complex_from_json(to_cpp(complex_obj))));
    });

    m.def(
        "validate_structure",
        [](long long p, long long q, const py::handle& complex_obj, int radius, int branching,
           int bridge_length, std::uint64_t seed) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            ptlens::LabeledComplex c = ptlens::io::complex_from_json(to_cpp(complex_obj));
            if (branching > 0) {
                return report_to_py(ptlens::validate_structure(
                    L, c, config_from(radius, branching, bridge_length, seed)));
            }
            return report_to_py(ptlens::validate_structure(L, c));
        },
        py::arg("p"), py::arg("q"), py::arg("complex"), py::arg("radius") = 0,
        py::arg("branching") = 0, py::arg("bridge_length") = 2, py::arg("seed") = 0,
        "Case-structure validation; pass branching > 0 to enforce incidence counts.");

    m.def(
        "build_ptree",
        [](long long p, long long q, const py::handle& complex_obj) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            return to_py(ptlens::io::to_json(ptlens::build_primitive_tree(
                L, ptlens::io::complex_from_json(to_cpp(complex_obj)))));
        },
        py::arg("p"), py::arg("q"), py::arg("complex"));

    m.def("validate_ptree", [](const py::handle& tree_obj) {
        return report_to_py(
            ptlens::validate_ptree(ptlens::io::ptree_from_json(to_cpp(tree_obj))));
    });

    m.def(
        "check_automorphism",
        [](const py::handle& tree_obj, const py::handle& map_obj) {
            return ptlens::check_automorphism(
                ptlens::io::ptree_from_json(to_cpp(tree_obj)),
                ptlens::io::vertex_map_from_json(to_cpp(map_obj)));
        },
        py::arg("tree"), py::arg("mapping"),
        "Order of a color- and label-preserving tree automorphism.");

    m.def(
        "fixed_point",
        [](const py::handle& tree_obj, const py::handle& map_obj) {
            return to_py(ptlens::io::to_json(
                ptlens::fixed_point(ptlens::io::ptree_from_json(to_cpp(tree_obj)),
                                    ptlens::io::vertex_map_from_json(to_cpp(map_obj)))));
        },
        py::arg("tree"), py::arg("mapping"));

    m.def(
        "brute_force_fixed",
        [](const py::handle& tree_obj, const py::handle& map_obj) {
            py::list out;
            for (const auto& locus :
                 ptlens::brute_force_fixed(ptlens::io::ptree_from_json(to_cpp(tree_obj)),
                                           ptlens::io::vertex_map_from_json(to_cpp(map_obj)))) {
                out.append(to_py(ptlens::io::to_json(locus)));
            }
            return out;
        },
        py::arg("tree"), py::arg("mapping"));

    m.def(
        "analyze",
        [](long long p, long long q, const py::handle& complex_obj, const py::handle& map_obj) {
            ptlens::LensSpace L = ptlens::normalize(p, q);
            ptlens::LabeledComplex c = ptlens::io::complex_from_json(to_cpp(complex_obj));
            ptlens::PrimitiveTree t = ptlens::build_primitive_tree(L, c);
            return to_py(ptlens::io::to_json(
                ptlens::analyze(L, t, c, ptlens::io::vertex_map_from_json(to_cpp(map_obj)))));
        },
        py::arg("p"), py::arg("q"), py::arg("complex"), py::arg("mapping"),
        "Fixed-locus case analysis: a certificate vertex, a dual-side "
        "certificate, or a contradiction.");

    m.def(
        "swap_admissible",
        [](long long p, long long q, const std::string& label) {
            ptlens::SwapVerdict verdict = ptlens::swap_admissible(
                ptlens::normalize(p, q), ptlens::tree_label_from_name(label));
            return to_py(json{{"admissible", verdict.admissible}, {"reason", verdict.reason}});
        },
        py::arg("p"), py::arg("q"), py::arg("label"));

    m.def("validate_pattern", [](const py::handle& pattern_obj) {
        return report_to_py(
            ptlens::validate_pattern(ptlens::io::pattern_from_json(to_cpp(pattern_obj))));
    });

    m.def("innermost_loop", [](const py::handle& pattern_obj) -> py::object {
        auto loop = ptlens::innermost_loop(ptlens::io::pattern_from_json(to_cpp(pattern_obj)));
        if (!loop) return py::none();
        return py::int_(*loop);
    });

    m.def("outermost_arc_avoiding", [](const py::handle& pattern_obj) {
        return ptlens::outermost_arc_avoiding(
            ptlens::io::pattern_from_json(to_cpp(pattern_obj)));
    });

    m.def("reduce_step", [](const py::handle& pattern_obj) {
        return to_py(ptlens::io::to_json(
            ptlens::reduce_step(ptlens::io::pattern_from_json(to_cpp(pattern_obj)))));
    });

    m.def("reduce_to_disjoint", [](const py::handle& pattern_obj) {
        return to_py(ptlens::io::to_json(
            ptlens::reduce_to_disjoint(ptlens::io::pattern_from_json(to_cpp(pattern_obj)))));
    });

    m.def("complex_to_dot", [](const py::handle& complex_obj) {
        return ptlens::io::complex_to_dot(ptlens::io::complex_from_json(to_cpp(complex_obj)));
    });

    m.def("ptree_to_dot", [](const py::handle& tree_obj) {
        return ptlens::io::ptree_to_dot(ptlens::io::ptree_from_json(to_cpp(tree_obj)));
    });

    m.def(
        "verify",
        [](std::uint64_t seed, int pmax, int grid_pmax, int pairs, int trees, int tree_max,
           int per_cell, int patterns, int max_components) {
            ptlens::verify::VerifyOptions options;
            options.seed = seed;
            options.pmax = pmax;
            options.grid_pmax = grid_pmax;
            options.random_pairs = pairs;
            options.trees = trees;
            options.tree_max_vertices = tree_max;
            options.per_cell = per_cell;
            options.patterns = patterns;
            options.pattern_max_components = max_components;

            json suites = json::array();
            bool all_passed = true;
            for (const auto& suite : ptlens::verify::verify_all(options)) {
                all_passed = all_passed && suite.passed;
                suites.push_back({{"name", suite.name},
                                  {"passed", suite.passed},
                                  {"checks", suite.checks},
                                  {"failures", suite.failures},
                                  {"seconds", suite.seconds},
                                  {"notes", suite.notes}});
            }
            return to_py(json{{"allPassed", all_passed}, {"suites", suites}});
        },
        py::arg("seed") = 0, py::arg("pmax") = 50, py::arg("grid_pmax") = 30,
        py::arg("pairs") = 10000, py::arg("trees") = 1000, py::arg("tree_max") = 2000,
        py::arg("per_cell") = 20, py::arg("patterns") = 1000, py::arg("max_components") = 50,
        "Run the full property suite; tune the knobs down for smoke tests.");
}
