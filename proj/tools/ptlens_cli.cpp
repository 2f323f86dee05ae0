#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ptlens/analysis.hpp"
#include "ptlens/error.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/io.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/pattern.hpp"
#include "ptlens/primitive_tree.hpp"
#include "ptlens/verify.hpp"

namespace {

using ptlens::io::json;

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ptlens::io::write_text_file(out_path, text);
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ptlens::io::write_text_file(out_path, text);
    }
}

std::uint64_t env_seed_fallback() {
    if (const char* env = std::getenv("PTREE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lens-space primitive-tree toolkit"};
    app.require_subcommand(1);

    // classify
    int cl_p = 0, cl_q = 0;
    auto* classify_cmd = app.add_subcommand("classify", "normalize (p, q) and print its structure case");
    classify_cmd->add_option("p", cl_p, "order of the first homology group")->required();
    classify_cmd->add_option("q", cl_q, "second lens parameter")->required();

    // generate
    int gen_p = 0, gen_q = 0;
    ptlens::GenConfig gen_cfg;
    std::string gen_format = "json";
    std::string gen_out;
    bool gen_seed_given = false;
    auto* generate_cmd = app.add_subcommand("generate", "emit a finite truncation of the primitive disk complex");
    generate_cmd->add_option("p", gen_p)->required();
    generate_cmd->add_option("q", gen_q)->required();
    generate_cmd->add_option("--radius", gen_cfg.radius, "generation depth from the root")
        ->capture_default_str();
    generate_cmd->add_option("--branching", gen_cfg.branching, "finite stand-in for infinite valency")
        ->capture_default_str();
    generate_cmd->add_option("--bridge-length", gen_cfg.bridge_length, "triangles per bridge (case C3)")
        ->capture_default_str();
    generate_cmd->add_option("--seed", gen_cfg.seed, "generation seed")
        ->each([&](const std::string&) { gen_seed_given = true; });
    generate_cmd->add_option("--format", gen_format, "json or dot")->capture_default_str();
    generate_cmd->add_option("--out", gen_out, "output file (stdout when omitted)");

    // ptree
    std::string pt_complex, pt_out, pt_format = "json";
    int pt_p = 0, pt_q = 0;
    auto* ptree_cmd = app.add_subcommand("ptree", "build the primitive tree of a complex");
    ptree_cmd->add_option("complex", pt_complex, "complex JSON file")->required();
    auto* pt_p_opt = ptree_cmd->add_option("--p", pt_p, "lens parameter p (inferred when omitted)");
    ptree_cmd->add_option("--q", pt_q, "lens parameter q")->needs(pt_p_opt);
    ptree_cmd->add_option("--out", pt_out, "output file (stdout when omitted)");
    ptree_cmd->add_option("--format", pt_format, "json or dot")->capture_default_str();

    // fixpoint
    std::string fx_tree, fx_auto;
    auto* fixpoint_cmd = app.add_subcommand("fixpoint", "fixed locus of a tree involution");
    fixpoint_cmd->add_option("tree", fx_tree, "tree JSON file")->required();
    fixpoint_cmd->add_option("auto", fx_auto, "automorphism JSON file")->required();

    // analyze
    int an_p = 0, an_q = 0;
    std::string an_complex, an_auto;
    auto* analyze_cmd = app.add_subcommand("analyze", "run the involution case analysis");
    analyze_cmd->add_option("p", an_p)->required();
    analyze_cmd->add_option("q", an_q)->required();
    analyze_cmd->add_option("complex", an_complex, "complex JSON file")->required();
    analyze_cmd->add_option("auto", an_auto, "automorphism JSON file")->required();

    // surgery
    std::string sg_pattern, sg_out;
    bool sg_trace = false;
    auto* surgery_cmd = app.add_subcommand("surgery", "reduce an intersection pattern to the empty one");
    surgery_cmd->add_option("pattern", sg_pattern, "pattern JSON file")->required();
    surgery_cmd->add_flag("--trace", sg_trace, "include every removal step");
    surgery_cmd->add_option("--out", sg_out, "output file (stdout when omitted)");

    // verify
    ptlens::verify::VerifyOptions vo;
    vo.seed = env_seed_fallback();
    auto* verify_cmd = app.add_subcommand("verify", "run the full property suite on a parameter grid");
    verify_cmd->add_option("--pmax", vo.pmax, "classification grid bound")->capture_default_str();
    verify_cmd->add_option("--grid-pmax", vo.grid_pmax, "homeomorphism grid bound")
        ->capture_default_str();
    verify_cmd->add_option("--seed", vo.seed, "seed for all randomized suites");
    verify_cmd->add_option("--pairs", vo.random_pairs, "normalization samples")->capture_default_str();
    verify_cmd->add_option("--trees", vo.trees, "fixed-point trials")->capture_default_str();
    verify_cmd->add_option("--tree-max", vo.tree_max_vertices, "max vertices per trial tree")
        ->capture_default_str();
    verify_cmd->add_option("--per-cell", vo.per_cell, "decision-table instances per cell")
        ->capture_default_str();
    verify_cmd->add_option("--patterns", vo.patterns, "surgery trials")->capture_default_str();
    verify_cmd->add_option("--max-components", vo.pattern_max_components,
                           "max components per surgery trial")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            ptlens::LensSpace L = ptlens::normalize(cl_p, cl_q);
            emit(json{{"p", L.p}, {"q", L.q}, {"case", std::string(case_name(classify(L)))}}, "");
            return 0;
        }

        if (*generate_cmd) {
            if (!gen_seed_given) gen_cfg.seed = env_seed_fallback();
            ptlens::LensSpace L = ptlens::normalize(gen_p, gen_q);
            ptlens::LabeledComplex c = ptlens::generate(L, gen_cfg);
            if (gen_format == "dot") {
                emit_text(ptlens::io::complex_to_dot(c), gen_out);
            } else if (gen_format == "json") {
                emit(ptlens::io::to_json(c), gen_out);
            } else {
                throw ptlens::Error("BadFormat", "format must be json or dot");
            }
            return 0;
        }

        if (*ptree_cmd) {
            ptlens::LabeledComplex c =
                ptlens::io::complex_from_json(ptlens::io::load_json_file(pt_complex));
            ptlens::LensSpace L = pt_p > 0 ? ptlens::normalize(pt_p, pt_q)
                                           : ptlens::representative(ptlens::infer_case(c));
            ptlens::PrimitiveTree t = ptlens::build_primitive_tree(L, c);
            if (pt_format == "dot") {
                emit_text(ptlens::io::ptree_to_dot(t), pt_out);
            } else if (pt_format == "json") {
                emit(ptlens::io::to_json(t), pt_out);
            } else {
                throw ptlens::Error("BadFormat", "format must be json or dot");
            }
            return 0;
        }

        if (*fixpoint_cmd) {
            ptlens::PrimitiveTree t =
                ptlens::io::ptree_from_json(ptlens::io::load_json_file(fx_tree));
            ptlens::VertexMap f =
                ptlens::io::vertex_map_from_json(ptlens::io::load_json_file(fx_auto));
            emit(ptlens::io::to_json(ptlens::fixed_point(t, f)), "");
            return 0;
        }

        if (*analyze_cmd) {
            ptlens::LensSpace L = ptlens::normalize(an_p, an_q);
            ptlens::LabeledComplex c =
                ptlens::io::complex_from_json(ptlens::io::load_json_file(an_complex));
            ptlens::PrimitiveTree t = ptlens::build_primitive_tree(L, c);
            ptlens::VertexMap f =
                ptlens::io::vertex_map_from_json(ptlens::io::load_json_file(an_auto));
            emit(ptlens::io::to_json(ptlens::analyze(L, t, c, f)), "");
            return 0;
        }

        if (*surgery_cmd) {
            ptlens::IntersectionPattern p =
                ptlens::io::pattern_from_json(ptlens::io::load_json_file(sg_pattern));
            ptlens::Report valid = ptlens::validate_pattern(p);
            if (!valid.ok()) {
                throw ptlens::Error("InvalidPattern", valid.violations.front());
            }
            ptlens::ReduceTrace trace = ptlens::reduce_to_disjoint(p);
            json j = ptlens::io::to_json(trace);
            if (!sg_trace) j.erase("steps");
            emit(j, sg_out);
            return 0;
        }

        if (*verify_cmd) {
            auto results = ptlens::verify::verify_all(vo);
            bool all_passed = true;
            json suites = json::array();
            for (const auto& suite : results) {
                all_passed = all_passed && suite.passed;
                suites.push_back({{"name", suite.name},
                                  {"passed", suite.passed},
                                  {"checks", suite.checks},
                                  {"failures", suite.failures},
                                  {"seconds", suite.seconds},
                                  {"notes", suite.notes}});
            }
            emit(json{{"allPassed", all_passed}, {"suites", suites}}, "");
            return all_passed ? 0 : 1;
        }
    } catch (const ptlens::Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
