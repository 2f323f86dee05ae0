#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ptlens/io.hpp"

#ifndef PTLENS_CLI_PATH
#define PTLENS_CLI_PATH "./ptlens"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    RunResult result;
    std::string command = env_prefix + (env_prefix.empty() ? "" : " ") +
                          std::string(PTLENS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
        result.out.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ptlens_cli_test_" + name);
}

} // namespace

TEST_CASE("classify prints the normalized pair and case") {
    RunResult r = run_cli("classify 5 2");
    CHECK(r.exit_code == 0);
    auto j = ptlens::io::json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["q"] == 2);
    CHECK(j["case"] == "C2b");

    RunResult n = run_cli("classify 7 5");
    auto jn = ptlens::io::json::parse(n.out);
    CHECK(jn["q"] == 2); // normalized from q = 5
}

TEST_CASE("validation failures exit with code 1") {
    CHECK(run_cli("classify 4 2").exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("classify").exit_code == 2);
    CHECK(run_cli("frobnicate 1 2").exit_code == 2);
}

TEST_CASE("generate output re-reads losslessly through ptree and analyze") {
    auto complex_path = temp_file("complex.json");
    auto tree_path = temp_file("tree.json");
    auto auto_path = temp_file("auto.json");

    RunResult gen = run_cli("generate 13 5 --radius 2 --branching 2 --bridge-length 3 --seed 5 --out " +
                            complex_path.string());
    REQUIRE(gen.exit_code == 0);

    RunResult tree = run_cli("ptree " + complex_path.string() + " --p 13 --q 5 --out " +
                             tree_path.string());
    REQUIRE(tree.exit_code == 0);

    // The structure case is also inferable from the complex alone.
    RunResult inferred = run_cli("ptree " + complex_path.string());
    REQUIRE(inferred.exit_code == 0);
    CHECK(ptlens::io::json::parse(inferred.out)["case"] == "C3");

    // Identity automorphism over the tree's vertices.
    auto tree_json = ptlens::io::load_json_file(tree_path.string());
    ptlens::io::json map = ptlens::io::json::array();
    for (const auto& v : tree_json["vertices"]) {
        map.push_back({v["id"], v["id"]});
    }
    std::ofstream(auto_path) << ptlens::io::json{{"map", map}}.dump();

    RunResult fix = run_cli("fixpoint " + tree_path.string() + " " + auto_path.string());
    REQUIRE(fix.exit_code == 0);
    auto locus = ptlens::io::json::parse(fix.out);
    CHECK(locus["kind"] == "vertex");

    RunResult analyze = run_cli("analyze 13 5 " + complex_path.string() + " " + auto_path.string());
    REQUIRE(analyze.exit_code == 0);
    auto outcome = ptlens::io::json::parse(analyze.out);
    CHECK(outcome["outcome"] == "CertificateV");

    std::filesystem::remove(complex_path);
    std::filesystem::remove(tree_path);
    std::filesystem::remove(auto_path);
}

TEST_CASE("generate is byte-stable for a fixed seed") {
    RunResult a = run_cli("generate 7 2 --radius 2 --branching 2 --seed 11");
    RunResult b = run_cli("generate 7 2 --radius 2 --branching 2 --seed 11");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("PTREE_SEED acts as the seed fallback") {
    RunResult env = run_cli("generate 13 5 --radius 1 --branching 2",
                            "PTREE_SEED=11");
    RunResult flag = run_cli("generate 13 5 --radius 1 --branching 2 --seed 11");
    RunResult other = run_cli("generate 13 5 --radius 1 --branching 2 --seed 12");
    CHECK(env.exit_code == 0);
    CHECK(env.out == flag.out);
    CHECK(env.out != other.out);
}

TEST_CASE("dot output is emitted on request") {
    RunResult r = run_cli("generate 3 1 --radius 1 --branching 1 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph complex {") != std::string::npos);
}

TEST_CASE("surgery reduces a pattern file") {
    auto pattern_path = temp_file("pattern.json");
    ptlens::io::json pattern{
        {"boundary", {0, 1, "z", 2, 3}},
        {"marked", "z"},
        {"arcs", {{0, 1}, {2, 3}}},
        {"loops", {{{"id", 0}, {"parent", nullptr}}}},
    };
    std::ofstream(pattern_path) << pattern.dump();

    RunResult r = run_cli("surgery " + pattern_path.string() + " --trace");
    REQUIRE(r.exit_code == 0);
    auto j = ptlens::io::json::parse(r.out);
    CHECK(j["initialComponents"] == 3);
    CHECK(j["steps"].size() == 3);
    CHECK(j["steps"][0]["kind"] == "loop");
    CHECK(j["finalEmpty"] == true);

    std::filesystem::remove(pattern_path);
}

TEST_CASE("verify runs a small grid") {
    RunResult r = run_cli(
        "verify --pmax 12 --grid-pmax 8 --pairs 50 --trees 5 --tree-max 60 --per-cell 2 "
        "--patterns 10 --max-components 12");
    REQUIRE(r.exit_code == 0);
    auto j = ptlens::io::json::parse(r.out);
    CHECK(j["allPassed"] == true);
    CHECK(j["suites"].size() == 8);
}
