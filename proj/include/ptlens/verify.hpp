#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptlens/analysis.hpp"
#include "ptlens/automorphism.hpp"
#include "ptlens/complex.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/pattern.hpp"
#include "ptlens/primitive_tree.hpp"
#include "ptlens/rng.hpp"

namespace ptlens::verify {

// Independent oracle for the structure-case classification: evaluates the
// seven case conditions literally and separately, so the test can also
// assert that exactly one fires per (p, q).
struct OracleVerdict {
    StructureCase tag = StructureCase::C1a;
    int fired = 0; // how many of the seven conditions hold
};
OracleVerdict classify_oracle(const LensSpace& L);

// A tree plus an involution of it, built so that validity is guaranteed by
// construction (two mirrored halves, optionally around a fixed spine).
struct TreeInvolution {
    PrimitiveTree tree;
    VertexMap map;
};

PrimitiveTree random_tree(RngStream& rng, int n);
TreeInvolution random_involution(RngStream& rng, int max_vertices);

// One decision-table instance: a lens space, a structure-valid complex, an
// involution of its primitive tree, and the expected analysis outcome.
struct CellInstance {
    std::string cell; // "<case>/<locus>[/<label>]"
    LensSpace L;
    LabeledComplex complex;
    VertexMap map;
    AnalysisOutcome::Kind expected = AnalysisOutcome::Kind::CertificateV;
    int expected_dual_count = 0; // CertificateW cells
};

// Instances covering every decision-table cell realizable by label- and
// color-preserving tree involutions, `per_cell` instances each.
std::vector<CellInstance> make_cell_instances(RngStream& rng, int per_cell);

// Seeded random valid intersection pattern with at most `max_components`
// components.
IntersectionPattern random_pattern(RngStream& rng, int max_components);

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> notes; // first few failure descriptions
    double seconds = 0.0;

    void fail(const std::string& note);
    void expect(bool ok, const std::string& note);
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int pmax = 50;              // classification grid bound
    int grid_pmax = 30;         // homeomorphism-relation grid bound
    int random_pairs = 10000;   // normalization samples
    int trees = 1000;           // fixed-point trials
    int tree_max_vertices = 2000;
    int per_cell = 20;          // decision-table instances per cell
    int patterns = 1000;        // surgery trials
    int pattern_max_components = 50;
};

SuiteResult verify_classification_grid(const VerifyOptions& options);
SuiteResult verify_normalization(const VerifyOptions& options);
SuiteResult verify_generator(const VerifyOptions& options);
SuiteResult verify_primitive_trees(const VerifyOptions& options);
SuiteResult verify_fixed_points(const VerifyOptions& options);
SuiteResult verify_decision_table(const VerifyOptions& options);
SuiteResult verify_surgery(const VerifyOptions& options);
SuiteResult verify_corridors(const VerifyOptions& options);

std::vector<SuiteResult> verify_all(const VerifyOptions& options);

// Case representatives used by the generator and primitive-tree suites.
const std::vector<LensSpace>& case_representatives();

} // namespace ptlens::verify
