#pragma once

#include <cstdint>
#include <optional>

#include "ptlens/complex.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/report.hpp"

namespace ptlens {

// Finite-truncation parameters. The true complexes are infinite and locally
// infinite; `radius` bounds the generation depth from the root and
// `branching` stands in for "infinitely many" wherever the structure rules
// demand unbounded repetition at a vertex.
struct GenConfig {
    int radius = 2;
    int branching = 2;
    int bridge_length = 2; // triangles per bridge corridor (case C3 only)
    std::uint64_t seed = 0;
};

// Checks radius >= 1, branching >= 1 and bridge_length >= 2. Case C3
// additionally needs branching >= 2 (it doubles as the component count).
void require_valid(const GenConfig& cfg, StructureCase c);

// Builds a deterministic truncation of the primitive disk complex of L (for
// case C3, together with the ambient bridge corridors) whose interior obeys
// the structure rules for classify(L). Identical (L, cfg) give identical
// output, byte for byte after serialization.
LabeledComplex generate(const LensSpace& L, const GenConfig& cfg);

// Structure validation against the case rules for classify(L). Interior
// means non-frontier: per-vertex and per-edge multiplicity checks skip
// anything touching the truncation boundary.
//
// The two-argument form checks structural shape only (label sets, triangle
// patterns, edge multiplicities, connectivity, bridge layout). Passing cfg
// additionally enforces the ">= branching" incidence counts at interior
// vertices and the bridge length.
Report validate_structure(const LensSpace& L, const LabeledComplex& c);
Report validate_structure(const LensSpace& L, const LabeledComplex& c,
                          const GenConfig& cfg);

// Reads the structure case off the labels and incidences of a complex:
// bridges mean C3, triangles with uniform type-1 labels mean C2a, a type-0
// edge shared by two triangles separates C2b from C2c, and label sets settle
// the tree cases. Exact on generator-shaped truncations; throws
// Error("AmbiguousCase") when nothing matches.
StructureCase infer_case(const LabeledComplex& c);

// Smallest lens space of each structure case, e.g. for validating a complex
// whose parameters were never recorded.
LensSpace representative(StructureCase c);

} // namespace ptlens
