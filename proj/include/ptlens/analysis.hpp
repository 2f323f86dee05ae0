#pragma once

#include <string>
#include <utility>

#include "ptlens/automorphism.hpp"
#include "ptlens/complex.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/primitive_tree.hpp"

namespace ptlens {

struct SwapVerdict {
    bool admissible = false;
    std::string reason;
};

// Whether an order-2 element exchanging the ends of an edge of the given
// label is compatible with the covering involution. Exchanging a type-0 edge
// or a bridge forces the induced H1 action to be multiplication by q while
// the covering involution acts by -1; that pins q = -1 (mod p), i.e. a space
// homeomorphic to L(p, 1), whose primitive tree carries neither type-0 edges
// nor bridges. Hence those swaps are always inadmissible; type-1 and type-2
// swaps are admissible.
SwapVerdict swap_admissible(const LensSpace& L, TreeEdgeLabel label);

// Given a fixed white vertex w (case C2a), returns the lowest-id corner of
// its source triangle fixed by f. An order <= 2 permutation of three corners
// always fixes one; Error("ImpossibleInput") reports the defensive case.
int resolve_white_vertex(const PrimitiveTree& t, const LabeledComplex& c, const VertexMap& f,
                         int white);

// Outcome of the fixed-point case analysis for a lens space with primitive
// tree t (built from c) under the involution f:
//
//   fixed black vertex            -> CertificateV(vertex)
//   fixed white vertex            -> CertificateV(resolved corner)
//   swapped type-0 / bridge edge  -> Contradiction
//   swapped type-1 edge           -> CertificateW, dual_count 1
//   swapped type-2 edge           -> CertificateW, dual_count 2
struct AnalysisOutcome {
    enum class Kind { CertificateV, CertificateW, Contradiction };
    Kind kind = Kind::CertificateV;
    FixedLocus locus;
    int vertex = -1;                   // CertificateV: the invariant vertex
    std::pair<int, int> edge{-1, -1};  // CertificateW: the swapped edge
    int dual_count = 0;                // CertificateW: common dual disks fixed
    std::string reason;
};

std::string_view outcome_name(AnalysisOutcome::Kind k);

// Requires f to pass check_automorphism with order <= 2 (propagates its
// errors, Error("UnsupportedOrder") beyond that).
AnalysisOutcome analyze(const LensSpace& L, const PrimitiveTree& t, const LabeledComplex& c,
                        const VertexMap& f);

} // namespace ptlens
