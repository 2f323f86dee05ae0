#pragma once

#include <map>
#include <vector>

#include "ptlens/primitive_tree.hpp"

namespace ptlens {

// A simplicial map given by where each vertex goes.
using VertexMap = std::map<int, int>;

// Verifies that f is a color- and label-preserving automorphism of the tree
// and returns its order (lcm of the cycle lengths).
//
// Throws Error with code:
//   "NotBijective"            f is not a total bijection on the vertices
//   "NotAdjacencyPreserving"  some edge maps to a non-edge
//   "LabelViolation"          an edge label or vertex color changes
//   "OrderOverflow"           the order exceeds the 64-bit range
long long check_automorphism(const PrimitiveTree& t, const VertexMap& f);

// A fixed vertex or an edge whose two ends are exchanged.
struct FixedLocus {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int vertex = -1; // Kind::Vertex
    int u = -1;      // Kind::Edge, u < v
    int v = -1;

    friend bool operator==(const FixedLocus&, const FixedLocus&) = default;
};

// Fixed locus of an involution: walk the unique path from a start vertex to
// its image and take the midpoint (the middle vertex for even length, the
// middle edge for odd). The involution reverses the path, so the midpoint is
// fixed or swapped. Deterministic: starts from the lowest vertex id.
//
// Requires check_automorphism(t, f) <= 2; throws Error("UnsupportedOrder")
// otherwise and Error("NotATree") if the walk fails.
FixedLocus fixed_point(const PrimitiveTree& t, const VertexMap& f);

// Same construction from a chosen start vertex. The resulting locus may
// differ, but its kind never does; tests exercise exactly that.
FixedLocus fixed_point_from(const PrimitiveTree& t, const VertexMap& f, int start);

// Every fixed vertex and every swapped edge, by exhaustive scan. The test
// oracle for fixed_point.
std::vector<FixedLocus> brute_force_fixed(const PrimitiveTree& t, const VertexMap& f);

} // namespace ptlens
