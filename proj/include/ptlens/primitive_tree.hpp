#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "ptlens/complex.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/lens.hpp"

namespace ptlens {

enum class TreeEdgeLabel { Type0, Type1, Type2, Bridge };

std::string_view tree_label_name(TreeEdgeLabel l);
TreeEdgeLabel tree_label_from_name(std::string_view name);

struct TreeVertex {
    int id = 0;
    VertexColor color = VertexColor::Black;
    bool frontier = false;
};

struct TreeEdge {
    int u = 0; // u < v
    int v = 0;
    TreeEdgeLabel label = TreeEdgeLabel::Type1;
};

// Where a tree vertex / edge came from in the source complex. White vertices
// keep their source triangle so the fixed-point analysis can recover the
// corners; bridge edges keep the index of the corridor they replace.
struct VertexSource {
    enum class Kind { Vertex, Triangle };
    Kind kind = Kind::Vertex;
    int vertex = -1;
    std::array<int, 3> triangle{-1, -1, -1};
};

struct EdgeSource {
    enum class Kind { Edge, Triangle, Bridge };
    Kind kind = Kind::Edge;
    int u = -1, v = -1;   // Edge: source complex edge
    int triangle = -1;    // Triangle: source triangle index
    int bridge = -1;      // Bridge: index into LabeledComplex::bridges
};

struct PrimitiveTree {
    StructureCase source_case = StructureCase::C1b;
    std::vector<TreeVertex> vertices;
    std::vector<TreeEdge> edges;
    std::map<int, VertexSource> vertex_source;
    std::map<std::pair<int, int>, EdgeSource> edge_source;

    void add_vertex(int id, VertexColor color, bool frontier);
    void add_edge(int u, int v, TreeEdgeLabel label);
    void canonicalize();

    const TreeVertex* find_vertex(int id) const;
    std::optional<TreeEdgeLabel> edge_label(int u, int v) const;
};

// Extracts the primitive tree from a validated complex:
//   C1a/C1b/C1c  the complex unchanged
//   C2a          each triangle collapsed to a white barycenter vertex joined
//                to its three (black) corners; original edges dropped
//   C2b          type-0 edges only
//   C2c          type-0 edges plus type-1 edges lying in no triangle
//   C3           primitive part unchanged, each bridge corridor replaced by
//                a single bridge-labeled edge between its endpoints
//
// Throws Error("StructureMismatch") when validate_structure(L, c) reports
// violations.
PrimitiveTree build_primitive_tree(const LensSpace& L, const LabeledComplex& c);

// Connectivity, acyclicity, label set per source case, and the bipartite /
// valency-three rules for white vertices.
Report validate_ptree(const PrimitiveTree& t);

} // namespace ptlens
