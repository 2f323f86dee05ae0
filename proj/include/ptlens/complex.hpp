#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ptlens/report.hpp"

namespace ptlens {

enum class EdgeLabel { Type0, Type1, Type2, BridgeInterior, Plain };
enum class VertexColor { None, Black, White };

std::string_view edge_label_name(EdgeLabel l);
EdgeLabel edge_label_from_name(std::string_view name);
std::string_view color_name(VertexColor c);
VertexColor color_from_name(std::string_view name);

struct VertexAttrs {
    int id = 0;
    bool primitive = true;
    // Truncation boundary marker: structure around frontier vertices is
    // incomplete, so per-vertex and per-edge pattern checks skip them.
    bool frontier = false;
    VertexColor color = VertexColor::None;
};

struct EdgeRec {
    int u = 0; // u < v
    int v = 0;
    EdgeLabel label = EdgeLabel::Plain;
};

// A finite 2-dimensional simplicial complex with flagged vertices and labeled
// edges. Storage is canonical (vertices by id, edges and triangles
// lexicographically sorted), so equal complexes serialize identically.
struct LabeledComplex {
    std::vector<VertexAttrs> vertices;
    std::vector<EdgeRec> edges;
    std::vector<std::array<int, 3>> triangles; // each triple sorted ascending
    std::vector<std::vector<int>> bridges;     // corridor vertex paths, endpoints first/last

    void add_vertex(VertexAttrs v);
    void add_edge(int u, int v, EdgeLabel label);
    void add_triangle(int a, int b, int c);

    // Sorts the containers into canonical order. Builders call this once
    // after construction; parsers call it after loading.
    void canonicalize();

    const VertexAttrs* find_vertex(int id) const;
    std::optional<EdgeLabel> edge_label(int u, int v) const;
    bool has_edge(int u, int v) const;
};

// Read-only adjacency index over an immutable complex.
class ComplexIndex {
public:
    explicit ComplexIndex(const LabeledComplex& c);

    const std::vector<int>& edges_at(int vertex) const;      // edge indices
    const std::vector<int>& triangles_at(int vertex) const;  // triangle indices
    const std::vector<int>& triangles_of_edge(int edge) const;
    int edge_index(int u, int v) const; // -1 if absent

    const LabeledComplex& complex() const { return *c_; }

private:
    const LabeledComplex* c_;
    std::map<int, std::vector<int>> vertex_edges_;
    std::map<int, std::vector<int>> vertex_triangles_;
    std::vector<std::vector<int>> edge_triangles_;
    std::map<std::pair<int, int>, int> edge_lookup_;
    std::vector<int> empty_;
};

// Closure/label validation: every triangle edge present, every edge endpoint
// present, ids unique, labels and colors well-formed. Structure rules per
// lens-space case live in validate_structure().
Report validate(const LabeledComplex& c);

// Dual graph spanned by the barycenters of edges and triangles: one node per
// edge, one per triangle, and a link for every (triangle, incident edge)
// pair. Node ids: edges first (by edge index), then triangles.
struct DualTree {
    int edge_nodes = 0;
    int triangle_nodes = 0;
    std::vector<std::pair<int, int>> links; // (edge node, triangle node)

    int node_count() const { return edge_nodes + triangle_nodes; }
    int node_of_edge(int edge_index) const { return edge_index; }
    int node_of_triangle(int tri_index) const { return edge_nodes + tri_index; }
    bool is_triangle_node(int node) const { return node >= edge_nodes; }

    // Components and acyclicity of the link graph.
    int component_count() const;
    bool is_forest() const;
    bool is_tree() const { return is_forest() && component_count() == 1; }
};

DualTree dual_tree(const LabeledComplex& c);

// An ordered run of triangles, consecutive ones sharing exactly one edge,
// dual to the shortest dual-tree path between the links of two non-adjacent
// vertices.
struct Corridor {
    std::vector<int> triangles; // triangle indices into the complex
    int d = -1;                 // endpoint vertices
    int e = -1;
};

// Throws Error with code:
//   "AdjacentEndpoints" if d == e or {d, e} is an edge
//   "NoPath"            if no dual path joins the links (including a vertex
//                       lying in no triangle)
//   "NotUnique"         if the shortest dual path is not unique
Corridor corridor(const LabeledComplex& c, int d, int e);
Corridor corridor(const ComplexIndex& index, int d, int e);

// Canonical vertex listing of a corridor from the d-end: d, then the shared
// edge of the first two triangles (sorted), then the vertex each later
// triangle introduces. Single-triangle corridors list the triangle with d
// first. Matches the storage format of LabeledComplex::bridges.
std::vector<int> corridor_vertex_path(const LabeledComplex& c, const Corridor& cor);

// True iff no interior vertex of the corridor is flagged primitive.
bool is_bridge(const LabeledComplex& c, const Corridor& cor);

} // namespace ptlens
