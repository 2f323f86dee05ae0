#include "ptlens/generator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ptlens/error.hpp"
#include "ptlens/rng.hpp"

namespace ptlens {
namespace {

std::string vtx(int id) { return std::to_string(id); }

std::string edge_str(int u, int v) {
    if (u > v) std::swap(u, v);
    return "{" + vtx(u) + "," + vtx(v) + "}";
}

// Incremental builder shared by the per-case constructions.
struct Builder {
    LabeledComplex c;
    int next_id = 0;
    int radius;

    explicit Builder(int radius) : radius(radius) {}

    int new_vertex(int depth, bool primitive = true) {
        VertexAttrs v;
        v.id = next_id++;
        v.primitive = primitive;
        v.frontier = depth >= radius;
        c.add_vertex(v);
        return v.id;
    }

    void mark_frontier(int id) {
        for (auto& v : c.vertices) {
            if (v.id == id) v.frontier = true;
        }
    }
};

// Expansion slot for the tree-like cases.
struct Slot {
    int id;
    int depth;
    EdgeLabel parent_label; // label of the edge toward the parent, Plain at the root
};

// C1a / C1b: a tree in which every interior vertex has valency `branching`,
// all edges carrying one fixed label.
void grow_uniform_tree(Builder& b, int root, EdgeLabel label, int branching) {
    std::deque<Slot> queue{{root, 0, EdgeLabel::Plain}};
    while (!queue.empty()) {
        Slot slot = queue.front();
        queue.pop_front();
        if (slot.depth >= b.radius) continue;
        int want = slot.depth == 0 ? branching : branching - 1;
        for (int i = 0; i < want; ++i) {
            int child = b.new_vertex(slot.depth + 1);
            b.c.add_edge(slot.id, child, label);
            queue.push_back({child, slot.depth + 1, label});
        }
    }
}

// C1c-style tree: every interior vertex meets at least `branching` type-0
// and `branching` type-1 edges. Used directly for C1c and per component for
// C3. The rng only permutes which flavor is emitted first at each vertex.
void grow_mixed_tree(Builder& b, int root, int branching, RngStream& rng) {
    std::deque<Slot> queue{{root, 0, EdgeLabel::Plain}};
    while (!queue.empty()) {
        Slot slot = queue.front();
        queue.pop_front();
        if (slot.depth >= b.radius) continue;
        int want0 = branching - (slot.parent_label == EdgeLabel::Type0 ? 1 : 0);
        int want1 = branching - (slot.parent_label == EdgeLabel::Type1 ? 1 : 0);
        EdgeLabel first = rng.chance(0.5) ? EdgeLabel::Type0 : EdgeLabel::Type1;
        for (EdgeLabel label : {first, first == EdgeLabel::Type0 ? EdgeLabel::Type1
                                                                 : EdgeLabel::Type0}) {
            int want = label == EdgeLabel::Type0 ? want0 : want1;
            for (int i = 0; i < want; ++i) {
                int child = b.new_vertex(slot.depth + 1);
                b.c.add_edge(slot.id, child, label);
                queue.push_back({child, slot.depth + 1, label});
            }
        }
    }
}

// C2a: triangles pairwise sharing at most a vertex, all edges type-1, every
// interior vertex meeting `branching` triangles.
void grow_triangle_flower(Builder& b, int root, int branching) {
    struct TriSlot {
        int id;
        int depth;
        int triangles_present;
    };
    std::deque<TriSlot> queue{{root, 0, 0}};
    while (!queue.empty()) {
        TriSlot slot = queue.front();
        queue.pop_front();
        if (slot.depth >= b.radius) continue;
        for (int i = slot.triangles_present; i < branching; ++i) {
            int a = b.new_vertex(slot.depth + 1);
            int c2 = b.new_vertex(slot.depth + 1);
            b.c.add_edge(slot.id, a, EdgeLabel::Type1);
            b.c.add_edge(slot.id, c2, EdgeLabel::Type1);
            b.c.add_edge(a, c2, EdgeLabel::Type1);
            b.c.add_triangle(slot.id, a, c2);
            queue.push_back({a, slot.depth + 1, 1});
            queue.push_back({c2, slot.depth + 1, 1});
        }
    }
}

// One C2b strip of `len` triangles over the rim path rim[0..len+1]; short rim
// edges are type-0 (each shared by two consecutive triangles), long edges
// type-1 (each in its own triangle only).
void add_strip(Builder& b, const std::vector<int>& rim) {
    int len = static_cast<int>(rim.size()) - 2;
    for (int j = 0; j + 1 < static_cast<int>(rim.size()); ++j) {
        b.c.add_edge(rim[j], rim[j + 1], EdgeLabel::Type0);
    }
    for (int i = 0; i < len; ++i) {
        b.c.add_edge(rim[i], rim[i + 2], EdgeLabel::Type1);
        b.c.add_triangle(rim[i], rim[i + 1], rim[i + 2]);
    }
}

void grow_strips(Builder& b, int root, int branching) {
    int len = 2 * b.radius; // triangles per strip, root at the middle of the rim
    for (int s = 0; s < branching; ++s) {
        std::vector<int> rim(static_cast<std::size_t>(len) + 2);
        for (int j = 0; j < len + 2; ++j) {
            rim[static_cast<std::size_t>(j)] = (j == b.radius) ? root : b.new_vertex(0);
        }
        // Only the rim ends are incomplete; everything else has its full
        // pattern inside the truncation.
        b.mark_frontier(rim.front());
        b.mark_frontier(rim.back());
        add_strip(b, rim);
    }
}

// C2c: triangles with one type-1 and two type-0 edges glued only at
// vertices, plus naked type-1 edges. Interior vertices meet `branching`
// triangles and `branching` naked type-1 edges.
void grow_sparse_triangles(Builder& b, int root, int branching, RngStream& rng) {
    struct CSlot {
        int id;
        int depth;
        int triangles_present;
        int naked_present;
    };
    std::deque<CSlot> queue{{root, 0, 0, 0}};
    while (!queue.empty()) {
        CSlot slot = queue.front();
        queue.pop_front();
        if (slot.depth >= b.radius) continue;
        for (int i = slot.triangles_present; i < branching; ++i) {
            int a = b.new_vertex(slot.depth + 1);
            int c2 = b.new_vertex(slot.depth + 1);
            // Exactly one side of the triangle is type-1; which one is a
            // free choice of the truncation.
            int pick = static_cast<int>(rng.below(3));
            EdgeLabel va = pick == 0 ? EdgeLabel::Type1 : EdgeLabel::Type0;
            EdgeLabel vc = pick == 1 ? EdgeLabel::Type1 : EdgeLabel::Type0;
            EdgeLabel ac = pick == 2 ? EdgeLabel::Type1 : EdgeLabel::Type0;
            b.c.add_edge(slot.id, a, va);
            b.c.add_edge(slot.id, c2, vc);
            b.c.add_edge(a, c2, ac);
            b.c.add_triangle(slot.id, a, c2);
            queue.push_back({a, slot.depth + 1, 1, 0});
            queue.push_back({c2, slot.depth + 1, 1, 0});
        }
        for (int i = slot.naked_present; i < branching; ++i) {
            int w = b.new_vertex(slot.depth + 1);
            b.c.add_edge(slot.id, w, EdgeLabel::Type1);
            queue.push_back({w, slot.depth + 1, 0, 1});
        }
    }
}

// Bridge corridor between primitive vertices d and e: a fan of `len`
// triangles around a fresh apex, rim running d = w0, w1, ..., w{len} = e.
// Everything strictly inside is non-primitive. Returns the canonical
// corridor vertex path used for bridge storage.
std::vector<int> add_bridge_fan(Builder& b, int d, int e, int len) {
    int apex = b.new_vertex(0, /*primitive=*/false);
    std::vector<int> rim(static_cast<std::size_t>(len) + 1);
    rim[0] = d;
    rim[static_cast<std::size_t>(len)] = e;
    for (int j = 1; j < len; ++j) rim[static_cast<std::size_t>(j)] = b.new_vertex(0, false);

    for (int j = 0; j <= len; ++j) b.c.add_edge(apex, rim[static_cast<std::size_t>(j)], EdgeLabel::BridgeInterior);
    for (int j = 0; j < len; ++j) {
        b.c.add_edge(rim[static_cast<std::size_t>(j)], rim[static_cast<std::size_t>(j + 1)],
                     EdgeLabel::BridgeInterior);
        b.c.add_triangle(apex, rim[static_cast<std::size_t>(j)], rim[static_cast<std::size_t>(j + 1)]);
    }

    std::vector<int> path;
    path.push_back(d);
    path.push_back(std::min(apex, rim[1]));
    path.push_back(std::max(apex, rim[1]));
    for (int j = 2; j <= len; ++j) path.push_back(rim[static_cast<std::size_t>(j)]);
    return path;
}

} // namespace

void require_valid(const GenConfig& cfg, StructureCase c) {
    if (cfg.radius < 1) throw Error("InvalidConfig", "radius must be >= 1");
    if (cfg.branching < 1) throw Error("InvalidConfig", "branching must be >= 1");
    if (cfg.bridge_length < 2) throw Error("InvalidConfig", "bridge length must be >= 2");
    if (c == StructureCase::C3 && cfg.branching < 2) {
        throw Error("InvalidConfig",
                    "case C3 needs branching >= 2 (it is also the component count)");
    }
}

LabeledComplex generate(const LensSpace& L, const GenConfig& cfg) {
    StructureCase sc = classify(L);
    require_valid(cfg, sc);
    RngStream rng(cfg.seed, "generate");
    Builder b(cfg.radius);

    switch (sc) {
    case StructureCase::C1a:
        grow_uniform_tree(b, b.new_vertex(0), EdgeLabel::Type2, cfg.branching);
        break;
    case StructureCase::C1b:
        grow_uniform_tree(b, b.new_vertex(0), EdgeLabel::Type1, cfg.branching);
        break;
    case StructureCase::C1c:
        grow_mixed_tree(b, b.new_vertex(0), cfg.branching, rng);
        break;
    case StructureCase::C2a:
        grow_triangle_flower(b, b.new_vertex(0), cfg.branching);
        break;
    case StructureCase::C2b:
        grow_strips(b, b.new_vertex(0), cfg.branching);
        break;
    case StructureCase::C2c:
        grow_sparse_triangles(b, b.new_vertex(0), cfg.branching, rng);
        break;
    case StructureCase::C3: {
        // branching tree components chained by isomorphic bridges, at most
        // one bridge per component pair.
        std::vector<std::pair<int, int>> component_ranges;
        for (int comp = 0; comp < cfg.branching; ++comp) {
            int first = b.next_id;
            grow_mixed_tree(b, b.new_vertex(0), cfg.branching, rng);
            component_ranges.emplace_back(first, b.next_id);
        }
        for (int i = 0; i + 1 < cfg.branching; ++i) {
            auto [d_lo, d_hi] = component_ranges[static_cast<std::size_t>(i)];
            auto [e_lo, e_hi] = component_ranges[static_cast<std::size_t>(i + 1)];
            int d = d_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(d_hi - d_lo)));
            int e = e_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(e_hi - e_lo)));
            b.c.bridges.push_back(add_bridge_fan(b, d, e, cfg.bridge_length));
        }
        break;
    }
    }

    b.c.canonicalize();
    return b.c;
}

namespace {

struct StructureChecker {
    const LensSpace& L;
    const LabeledComplex& c;
    const GenConfig* cfg;
    Report report;
    StructureCase sc;
    std::map<int, const VertexAttrs*> attrs;

    StructureChecker(const LensSpace& L, const LabeledComplex& c, const GenConfig* cfg)
        : L(L), c(c), cfg(cfg), sc(classify(L)) {
        for (const auto& v : c.vertices) attrs[v.id] = &v;
    }

    int min_count() const { return cfg != nullptr ? cfg->branching : 1; }

    bool interior(int id) const {
        auto it = attrs.find(id);
        return it != attrs.end() && !it->second->frontier;
    }

    bool primitive(int id) const {
        auto it = attrs.find(id);
        return it != attrs.end() && it->second->primitive;
    }

    void check_allowed_labels(const std::set<EdgeLabel>& allowed) {
        for (const auto& e : c.edges) {
            if (!allowed.count(e.label)) {
                report.add("edge type forbidden for case " + std::string(case_name(sc)) +
                           ": " + edge_str(e.u, e.v) + " is " +
                           std::string(edge_label_name(e.label)));
            }
        }
    }

    void check_no_triangles() {
        if (!c.triangles.empty()) {
            report.add("case " + std::string(case_name(sc)) + " admits no triangles, found " +
                       std::to_string(c.triangles.size()));
        }
    }

    void check_all_primitive() {
        for (const auto& v : c.vertices) {
            if (!v.primitive) {
                report.add("non-primitive vertex " + vtx(v.id) + " outside case C3");
            }
        }
    }

    void check_no_bridges() {
        if (!c.bridges.empty()) {
            report.add("stored bridges outside case C3");
        }
    }

    // Connectivity and acyclicity of the graph spanned by the given edges.
    // Returns the number of components among the listed vertices.
    int forest_components(const std::vector<int>& vertex_ids,
                          const std::vector<const EdgeRec*>& edge_list, bool expect_tree) {
        std::map<int, int> pos;
        for (int id : vertex_ids) pos.emplace(id, static_cast<int>(pos.size()));
        std::vector<int> parent(pos.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = static_cast<int>(pos.size());
        for (const EdgeRec* e : edge_list) {
            auto iu = pos.find(e->u);
            auto iv = pos.find(e->v);
            if (iu == pos.end() || iv == pos.end()) continue;
            int ru = find(iu->second), rv = find(iv->second);
            if (ru == rv) {
                report.add("cycle through edge " + edge_str(e->u, e->v));
            } else {
                parent[ru] = rv;
                --components;
            }
        }
        if (expect_tree && components != 1 && !pos.empty()) {
            report.add("expected one component, found " + std::to_string(components));
        }
        return components;
    }

    std::vector<int> all_vertex_ids() const {
        std::vector<int> ids;
        ids.reserve(c.vertices.size());
        for (const auto& v : c.vertices) ids.push_back(v.id);
        return ids;
    }

    std::vector<const EdgeRec*> all_edges() const {
        std::vector<const EdgeRec*> out;
        out.reserve(c.edges.size());
        for (const auto& e : c.edges) out.push_back(&e);
        return out;
    }

    void check_tree_case(EdgeLabel expected) {
        check_no_triangles();
        check_no_bridges();
        check_all_primitive();
        check_allowed_labels({expected});
        forest_components(all_vertex_ids(), all_edges(), /*expect_tree=*/true);

        ComplexIndex index(c);
        for (const auto& v : c.vertices) {
            if (v.frontier) continue;
            int valency = static_cast<int>(index.edges_at(v.id).size());
            if (valency < min_count()) {
                report.add("interior vertex " + vtx(v.id) + " has valency " +
                           std::to_string(valency) + " < " + std::to_string(min_count()));
            }
        }
    }

    void check_mixed_tree_vertices(const ComplexIndex& index) {
        for (const auto& v : c.vertices) {
            if (v.frontier || !v.primitive) continue;
            int n0 = 0, n1 = 0;
            for (int e : index.edges_at(v.id)) {
                EdgeLabel l = c.edges[static_cast<std::size_t>(e)].label;
                if (l == EdgeLabel::Type0) ++n0;
                if (l == EdgeLabel::Type1) ++n1;
            }
            if (n0 < min_count() || n1 < min_count()) {
                report.add("interior vertex " + vtx(v.id) + " meets " + std::to_string(n0) +
                           " type-0 and " + std::to_string(n1) + " type-1 edges, needs >= " +
                           std::to_string(min_count()) + " of each");
            }
        }
    }

    void check_c1c() {
        check_no_triangles();
        check_no_bridges();
        check_all_primitive();
        check_allowed_labels({EdgeLabel::Type0, EdgeLabel::Type1});
        forest_components(all_vertex_ids(), all_edges(), /*expect_tree=*/true);
        ComplexIndex index(c);
        check_mixed_tree_vertices(index);
    }

    // Triangle side pattern shared by C2b and C2c: one type-1, two type-0.
    void check_triangle_pattern(const ComplexIndex& index) {
        for (std::size_t t = 0; t < c.triangles.size(); ++t) {
            const auto& tri = c.triangles[t];
            int n0 = 0, n1 = 0;
            const std::array<std::pair<int, int>, 3> sides{
                std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]},
                std::pair{tri[1], tri[2]}};
            for (auto [u, v] : sides) {
                int e = index.edge_index(u, v);
                if (e < 0) continue; // closure failures are validate()'s findings
                EdgeLabel l = c.edges[static_cast<std::size_t>(e)].label;
                if (l == EdgeLabel::Type0) ++n0;
                if (l == EdgeLabel::Type1) ++n1;
            }
            if (n0 != 2 || n1 != 1) {
                report.add("triangle type pattern violated at [" + vtx(tri[0]) + "," +
                           vtx(tri[1]) + "," + vtx(tri[2]) + "]: " + std::to_string(n1) +
                           " type-1, " + std::to_string(n0) + " type-0");
            }
        }
    }

    void check_c2a() {
        check_no_bridges();
        check_all_primitive();
        check_allowed_labels({EdgeLabel::Type1});
        ComplexIndex index(c);
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
            std::size_t n = index.triangles_of_edge(static_cast<int>(e)).size();
            if (n != 1) {
                report.add("edge " + edge_str(c.edges[e].u, c.edges[e].v) + " lies in " +
                           std::to_string(n) + " triangles, expected exactly 1");
            }
        }
        for (const auto& v : c.vertices) {
            if (v.frontier) continue;
            int n = static_cast<int>(index.triangles_at(v.id).size());
            if (n < min_count()) {
                report.add("interior vertex " + vtx(v.id) + " meets " + std::to_string(n) +
                           " triangles < " + std::to_string(min_count()));
            }
        }
        forest_connected_only();
    }

    bool interior_edge(const EdgeRec& e) const { return interior(e.u) && interior(e.v); }

    void check_c2b() {
        check_no_bridges();
        check_all_primitive();
        check_allowed_labels({EdgeLabel::Type0, EdgeLabel::Type1});
        ComplexIndex index(c);
        check_triangle_pattern(index);
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
            const auto& rec = c.edges[e];
            if (!interior_edge(rec)) continue;
            std::size_t n = index.triangles_of_edge(static_cast<int>(e)).size();
            if (rec.label == EdgeLabel::Type0 && n != 2) {
                report.add("interior type-0 edge " + edge_str(rec.u, rec.v) + " lies in " +
                           std::to_string(n) + " triangles, expected 2");
            }
            if (rec.label == EdgeLabel::Type1 && n != 1) {
                report.add("interior type-1 edge " + edge_str(rec.u, rec.v) + " lies in " +
                           std::to_string(n) + " triangles, expected 1");
            }
        }
        forest_connected_only();
    }

    // Connectivity check alone (2-dimensional cases contain triangles, so
    // cycle-freeness of the 1-skeleton is not expected).
    void forest_connected_only() {
        std::map<int, int> pos;
        for (const auto& v : c.vertices) pos.emplace(v.id, static_cast<int>(pos.size()));
        std::vector<int> parent(pos.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = static_cast<int>(pos.size());
        for (const auto& e : c.edges) {
            auto iu = pos.find(e.u);
            auto iv = pos.find(e.v);
            if (iu == pos.end() || iv == pos.end()) continue;
            int ru = find(iu->second), rv = find(iv->second);
            if (ru != rv) {
                parent[ru] = rv;
                --components;
            }
        }
        if (components != 1 && !pos.empty()) {
            report.add("complex is disconnected: " + std::to_string(components) +
                       " components");
        }
    }

    void check_c2c() {
        check_no_bridges();
        check_all_primitive();
        check_allowed_labels({EdgeLabel::Type0, EdgeLabel::Type1});
        ComplexIndex index(c);
        check_triangle_pattern(index);
        bool t1_in_triangle = false, t1_naked = false;
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
            const auto& rec = c.edges[e];
            std::size_t n = index.triangles_of_edge(static_cast<int>(e)).size();
            if (rec.label == EdgeLabel::Type1) {
                (n == 0 ? t1_naked : t1_in_triangle) = true;
            }
            if (!interior_edge(rec)) continue;
            if (rec.label == EdgeLabel::Type0 && n != 1) {
                report.add("interior type-0 edge " + edge_str(rec.u, rec.v) + " lies in " +
                           std::to_string(n) + " triangles, expected 1");
            }
            if (rec.label == EdgeLabel::Type1 && n > 1) {
                report.add("interior type-1 edge " + edge_str(rec.u, rec.v) + " lies in " +
                           std::to_string(n) + " triangles, expected at most 1");
            }
        }
        if (!t1_in_triangle || !t1_naked) {
            report.add("case C2c needs both type-1 flavors (in a triangle and naked)");
        }
        forest_connected_only();
    }

    void check_c3() {
        check_allowed_labels({EdgeLabel::Type0, EdgeLabel::Type1, EdgeLabel::BridgeInterior});

        // Primitive part: a forest with at least two components, interior
        // vertices meeting both flavors `branching` times.
        std::vector<int> primitive_ids;
        for (const auto& v : c.vertices) {
            if (v.primitive) primitive_ids.push_back(v.id);
        }
        std::vector<const EdgeRec*> tree_edges;
        for (const auto& e : c.edges) {
            if (e.label == EdgeLabel::Type0 || e.label == EdgeLabel::Type1) {
                tree_edges.push_back(&e);
                if (!primitive(e.u) || !primitive(e.v)) {
                    report.add("tree edge " + edge_str(e.u, e.v) +
                               " touches a non-primitive vertex");
                }
            }
        }
        int components = forest_components(primitive_ids, tree_edges, /*expect_tree=*/false);
        if (components < 2) {
            report.add("case C3 needs >= 2 tree components, found " +
                       std::to_string(components));
        }
        ComplexIndex index(c);
        check_mixed_tree_vertices(index);

        // Bridges: isomorphic fans (equal length here), interiors
        // non-primitive, endpoints primitive, at most one bridge between any
        // two components, triangles confined to bridges.
        if (c.bridges.empty()) {
            report.add("case C3 complex stores no bridges");
        }
        std::map<int, int> comp_of;
        {
            std::map<int, int> pos;
            for (int id : primitive_ids) pos.emplace(id, static_cast<int>(pos.size()));
            std::vector<int> parent(pos.size());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const EdgeRec* e : tree_edges) {
                auto iu = pos.find(e->u);
                auto iv = pos.find(e->v);
                if (iu == pos.end() || iv == pos.end()) continue;
                parent[find(iu->second)] = find(iv->second);
            }
            for (auto [id, p] : pos) comp_of[id] = find(p);
        }

        std::set<int> bridge_interior;
        std::set<std::pair<int, int>> joined;
        std::size_t expected_len = c.bridges.empty() ? 0 : c.bridges.front().size();
        for (const auto& path : c.bridges) {
            if (path.size() < 4) continue; // reported by validate()
            if (path.size() != expected_len) {
                report.add("bridges are not isomorphic: path sizes differ");
            }
            if (cfg != nullptr &&
                path.size() != static_cast<std::size_t>(cfg->bridge_length) + 2) {
                report.add("bridge has " + std::to_string(path.size() - 2) +
                           " interior vertices, configured length " +
                           std::to_string(cfg->bridge_length));
            }
            int d = path.front(), e = path.back();
            if (!primitive(d) || !primitive(e)) {
                report.add("bridge endpoints must be primitive");
            }
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (primitive(path[i])) {
                    report.add("bridge interior vertex " + vtx(path[i]) + " is primitive");
                }
                bridge_interior.insert(path[i]);
            }
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (!c.has_edge(path[i], path[i + 1])) {
                    report.add("bridge path entries " + vtx(path[i]) + "," + vtx(path[i + 1]) +
                               " are not adjacent");
                }
            }
            auto cd = comp_of.find(d);
            auto ce = comp_of.find(e);
            if (cd != comp_of.end() && ce != comp_of.end()) {
                if (cd->second == ce->second) {
                    report.add("bridge joins a component to itself");
                } else {
                    auto key = std::minmax(cd->second, ce->second);
                    if (!joined.insert({key.first, key.second}).second) {
                        report.add("two bridges join the same pair of components");
                    }
                }
            }
        }
        for (const auto& v : c.vertices) {
            if (!v.primitive && !bridge_interior.count(v.id)) {
                report.add("non-primitive vertex " + vtx(v.id) + " outside every bridge");
            }
        }
        for (const auto& tri : c.triangles) {
            bool in_bridge = false;
            for (int v : tri) in_bridge = in_bridge || bridge_interior.count(v) > 0;
            if (!in_bridge) {
                report.add("triangle [" + vtx(tri[0]) + "," + vtx(tri[1]) + "," + vtx(tri[2]) +
                           "] lies outside every bridge");
            }
        }
    }

    Report run() {
        // Global rule: type-2 edges exist only for p = 2.
        if (L.p != 2) {
            for (const auto& e : c.edges) {
                if (e.label == EdgeLabel::Type2) {
                    report.add("type-2 edge " + edge_str(e.u, e.v) + " with p != 2");
                }
            }
        }
        switch (sc) {
        case StructureCase::C1a: check_tree_case(EdgeLabel::Type2); break;
        case StructureCase::C1b: check_tree_case(EdgeLabel::Type1); break;
        case StructureCase::C1c: check_c1c(); break;
        case StructureCase::C2a: check_c2a(); break;
        case StructureCase::C2b: check_c2b(); break;
        case StructureCase::C2c: check_c2c(); break;
        case StructureCase::C3: check_c3(); break;
        }
        return report;
    }
};

} // namespace

Report validate_structure(const LensSpace& L, const LabeledComplex& c) {
    Report base = validate(c);
    StructureChecker checker(L, c, nullptr);
    base.merge(checker.run());
    return base;
}

Report validate_structure(const LensSpace& L, const LabeledComplex& c, const GenConfig& cfg) {
    Report base = validate(c);
    StructureChecker checker(L, c, &cfg);
    base.merge(checker.run());
    return base;
}

StructureCase infer_case(const LabeledComplex& c) {
    bool has_bridge_marks = !c.bridges.empty();
    std::set<EdgeLabel> labels;
    for (const auto& e : c.edges) {
        labels.insert(e.label);
        has_bridge_marks = has_bridge_marks || e.label == EdgeLabel::BridgeInterior;
    }
    for (const auto& v : c.vertices) has_bridge_marks = has_bridge_marks || !v.primitive;
    if (has_bridge_marks) return StructureCase::C3;

    if (!c.triangles.empty()) {
        if (labels == std::set<EdgeLabel>{EdgeLabel::Type1}) return StructureCase::C2a;
        ComplexIndex index(c);
        for (std::size_t e = 0; e < c.edges.size(); ++e) {
            if (c.edges[e].label == EdgeLabel::Type0 &&
                index.triangles_of_edge(static_cast<int>(e)).size() >= 2) {
                return StructureCase::C2b;
            }
        }
        if (labels.count(EdgeLabel::Type0)) return StructureCase::C2c;
        throw Error("AmbiguousCase", "triangles without the expected edge labels");
    }

    if (!labels.empty() && labels == std::set<EdgeLabel>{EdgeLabel::Type2}) {
        return StructureCase::C1a;
    }
    if (!labels.empty() && labels == std::set<EdgeLabel>{EdgeLabel::Type1}) {
        return StructureCase::C1b;
    }
    if (labels == std::set<EdgeLabel>{EdgeLabel::Type0, EdgeLabel::Type1}) {
        return StructureCase::C1c;
    }
    throw Error("AmbiguousCase", "edge labels do not pin down a structure case");
}

LensSpace representative(StructureCase c) {
    switch (c) {
    case StructureCase::C1a: return LensSpace{2, 1};
    case StructureCase::C1b: return LensSpace{4, 1};
    case StructureCase::C1c: return LensSpace{8, 3};
    case StructureCase::C2a: return LensSpace{3, 1};
    case StructureCase::C2b: return LensSpace{5, 2};
    case StructureCase::C2c: return LensSpace{7, 2};
    case StructureCase::C3: return LensSpace{13, 5};
    }
    return LensSpace{2, 1};
}

} // namespace ptlens
