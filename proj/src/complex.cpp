#include "ptlens/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "ptlens/error.hpp"

namespace ptlens {

std::string_view edge_label_name(EdgeLabel l) {
    switch (l) {
    case EdgeLabel::Type0: return "type0";
    case EdgeLabel::Type1: return "type1";
    case EdgeLabel::Type2: return "type2";
    case EdgeLabel::BridgeInterior: return "bridgeInterior";
    case EdgeLabel::Plain: return "plain";
    }
    return "?";
}

EdgeLabel edge_label_from_name(std::string_view name) {
    for (EdgeLabel l : {EdgeLabel::Type0, EdgeLabel::Type1, EdgeLabel::Type2,
                        EdgeLabel::BridgeInterior, EdgeLabel::Plain}) {
        if (edge_label_name(l) == name) return l;
    }
    throw Error("UnknownLabel", "unknown edge label '" + std::string(name) + "'");
}

std::string_view color_name(VertexColor c) {
    switch (c) {
    case VertexColor::None: return "none";
    case VertexColor::Black: return "black";
    case VertexColor::White: return "white";
    }
    return "?";
}

VertexColor color_from_name(std::string_view name) {
    for (VertexColor c : {VertexColor::None, VertexColor::Black, VertexColor::White}) {
        if (color_name(c) == name) return c;
    }
    throw Error("UnknownColor", "unknown vertex color '" + std::string(name) + "'");
}

void LabeledComplex::add_vertex(VertexAttrs v) { vertices.push_back(v); }

void LabeledComplex::add_edge(int u, int v, EdgeLabel label) {
    if (u > v) std::swap(u, v);
    edges.push_back(EdgeRec{u, v, label});
}

void LabeledComplex::add_triangle(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    triangles.push_back(t);
}

void LabeledComplex::canonicalize() {
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexAttrs& a, const VertexAttrs& b) { return a.id < b.id; });
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const EdgeRec& a, const EdgeRec& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (auto& t : triangles) std::sort(t.begin(), t.end());
    std::sort(triangles.begin(), triangles.end());
    std::sort(bridges.begin(), bridges.end());
}

const VertexAttrs* LabeledComplex::find_vertex(int id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                               [](const VertexAttrs& a, int key) { return a.id < key; });
    if (it != vertices.end() && it->id == id) return &*it;
    // Fall back to a linear scan in case the complex was not canonicalized.
    for (const auto& v : vertices) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

std::optional<EdgeLabel> LabeledComplex::edge_label(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges) {
        if (e.u == u && e.v == v) return e.label;
    }
    return std::nullopt;
}

bool LabeledComplex::has_edge(int u, int v) const { return edge_label(u, v).has_value(); }

ComplexIndex::ComplexIndex(const LabeledComplex& c) : c_(&c) {
    edge_triangles_.resize(c.edges.size());
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const auto& e = c.edges[i];
        edge_lookup_[{e.u, e.v}] = static_cast<int>(i);
        vertex_edges_[e.u].push_back(static_cast<int>(i));
        vertex_edges_[e.v].push_back(static_cast<int>(i));
    }
    for (std::size_t t = 0; t < c.triangles.size(); ++t) {
        const auto& tri = c.triangles[t];
        for (int v : tri) vertex_triangles_[v].push_back(static_cast<int>(t));
        const std::array<std::pair<int, int>, 3> sides{
            std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]}, std::pair{tri[1], tri[2]}};
        for (auto [u, v] : sides) {
            auto it = edge_lookup_.find({u, v});
            if (it != edge_lookup_.end()) {
                edge_triangles_[it->second].push_back(static_cast<int>(t));
            }
        }
    }
}

const std::vector<int>& ComplexIndex::edges_at(int vertex) const {
    auto it = vertex_edges_.find(vertex);
    return it == vertex_edges_.end() ? empty_ : it->second;
}

const std::vector<int>& ComplexIndex::triangles_at(int vertex) const {
    auto it = vertex_triangles_.find(vertex);
    return it == vertex_triangles_.end() ? empty_ : it->second;
}

const std::vector<int>& ComplexIndex::triangles_of_edge(int edge) const {
    return edge_triangles_.at(static_cast<std::size_t>(edge));
}

int ComplexIndex::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_lookup_.find({u, v});
    return it == edge_lookup_.end() ? -1 : it->second;
}

Report validate(const LabeledComplex& c) {
    Report report;

    std::set<int> ids;
    for (const auto& v : c.vertices) {
        if (!ids.insert(v.id).second) {
            report.add("duplicate vertex id " + std::to_string(v.id));
        }
    }

    std::set<std::pair<int, int>> seen_edges;
    for (const auto& e : c.edges) {
        if (e.u == e.v) {
            report.add("degenerate edge at vertex " + std::to_string(e.u));
            continue;
        }
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        if (!seen_edges.insert({u, v}).second) {
            report.add("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        for (int w : {u, v}) {
            if (!ids.count(w)) {
                report.add("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} references missing vertex " + std::to_string(w));
            }
        }
    }

    std::set<std::array<int, 3>> seen_triangles;
    for (auto t : c.triangles) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) {
            report.add("degenerate triangle [" + std::to_string(t[0]) + "," +
                       std::to_string(t[1]) + "," + std::to_string(t[2]) + "]");
            continue;
        }
        if (!seen_triangles.insert(t).second) {
            report.add("duplicate triangle [" + std::to_string(t[0]) + "," +
                       std::to_string(t[1]) + "," + std::to_string(t[2]) + "]");
        }
        for (int w : t) {
            if (!ids.count(w)) {
                report.add("triangle references missing vertex " + std::to_string(w));
            }
        }
        const std::array<std::pair<int, int>, 3> sides{
            std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}};
        for (auto [u, v] : sides) {
            if (!seen_edges.count({u, v})) {
                report.add("triangle [" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                           "," + std::to_string(t[2]) + "] is missing edge {" +
                           std::to_string(u) + "," + std::to_string(v) + "}");
            }
        }
    }

    for (const auto& path : c.bridges) {
        if (path.size() < 4) {
            report.add("bridge path with fewer than 4 vertices");
            continue;
        }
        for (int w : path) {
            if (!ids.count(w)) {
                report.add("bridge path references missing vertex " + std::to_string(w));
            }
        }
    }
    return report;
}

namespace {

// Union-find over dual nodes, used for the forest/component checks.
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Returns false if x and y were already joined.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

} // namespace

int DualTree::component_count() const {
    UnionFind uf(node_count());
    int components = node_count();
    for (auto [a, b] : links) {
        if (uf.unite(a, b)) --components;
    }
    return components;
}

bool DualTree::is_forest() const {
    UnionFind uf(node_count());
    for (auto [a, b] : links) {
        if (!uf.unite(a, b)) return false;
    }
    return true;
}

DualTree dual_tree(const LabeledComplex& c) {
    DualTree d;
    d.edge_nodes = static_cast<int>(c.edges.size());
    d.triangle_nodes = static_cast<int>(c.triangles.size());

    ComplexIndex index(c);
    for (std::size_t t = 0; t < c.triangles.size(); ++t) {
        const auto& tri = c.triangles[t];
        const std::array<std::pair<int, int>, 3> sides{
            std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]}, std::pair{tri[1], tri[2]}};
        for (auto [u, v] : sides) {
            int e = index.edge_index(u, v);
            if (e >= 0) {
                d.links.emplace_back(d.node_of_edge(e), d.node_of_triangle(static_cast<int>(t)));
            }
        }
    }
    std::sort(d.links.begin(), d.links.end());
    return d;
}

Corridor corridor(const LabeledComplex& c, int d, int e) {
    ComplexIndex index(c);
    return corridor(index, d, e);
}

Corridor corridor(const ComplexIndex& index, int d, int e) {
    const LabeledComplex& c = index.complex();
    if (d == e || c.has_edge(d, e)) {
        throw Error("AdjacentEndpoints", "corridor endpoints " + std::to_string(d) + ", " +
                                             std::to_string(e) + " are equal or adjacent");
    }

    const auto& source_tris = index.triangles_at(d);
    const auto& target_tris = index.triangles_at(e);
    if (source_tris.empty() || target_tris.empty()) {
        throw Error("NoPath", "an endpoint lies in no triangle");
    }

    // Dual graph adjacency: triangle nodes <-> edge nodes. BFS from the
    // triangles containing d to the triangles containing e, tracking the
    // number of shortest routes so ties are detected.
    DualTree dual = dual_tree(c);
    int n = dual.node_count();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : dual.links) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<int> dist(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<int> ways(n, 0);
    std::deque<int> queue;
    for (int t : source_tris) {
        int node = dual.node_of_triangle(t);
        dist[node] = 0;
        ways[node] = 1;
        queue.push_back(node);
    }

    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (int next : adj[node]) {
            if (dist[next] < 0) {
                dist[next] = dist[node] + 1;
                parent[next] = node;
                ways[next] = ways[node];
                queue.push_back(next);
            } else if (dist[next] == dist[node] + 1) {
                ways[next] = std::min(2, ways[next] + ways[node]);
            }
        }
    }

    int best = -1;
    int hits = 0;
    for (int t : target_tris) {
        int node = dual.node_of_triangle(t);
        if (dist[node] < 0) continue;
        if (best < 0 || dist[node] < dist[best]) {
            best = node;
            hits = 1;
        } else if (dist[node] == dist[best]) {
            ++hits;
        }
    }
    if (best < 0) throw Error("NoPath", "the dual graph does not join the two links");
    if (hits > 1 || ways[best] > 1) {
        throw Error("NotUnique", "multiple shortest dual paths join the two links");
    }

    Corridor result;
    result.d = d;
    result.e = e;
    for (int node = best; node >= 0; node = parent[node]) {
        if (dual.is_triangle_node(node)) {
            result.triangles.push_back(node - dual.edge_nodes);
        }
    }
    std::reverse(result.triangles.begin(), result.triangles.end());

    // Endpoint sanity: d in the first triangle only, e in the last only,
    // consecutive triangles sharing exactly one edge. The BFS guarantees
    // these on forests; reject junk inputs loudly otherwise.
    const auto contains = [&](int tri, int v) {
        const auto& t = c.triangles[static_cast<std::size_t>(tri)];
        return t[0] == v || t[1] == v || t[2] == v;
    };
    if (!contains(result.triangles.front(), d) || !contains(result.triangles.back(), e)) {
        throw Error("NoPath", "dual path does not connect the endpoint links");
    }
    for (std::size_t i = 0; i + 1 < result.triangles.size(); ++i) {
        const auto& a = c.triangles[static_cast<std::size_t>(result.triangles[i])];
        const auto& b = c.triangles[static_cast<std::size_t>(result.triangles[i + 1])];
        std::vector<int> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        if (shared.size() != 2) {
            throw Error("NotUnique", "consecutive corridor triangles do not share one edge");
        }
    }
    return result;
}

std::vector<int> corridor_vertex_path(const LabeledComplex& c, const Corridor& cor) {
    std::vector<int> path;
    if (cor.triangles.empty()) return path;

    const auto& first = c.triangles[static_cast<std::size_t>(cor.triangles.front())];
    path.push_back(cor.d);
    if (cor.triangles.size() == 1) {
        for (int v : first) {
            if (v != cor.d) path.push_back(v);
        }
        return path;
    }

    const auto& second = c.triangles[static_cast<std::size_t>(cor.triangles[1])];
    std::vector<int> shared;
    std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                          std::back_inserter(shared));
    path.insert(path.end(), shared.begin(), shared.end());

    for (std::size_t i = 1; i < cor.triangles.size(); ++i) {
        const auto& prev = c.triangles[static_cast<std::size_t>(cor.triangles[i - 1])];
        const auto& cur = c.triangles[static_cast<std::size_t>(cor.triangles[i])];
        for (int v : cur) {
            if (std::find(prev.begin(), prev.end(), v) == prev.end()) path.push_back(v);
        }
    }
    return path;
}

bool is_bridge(const LabeledComplex& c, const Corridor& cor) {
    for (int t : cor.triangles) {
        for (int v : c.triangles[static_cast<std::size_t>(t)]) {
            if (v == cor.d || v == cor.e) continue;
            const VertexAttrs* attrs = c.find_vertex(v);
            if (attrs != nullptr && attrs->primitive) return false;
        }
    }
    return true;
}

} // namespace ptlens
