#include "ptlens/primitive_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ptlens/error.hpp"

namespace ptlens {

std::string_view tree_label_name(TreeEdgeLabel l) {
    switch (l) {
    case TreeEdgeLabel::Type0: return "type0";
    case TreeEdgeLabel::Type1: return "type1";
    case TreeEdgeLabel::Type2: return "type2";
    case TreeEdgeLabel::Bridge: return "bridge";
    }
    return "?";
}

TreeEdgeLabel tree_label_from_name(std::string_view name) {
    for (TreeEdgeLabel l : {TreeEdgeLabel::Type0, TreeEdgeLabel::Type1, TreeEdgeLabel::Type2,
                            TreeEdgeLabel::Bridge}) {
        if (tree_label_name(l) == name) return l;
    }
    throw Error("UnknownLabel", "unknown tree edge label '" + std::string(name) + "'");
}

void PrimitiveTree::add_vertex(int id, VertexColor color, bool frontier) {
    vertices.push_back(TreeVertex{id, color, frontier});
}

void PrimitiveTree::add_edge(int u, int v, TreeEdgeLabel label) {
    if (u > v) std::swap(u, v);
    edges.push_back(TreeEdge{u, v, label});
}

void PrimitiveTree::canonicalize() {
    std::sort(vertices.begin(), vertices.end(),
              [](const TreeVertex& a, const TreeVertex& b) { return a.id < b.id; });
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
}

const TreeVertex* PrimitiveTree::find_vertex(int id) const {
    for (const auto& v : vertices) {
        if (v.id == id) return &v;
    }
    return nullptr;
}

std::optional<TreeEdgeLabel> PrimitiveTree::edge_label(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges) {
        if (e.u == u && e.v == v) return e.label;
    }
    return std::nullopt;
}

namespace {

TreeEdgeLabel lift_label(EdgeLabel l) {
    switch (l) {
    case EdgeLabel::Type0: return TreeEdgeLabel::Type0;
    case EdgeLabel::Type1: return TreeEdgeLabel::Type1;
    case EdgeLabel::Type2: return TreeEdgeLabel::Type2;
    default:
        throw Error("StructureMismatch",
                    "edge label " + std::string(edge_label_name(l)) +
                        " cannot appear in a primitive tree");
    }
}

void copy_vertex(PrimitiveTree& t, const VertexAttrs& v) {
    t.add_vertex(v.id, VertexColor::Black, v.frontier);
    VertexSource src;
    src.kind = VertexSource::Kind::Vertex;
    src.vertex = v.id;
    t.vertex_source[v.id] = src;
}

void copy_edge(PrimitiveTree& t, const EdgeRec& e) {
    t.add_edge(e.u, e.v, lift_label(e.label));
    EdgeSource src;
    src.kind = EdgeSource::Kind::Edge;
    src.u = std::min(e.u, e.v);
    src.v = std::max(e.u, e.v);
    t.edge_source[{src.u, src.v}] = src;
}

} // namespace

PrimitiveTree build_primitive_tree(const LensSpace& L, const LabeledComplex& c) {
    Report structure = validate_structure(L, c);
    if (!structure.ok()) {
        std::string msg = "complex does not match the structure of " +
                          std::string(case_name(classify(L)));
        for (const auto& v : structure.violations) msg += "; " + v;
        throw Error("StructureMismatch", msg);
    }

    PrimitiveTree t;
    t.source_case = classify(L);

    switch (t.source_case) {
    case StructureCase::C1a:
    case StructureCase::C1b:
    case StructureCase::C1c:
        for (const auto& v : c.vertices) copy_vertex(t, v);
        for (const auto& e : c.edges) copy_edge(t, e);
        break;

    case StructureCase::C2a: {
        int next_white = 0;
        for (const auto& v : c.vertices) {
            copy_vertex(t, v);
            next_white = std::max(next_white, v.id + 1);
        }
        for (std::size_t i = 0; i < c.triangles.size(); ++i) {
            const auto& tri = c.triangles[i];
            int w = next_white + static_cast<int>(i);
            t.add_vertex(w, VertexColor::White, false);
            VertexSource src;
            src.kind = VertexSource::Kind::Triangle;
            src.triangle = tri;
            t.vertex_source[w] = src;
            for (int corner : tri) {
                t.add_edge(w, corner, TreeEdgeLabel::Type1);
                EdgeSource esrc;
                esrc.kind = EdgeSource::Kind::Triangle;
                esrc.triangle = static_cast<int>(i);
                t.edge_source[{std::min(w, corner), std::max(w, corner)}] = esrc;
            }
        }
        break;
    }

    case StructureCase::C2b:
        for (const auto& v : c.vertices) copy_vertex(t, v);
        for (const auto& e : c.edges) {
            if (e.label == EdgeLabel::Type0) copy_edge(t, e);
        }
        break;

    case StructureCase::C2c: {
        ComplexIndex index(c);
        for (const auto& v : c.vertices) copy_vertex(t, v);
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            const auto& e = c.edges[i];
            if (e.label == EdgeLabel::Type0) {
                copy_edge(t, e);
            } else if (e.label == EdgeLabel::Type1 &&
                       index.triangles_of_edge(static_cast<int>(i)).empty()) {
                copy_edge(t, e);
            }
        }
        break;
    }

    case StructureCase::C3: {
        for (const auto& v : c.vertices) {
            if (v.primitive) copy_vertex(t, v);
        }
        for (const auto& e : c.edges) {
            if (e.label == EdgeLabel::Type0 || e.label == EdgeLabel::Type1) copy_edge(t, e);
        }
        for (std::size_t i = 0; i < c.bridges.size(); ++i) {
            const auto& path = c.bridges[i];
            int d = path.front(), e = path.back();
            t.add_edge(d, e, TreeEdgeLabel::Bridge);
            EdgeSource src;
            src.kind = EdgeSource::Kind::Bridge;
            src.bridge = static_cast<int>(i);
            t.edge_source[{std::min(d, e), std::max(d, e)}] = src;
        }
        break;
    }
    }

    t.canonicalize();
    return t;
}

Report validate_ptree(const PrimitiveTree& t) {
    Report report;

    std::set<int> ids;
    for (const auto& v : t.vertices) {
        if (!ids.insert(v.id).second) {
            report.add("duplicate vertex id " + std::to_string(v.id));
        }
        if (v.color == VertexColor::White && t.source_case != StructureCase::C2a) {
            report.add("white vertex " + std::to_string(v.id) + " outside case C2a");
        }
        if (v.color == VertexColor::None) {
            report.add("uncolored vertex " + std::to_string(v.id));
        }
    }

    std::set<TreeEdgeLabel> allowed;
    switch (t.source_case) {
    case StructureCase::C1a: allowed = {TreeEdgeLabel::Type2}; break;
    case StructureCase::C1b: allowed = {TreeEdgeLabel::Type1}; break;
    case StructureCase::C1c: allowed = {TreeEdgeLabel::Type0, TreeEdgeLabel::Type1}; break;
    case StructureCase::C2a: allowed = {TreeEdgeLabel::Type1}; break;
    case StructureCase::C2b: allowed = {TreeEdgeLabel::Type0}; break;
    case StructureCase::C2c: allowed = {TreeEdgeLabel::Type0, TreeEdgeLabel::Type1}; break;
    case StructureCase::C3:
        allowed = {TreeEdgeLabel::Type0, TreeEdgeLabel::Type1, TreeEdgeLabel::Bridge};
        break;
    }

    std::map<int, int> position;
    for (const auto& v : t.vertices) position.emplace(v.id, static_cast<int>(position.size()));
    std::vector<int> parent(position.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<int, int> valency;
    int components = static_cast<int>(position.size());
    for (const auto& e : t.edges) {
        if (!allowed.count(e.label)) {
            report.add("edge label " + std::string(tree_label_name(e.label)) +
                       " inconsistent with case " + std::string(case_name(t.source_case)));
        }
        auto iu = position.find(e.u);
        auto iv = position.find(e.v);
        if (iu == position.end() || iv == position.end()) {
            report.add("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} references a missing vertex");
            continue;
        }
        ++valency[e.u];
        ++valency[e.v];

        const TreeVertex* a = t.find_vertex(e.u);
        const TreeVertex* b = t.find_vertex(e.v);
        if (t.source_case == StructureCase::C2a) {
            if (a->color == b->color) {
                report.add("bipartite rule violated on edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "}");
            }
        }

        int ru = find(iu->second), rv = find(iv->second);
        if (ru == rv) {
            report.add("acyclicity violated through edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
        } else {
            parent[ru] = rv;
            --components;
        }
    }
    if (components != 1 && !t.vertices.empty()) {
        report.add("tree is disconnected: " + std::to_string(components) + " components");
    }

    for (const auto& v : t.vertices) {
        if (v.color == VertexColor::White && !v.frontier && valency[v.id] != 3) {
            report.add("white vertex " + std::to_string(v.id) + " has valency " +
                       std::to_string(valency[v.id]) + ", expected 3");
        }
    }
    return report;
}

} // namespace ptlens
