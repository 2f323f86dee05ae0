#include <doctest.h>

#include <numeric>
#include <set>

#include "ptlens/error.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/primitive_tree.hpp"

using namespace ptlens;

TEST_CASE("single C2a triangle collapses to a star") {
    LensSpace L = normalize(3, 1);
    LabeledComplex c = generate(L, GenConfig{1, 1, 2, 0});
    PrimitiveTree t = build_primitive_tree(L, c);

    int whites = 0, blacks = 0;
    for (const auto& v : t.vertices) {
        (v.color == VertexColor::White ? whites : blacks) += 1;
    }
    CHECK(whites == 1);
    CHECK(blacks == 3);
    CHECK(t.edges.size() == 3);
    for (const auto& e : t.edges) CHECK(e.label == TreeEdgeLabel::Type1);
    CHECK(validate_ptree(t).ok());

    // The white vertex remembers its triangle.
    for (const auto& v : t.vertices) {
        if (v.color != VertexColor::White) continue;
        auto src = t.vertex_source.at(v.id);
        CHECK(src.kind == VertexSource::Kind::Triangle);
        CHECK(src.triangle == std::array<int, 3>{0, 1, 2});
    }
}

TEST_CASE("tree cases pass through unchanged") {
    LensSpace L = normalize(4, 1);
    LabeledComplex c = generate(L, GenConfig{2, 3, 2, 0});
    PrimitiveTree t = build_primitive_tree(L, c);
    CHECK(t.vertices.size() == c.vertices.size());
    REQUIRE(t.edges.size() == c.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        CHECK(t.edges[i].u == c.edges[i].u);
        CHECK(t.edges[i].v == c.edges[i].v);
        CHECK(t.edges[i].label == TreeEdgeLabel::Type1);
    }
    CHECK(validate_ptree(t).ok());
}

TEST_CASE("C2b keeps exactly the type-0 edges") {
    LensSpace L = normalize(5, 2);
    LabeledComplex c = generate(L, GenConfig{2, 2, 2, 0});
    PrimitiveTree t = build_primitive_tree(L, c);

    std::size_t type0 = 0;
    for (const auto& e : c.edges) type0 += e.label == EdgeLabel::Type0 ? 1 : 0;
    CHECK(t.edges.size() == type0);
    CHECK(t.vertices.size() == c.vertices.size());
    CHECK(validate_ptree(t).ok());
}

TEST_CASE("C2c keeps type-0 edges and naked type-1 edges") {
    LensSpace L = normalize(7, 2);
    LabeledComplex c = generate(L, GenConfig{2, 2, 2, 3});
    PrimitiveTree t = build_primitive_tree(L, c);
    CHECK(t.vertices.size() == c.vertices.size());
    CHECK(validate_ptree(t).ok());

    ComplexIndex index(c);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (c.edges[i].label == EdgeLabel::Type0 ||
            (c.edges[i].label == EdgeLabel::Type1 &&
             index.triangles_of_edge(static_cast<int>(i)).empty())) {
            ++expected;
        }
    }
    CHECK(t.edges.size() == expected);
}

TEST_CASE("C3 replaces bridges by single edges between their endpoints") {
    LensSpace L = normalize(13, 5);
    GenConfig cfg{2, 3, 3, 5};
    LabeledComplex c = generate(L, cfg);
    PrimitiveTree t = build_primitive_tree(L, c);
    CHECK(validate_ptree(t).ok());

    // Union-find oracle: components of the primitive part before bridges.
    std::map<int, int> parent;
    for (const auto& v : c.vertices) {
        if (v.primitive) parent[v.id] = v.id;
    }
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : c.edges) {
        if (e.label == EdgeLabel::BridgeInterior) continue;
        parent[find(e.u)] = find(e.v);
    }
    std::set<int> components;
    for (const auto& [id, _] : parent) components.insert(find(id));
    CHECK(components.size() == 3);

    std::size_t bridge_edges = 0;
    for (const auto& e : t.edges) bridge_edges += e.label == TreeEdgeLabel::Bridge ? 1 : 0;
    CHECK(bridge_edges == c.bridges.size());
    CHECK(bridge_edges == components.size() - 1); // chained components

    // No bridge-interior vertex survives.
    for (const auto& v : t.vertices) {
        const VertexAttrs* attrs = c.find_vertex(v.id);
        REQUIRE(attrs != nullptr);
        CHECK(attrs->primitive);
    }
}

TEST_CASE("build rejects a complex that fails structure validation") {
    LensSpace L = normalize(4, 1);
    LabeledComplex c = generate(L, GenConfig{2, 2, 2, 0});
    c.edges.front().label = EdgeLabel::Type0;
    try {
        build_primitive_tree(L, c);
        FAIL("expected StructureMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == "StructureMismatch");
    }
}

TEST_CASE("ptree validator flags bipartite violations") {
    PrimitiveTree t;
    t.source_case = StructureCase::C2a;
    t.add_vertex(0, VertexColor::White, false);
    t.add_vertex(1, VertexColor::White, false);
    t.add_vertex(2, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type1); // white-white
    t.add_edge(1, 2, TreeEdgeLabel::Type1);
    t.canonicalize();
    Report r = validate_ptree(t);
    bool bipartite = false;
    for (const auto& v : r.violations) {
        bipartite = bipartite || v.find("bipartite") != std::string::npos;
    }
    CHECK(bipartite);
}

TEST_CASE("ptree validator flags cycles and disconnection") {
    PrimitiveTree t;
    t.source_case = StructureCase::C1b;
    for (int i = 0; i < 3; ++i) t.add_vertex(i, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type1);
    t.add_edge(1, 2, TreeEdgeLabel::Type1);
    t.add_edge(0, 2, TreeEdgeLabel::Type1);
    t.canonicalize();
    Report r = validate_ptree(t);
    bool cyclic = false;
    for (const auto& v : r.violations) {
        cyclic = cyclic || v.find("acyclicity") != std::string::npos;
    }
    CHECK(cyclic);

    PrimitiveTree split;
    split.source_case = StructureCase::C1b;
    split.add_vertex(0, VertexColor::Black, false);
    split.add_vertex(1, VertexColor::Black, false);
    Report r2 = validate_ptree(split);
    bool disconnected = false;
    for (const auto& v : r2.violations) {
        disconnected = disconnected || v.find("disconnected") != std::string::npos;
    }
    CHECK(disconnected);
}

TEST_CASE("interior white vertices must have valency three") {
    PrimitiveTree t;
    t.source_case = StructureCase::C2a;
    t.add_vertex(0, VertexColor::White, false);
    t.add_vertex(1, VertexColor::Black, false);
    t.add_vertex(2, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type1);
    t.add_edge(0, 2, TreeEdgeLabel::Type1);
    t.canonicalize();
    Report r = validate_ptree(t);
    bool valency = false;
    for (const auto& v : r.violations) {
        valency = valency || v.find("valency") != std::string::npos;
    }
    CHECK(valency);
}
