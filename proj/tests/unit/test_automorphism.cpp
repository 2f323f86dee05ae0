#include <doctest.h>

#include <algorithm>

#include "ptlens/automorphism.hpp"
#include "ptlens/error.hpp"
#include "ptlens/rng.hpp"
#include "ptlens/verify.hpp"

using namespace ptlens;

namespace {

PrimitiveTree path3() {
    PrimitiveTree t;
    for (int i = 0; i < 3; ++i) t.add_vertex(i, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type1);
    t.add_edge(1, 2, TreeEdgeLabel::Type1);
    t.canonicalize();
    return t;
}

VertexMap identity_on(const PrimitiveTree& t) {
    VertexMap f;
    for (const auto& v : t.vertices) f[v.id] = v.id;
    return f;
}

} // namespace

TEST_CASE("identity has order one") {
    PrimitiveTree t = path3();
    CHECK(check_automorphism(t, identity_on(t)) == 1);
}

TEST_CASE("leaf swap on a 3-path has order two") {
    PrimitiveTree t = path3();
    VertexMap f{{0, 2}, {1, 1}, {2, 0}};
    CHECK(check_automorphism(t, f) == 2);
}

TEST_CASE("label mismatch is rejected") {
    PrimitiveTree t;
    for (int i = 0; i < 3; ++i) t.add_vertex(i, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type0);
    t.add_edge(1, 2, TreeEdgeLabel::Type1);
    t.canonicalize();
    VertexMap f{{0, 2}, {1, 1}, {2, 0}};
    try {
        check_automorphism(t, f);
        FAIL("expected LabelViolation");
    } catch (const Error& e) {
        CHECK(e.code() == "LabelViolation");
    }
}

TEST_CASE("color exchange between black and white is rejected") {
    PrimitiveTree t;
    t.source_case = StructureCase::C2a;
    t.add_vertex(0, VertexColor::Black, false);
    t.add_vertex(1, VertexColor::White, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type1);
    t.canonicalize();
    VertexMap f{{0, 1}, {1, 0}};
    try {
        check_automorphism(t, f);
        FAIL("expected LabelViolation");
    } catch (const Error& e) {
        CHECK(e.code() == "LabelViolation");
    }
}

TEST_CASE("non-bijections and broken adjacency are rejected") {
    PrimitiveTree t = path3();
    try {
        check_automorphism(t, VertexMap{{0, 0}, {1, 0}, {2, 2}});
        FAIL("expected NotBijective");
    } catch (const Error& e) {
        CHECK(e.code() == "NotBijective");
    }
    try {
        check_automorphism(t, VertexMap{{0, 0}, {1, 1}});
        FAIL("expected NotBijective (partial map)");
    } catch (const Error& e) {
        CHECK(e.code() == "NotBijective");
    }

    // A 4-path admits the position swap 0<->1, 2<->3 as a bijection that
    // breaks adjacency: the image of {1,2} is {0,3}.
    PrimitiveTree p4;
    for (int i = 0; i < 4; ++i) p4.add_vertex(i, VertexColor::Black, false);
    p4.add_edge(0, 1, TreeEdgeLabel::Type1);
    p4.add_edge(1, 2, TreeEdgeLabel::Type1);
    p4.add_edge(2, 3, TreeEdgeLabel::Type1);
    p4.canonicalize();
    try {
        check_automorphism(p4, VertexMap{{0, 1}, {1, 0}, {2, 3}, {3, 2}});
        FAIL("expected NotAdjacencyPreserving");
    } catch (const Error& e) {
        CHECK(e.code() == "NotAdjacencyPreserving");
    }
}

TEST_CASE("higher orders are computed but rejected by fixed_point") {
    // A claw with three identical leaves rotated cyclically.
    PrimitiveTree t;
    for (int i = 0; i < 4; ++i) t.add_vertex(i, VertexColor::Black, false);
    for (int leaf : {1, 2, 3}) t.add_edge(0, leaf, TreeEdgeLabel::Type1);
    t.canonicalize();
    VertexMap rot{{0, 0}, {1, 2}, {2, 3}, {3, 1}};
    CHECK(check_automorphism(t, rot) == 3);
    try {
        fixed_point(t, rot);
        FAIL("expected UnsupportedOrder");
    } catch (const Error& e) {
        CHECK(e.code() == "UnsupportedOrder");
    }
}

TEST_CASE("fixed point of the identity is the lowest vertex") {
    PrimitiveTree t = path3();
    FixedLocus locus = fixed_point(t, identity_on(t));
    CHECK(locus.kind == FixedLocus::Kind::Vertex);
    CHECK(locus.vertex == 0);
}

TEST_CASE("leaf swap fixes the middle of the path") {
    PrimitiveTree t = path3();
    FixedLocus locus = fixed_point(t, VertexMap{{0, 2}, {1, 1}, {2, 0}});
    CHECK(locus.kind == FixedLocus::Kind::Vertex);
    CHECK(locus.vertex == 1);
}

TEST_CASE("swapping one edge yields that edge") {
    PrimitiveTree t;
    t.add_vertex(0, VertexColor::Black, false);
    t.add_vertex(1, VertexColor::Black, false);
    t.add_edge(0, 1, TreeEdgeLabel::Type2);
    t.canonicalize();
    FixedLocus locus = fixed_point(t, VertexMap{{0, 1}, {1, 0}});
    CHECK(locus.kind == FixedLocus::Kind::Edge);
    CHECK(locus.u == 0);
    CHECK(locus.v == 1);
}

TEST_CASE("brute force scan lists fixed vertices and swapped edges") {
    PrimitiveTree t = path3();
    auto all_id = brute_force_fixed(t, identity_on(t));
    CHECK(all_id.size() == 3); // every vertex, no swapped edge

    auto all_swap = brute_force_fixed(t, VertexMap{{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(all_swap.size() == 1);
    CHECK(all_swap.front().kind == FixedLocus::Kind::Vertex);
    CHECK(all_swap.front().vertex == 1);
}

TEST_CASE("random involutions on a 500-vertex tree keep the invariants") {
    RngStream rng(2024, "unit-fixed-points");
    for (int trial = 0; trial < 25; ++trial) {
        auto inv = verify::random_involution(rng, 500);
        CHECK(check_automorphism(inv.tree, inv.map) <= 2);
        auto all = brute_force_fixed(inv.tree, inv.map);
        REQUIRE_FALSE(all.empty());
        FixedLocus locus = fixed_point(inv.tree, inv.map);
        CHECK(std::find(all.begin(), all.end(), locus) != all.end());
        for (int probe = 0; probe < 4; ++probe) {
            int start =
                inv.tree.vertices[rng.below(inv.tree.vertices.size())].id;
            CHECK(fixed_point_from(inv.tree, inv.map, start).kind == locus.kind);
        }
    }
}
