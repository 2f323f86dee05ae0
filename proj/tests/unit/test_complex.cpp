#include <doctest.h>

#include <algorithm>

#include "ptlens/complex.hpp"
#include "ptlens/error.hpp"

using namespace ptlens;

namespace {

LabeledComplex triangle_complex() {
    LabeledComplex c;
    for (int i = 0; i < 3; ++i) c.add_vertex(VertexAttrs{i});
    c.add_edge(0, 1, EdgeLabel::Type1);
    c.add_edge(0, 2, EdgeLabel::Type1);
    c.add_edge(1, 2, EdgeLabel::Type1);
    c.add_triangle(0, 1, 2);
    c.canonicalize();
    return c;
}

// A fan corridor of n triangles around apex n+1, rim 0..n, endpoints 0 and
// n. Mirrors the layout the generator uses for bridges.
LabeledComplex fan_corridor(int n, bool interior_primitive = false) {
    LabeledComplex c;
    int apex = n + 1;
    for (int i = 0; i <= apex; ++i) {
        VertexAttrs v;
        v.id = i;
        v.primitive = (i == 0 || i == n) ? true : interior_primitive;
        c.add_vertex(v);
    }
    for (int i = 0; i <= n; ++i) {
        c.add_edge(apex, i, EdgeLabel::Plain);
        if (i < n) c.add_edge(i, i + 1, EdgeLabel::Plain);
    }
    for (int i = 0; i < n; ++i) c.add_triangle(apex, i, i + 1);
    c.canonicalize();
    return c;
}

} // namespace

TEST_CASE("empty complex validates") {
    CHECK(validate(LabeledComplex{}).ok());
}

TEST_CASE("triangle closure failure is reported") {
    LabeledComplex c;
    for (int i = 0; i < 3; ++i) c.add_vertex(VertexAttrs{i});
    c.add_edge(0, 2, EdgeLabel::Type1);
    c.add_edge(1, 2, EdgeLabel::Type1);
    c.add_triangle(0, 1, 2); // edge {0,1} missing
    Report r = validate(c);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations.front().find("missing edge {0,1}") != std::string::npos);
}

TEST_CASE("validator catches duplicates and dangling references") {
    LabeledComplex c;
    c.add_vertex(VertexAttrs{0});
    c.add_vertex(VertexAttrs{0});
    c.add_edge(0, 7, EdgeLabel::Plain);
    Report r = validate(c);
    CHECK_FALSE(r.ok());
    CHECK(r.violations.size() == 2);
}

TEST_CASE("dual tree of a single triangle is a star") {
    DualTree d = dual_tree(triangle_complex());
    CHECK(d.edge_nodes == 3);
    CHECK(d.triangle_nodes == 1);
    CHECK(d.links.size() == 3);
    CHECK(d.is_tree());
}

TEST_CASE("dual tree of two triangles sharing an edge is a path of five nodes") {
    LabeledComplex c;
    for (int i = 0; i < 4; ++i) c.add_vertex(VertexAttrs{i});
    c.add_edge(0, 1, EdgeLabel::Plain);
    c.add_edge(0, 2, EdgeLabel::Plain);
    c.add_edge(1, 2, EdgeLabel::Plain);
    c.add_edge(1, 3, EdgeLabel::Plain);
    c.add_edge(2, 3, EdgeLabel::Plain);
    c.add_triangle(0, 1, 2);
    c.add_triangle(1, 2, 3);
    c.canonicalize();

    DualTree d = dual_tree(c);
    CHECK(d.node_count() == 7); // 5 edges + 2 triangles
    CHECK(d.links.size() == 6);
    CHECK(d.is_forest());
    // The two triangle nodes and the shared-edge node form the spine; the
    // four boundary edge nodes hang off them: still one component.
    CHECK(d.component_count() == 1);
}

TEST_CASE("six-triangle corridor has an alternating dual path") {
    LabeledComplex c = fan_corridor(6);
    DualTree d = dual_tree(c);
    CHECK(d.is_tree());

    Corridor cor = corridor(c, 0, 6);
    CHECK(cor.triangles.size() == 6);
    // Consecutive triangles share exactly one edge; endpoints sit only in
    // the first and last triangle.
    for (std::size_t i = 0; i + 1 < cor.triangles.size(); ++i) {
        const auto& a = c.triangles[static_cast<std::size_t>(cor.triangles[i])];
        const auto& b = c.triangles[static_cast<std::size_t>(cor.triangles[i + 1])];
        std::vector<int> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(shared));
        CHECK(shared.size() == 2);
    }
}

TEST_CASE("two glued triangles give the smallest corridor") {
    LabeledComplex c;
    for (int i = 0; i < 4; ++i) c.add_vertex(VertexAttrs{i});
    c.add_edge(0, 1, EdgeLabel::Plain);
    c.add_edge(0, 2, EdgeLabel::Plain);
    c.add_edge(1, 2, EdgeLabel::Plain);
    c.add_edge(1, 3, EdgeLabel::Plain);
    c.add_edge(2, 3, EdgeLabel::Plain);
    c.add_triangle(0, 1, 2);
    c.add_triangle(1, 2, 3);
    c.canonicalize();

    Corridor cor = corridor(c, 0, 3);
    CHECK(cor.triangles.size() == 2);
    CHECK(corridor_vertex_path(c, cor) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("corridor rejects adjacent or equal endpoints") {
    LabeledComplex c = triangle_complex();
    CHECK_THROWS_AS(corridor(c, 0, 1), Error);
    try {
        corridor(c, 0, 0);
        FAIL("expected AdjacentEndpoints");
    } catch (const Error& e) {
        CHECK(e.code() == "AdjacentEndpoints");
    }
}

TEST_CASE("corridor reports a missing path") {
    // Two disjoint triangles: the links are in different dual components.
    LabeledComplex c;
    for (int i = 0; i < 6; ++i) c.add_vertex(VertexAttrs{i});
    c.add_edge(0, 1, EdgeLabel::Plain);
    c.add_edge(0, 2, EdgeLabel::Plain);
    c.add_edge(1, 2, EdgeLabel::Plain);
    c.add_edge(3, 4, EdgeLabel::Plain);
    c.add_edge(3, 5, EdgeLabel::Plain);
    c.add_edge(4, 5, EdgeLabel::Plain);
    c.add_triangle(0, 1, 2);
    c.add_triangle(3, 4, 5);
    c.canonicalize();
    try {
        corridor(c, 0, 3);
        FAIL("expected NoPath");
    } catch (const Error& e) {
        CHECK(e.code() == "NoPath");
    }
}

TEST_CASE("corridor detects ambiguous shortest paths") {
    // Two fans side by side joining the same endpoints: the dual graph is
    // not a tree between the links.
    LabeledComplex c;
    for (int i = 0; i < 6; ++i) c.add_vertex(VertexAttrs{i});
    // fan A over apex 2, fan B over apex 3, both from 0 to 5 via 1 resp. 4.
    for (int apex : {2, 3}) {
        int mid = apex == 2 ? 1 : 4;
        c.add_edge(apex, 0, EdgeLabel::Plain);
        c.add_edge(apex, mid, EdgeLabel::Plain);
        c.add_edge(apex, 5, EdgeLabel::Plain);
        c.add_edge(0, mid, EdgeLabel::Plain);
        c.add_edge(mid, 5, EdgeLabel::Plain);
        c.add_triangle(apex, 0, mid);
        c.add_triangle(apex, mid, 5);
    }
    c.canonicalize();
    try {
        corridor(c, 0, 5);
        FAIL("expected NotUnique");
    } catch (const Error& e) {
        CHECK(e.code() == "NotUnique");
    }
}

TEST_CASE("corridor is symmetric up to reversal") {
    LabeledComplex c = fan_corridor(4);
    Corridor forward = corridor(c, 0, 4);
    Corridor backward = corridor(c, 4, 0);
    std::vector<int> reversed = forward.triangles;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(backward.triangles == reversed);
}

TEST_CASE("bridge test scans interior primitivity") {
    LabeledComplex plain = fan_corridor(3, /*interior_primitive=*/false);
    Corridor cor = corridor(plain, 0, 3);
    CHECK(is_bridge(plain, cor));

    LabeledComplex tainted = fan_corridor(3, /*interior_primitive=*/true);
    Corridor cor2 = corridor(tainted, 0, 3);
    CHECK_FALSE(is_bridge(tainted, cor2));
}
