#include <doctest.h>

#include <numeric>
#include <set>

#include "ptlens/error.hpp"
#include "ptlens/generator.hpp"
#include "ptlens/io.hpp"

using namespace ptlens;

TEST_CASE("L(2,1) truncation is a uniform type-2 tree") {
    LabeledComplex c = generate(normalize(2, 1), GenConfig{2, 3, 2, 0});
    CHECK(c.triangles.empty());
    CHECK(c.edges.size() == 9); // root valency 3, three depth-1 vertices with 2 children each
    for (const auto& e : c.edges) CHECK(e.label == EdgeLabel::Type2);
    CHECK(validate_structure(normalize(2, 1), c, GenConfig{2, 3, 2, 0}).ok());
}

TEST_CASE("L(3,1) with radius 1 and branching 1 is a single triangle") {
    LabeledComplex c = generate(normalize(3, 1), GenConfig{1, 1, 2, 0});
    CHECK(c.vertices.size() == 3);
    CHECK(c.triangles.size() == 1);
    REQUIRE(c.edges.size() == 3);
    for (const auto& e : c.edges) CHECK(e.label == EdgeLabel::Type1);
}

TEST_CASE("L(13,5) truncation carries tree components joined by bridges") {
    GenConfig cfg{2, 2, 3, 7};
    LabeledComplex c = generate(normalize(13, 5), cfg);
    REQUIRE(c.bridges.size() == 1);
    CHECK(c.bridges.front().size() == 5); // 3 triangles -> path of 5 vertices
    CHECK(c.triangles.size() == 3);

    // Primitive part splits into two components.
    std::set<int> primitive;
    for (const auto& v : c.vertices) {
        if (v.primitive) primitive.insert(v.id);
    }
    std::map<int, int> parent;
    for (int id : primitive) parent[id] = id;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : c.edges) {
        if (e.label == EdgeLabel::BridgeInterior) continue;
        parent[find(e.u)] = find(e.v);
    }
    std::set<int> roots;
    for (int id : primitive) roots.insert(find(id));
    CHECK(roots.size() == 2);

    CHECK(validate_structure(normalize(13, 5), c, cfg).ok());
}

TEST_CASE("generation is deterministic per seed and varies across seeds") {
    GenConfig a{3, 3, 2, 42};
    GenConfig b{3, 3, 2, 43};
    LensSpace L = normalize(13, 5);
    CHECK(io::to_json(generate(L, a)).dump() == io::to_json(generate(L, a)).dump());
    CHECK(io::to_json(generate(L, a)).dump() != io::to_json(generate(L, b)).dump());
}

TEST_CASE("structure validator flags a C2b triangle with two type-1 edges") {
    LensSpace L = normalize(5, 2);
    GenConfig cfg{2, 2, 2, 0};
    LabeledComplex c = generate(L, cfg);
    REQUIRE(validate_structure(L, c, cfg).ok());

    // Relabel one type-0 side of some triangle as type-1.
    for (auto& e : c.edges) {
        if (e.label != EdgeLabel::Type0) continue;
        bool in_triangle = false;
        for (const auto& t : c.triangles) {
            in_triangle = in_triangle ||
                          (std::find(t.begin(), t.end(), e.u) != t.end() &&
                           std::find(t.begin(), t.end(), e.v) != t.end());
        }
        if (in_triangle) {
            e.label = EdgeLabel::Type1;
            break;
        }
    }
    Report r = validate_structure(L, c, cfg);
    CHECK_FALSE(r.ok());
    bool pattern_violation = false;
    for (const auto& v : r.violations) {
        pattern_violation = pattern_violation || v.find("triangle type pattern") != std::string::npos;
    }
    CHECK(pattern_violation);
}

TEST_CASE("structure validator flags a foreign edge label for the case") {
    LensSpace L = normalize(4, 1);
    LabeledComplex c = generate(L, GenConfig{2, 2, 2, 0});
    c.edges.front().label = EdgeLabel::Type0;
    Report r = validate_structure(L, c);
    CHECK_FALSE(r.ok());
    bool forbidden = false;
    for (const auto& v : r.violations) {
        forbidden = forbidden || v.find("edge type forbidden") != std::string::npos;
    }
    CHECK(forbidden);
}

TEST_CASE("type-2 labels are rejected outside p = 2") {
    LensSpace L = normalize(7, 2);
    LabeledComplex c = generate(L, GenConfig{1, 2, 2, 0});
    c.edges.front().label = EdgeLabel::Type2;
    Report r = validate_structure(L, c);
    bool flagged = false;
    for (const auto& v : r.violations) {
        flagged = flagged || v.find("type-2") != std::string::npos;
    }
    CHECK(flagged);
}

TEST_CASE("generator rejects invalid configurations") {
    CHECK_THROWS_AS(generate(normalize(5, 2), GenConfig{0, 2, 2, 0}), Error);
    CHECK_THROWS_AS(generate(normalize(5, 2), GenConfig{1, 0, 2, 0}), Error);
    CHECK_THROWS_AS(generate(normalize(5, 2), GenConfig{1, 2, 1, 0}), Error);
    // C3 needs branching >= 2: it doubles as the component count.
    CHECK_THROWS_AS(generate(normalize(13, 5), GenConfig{1, 1, 2, 0}), Error);
}

TEST_CASE("a radius-3 L(7,3) truncation passes closure validation") {
    LensSpace L = normalize(7, 3); // = L(7,2), case C2c
    LabeledComplex c = generate(L, GenConfig{3, 2, 2, 1});
    CHECK(validate(c).ok());
    CHECK(validate_structure(L, c).ok());
}

TEST_CASE("dual graphs of generator outputs are forests") {
    for (const auto& L : {normalize(2, 1), normalize(3, 1), normalize(5, 2), normalize(7, 2),
                          normalize(13, 5)}) {
        LabeledComplex c = generate(L, GenConfig{2, 2, 2, 2});
        CAPTURE(L.p);
        CAPTURE(L.q);
        CHECK(dual_tree(c).is_forest());
    }
}

TEST_CASE("the structure case is inferable from generator output") {
    for (const auto& L : {normalize(2, 1), normalize(4, 1), normalize(11, 4), normalize(3, 1),
                          normalize(5, 2), normalize(7, 2), normalize(13, 5)}) {
        GenConfig cfg{2, 2, 2, 13};
        CAPTURE(L.p);
        CAPTURE(L.q);
        CHECK(infer_case(generate(L, cfg)) == classify(L));
    }
    CHECK_THROWS_AS(infer_case(LabeledComplex{}), Error);
}

TEST_CASE("case representatives classify back to their case") {
    for (StructureCase sc : {StructureCase::C1a, StructureCase::C1b, StructureCase::C1c,
                             StructureCase::C2a, StructureCase::C2b, StructureCase::C2c,
                             StructureCase::C3}) {
        CHECK(classify(representative(sc)) == sc);
    }
}

TEST_CASE("every case representative validates across a small grid") {
    for (const auto& L : {normalize(2, 1), normalize(4, 1), normalize(11, 4), normalize(3, 1),
                          normalize(5, 2), normalize(7, 2), normalize(13, 5)}) {
        for (int radius : {1, 2}) {
            for (int branching : {2, 3}) {
                GenConfig cfg{radius, branching, 2, 11};
                CAPTURE(L.p);
                CAPTURE(L.q);
                CAPTURE(radius);
                CAPTURE(branching);
                LabeledComplex c = generate(L, cfg);
                CHECK(validate(c).ok());
                CHECK(validate_structure(L, c, cfg).ok());
            }
        }
    }
}
