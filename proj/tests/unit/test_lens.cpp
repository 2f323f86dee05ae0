#include <doctest.h>

#include <numeric>
#include <optional>

#include "ptlens/error.hpp"
#include "ptlens/lens.hpp"
#include "ptlens/verify.hpp"

using namespace ptlens;

namespace {

// Exhaustive-search oracle: the smallest q0 <= p/2 with q0 = +-q^{+-1}
// (mod p), found by scanning every candidate and testing the congruences
// directly.
std::optional<int> normalize_oracle(int p, int q) {
    int q0 = ((q % p) + p) % p;
    if (q0 == 0 || std::gcd(p, q0) != 1) return std::nullopt;
    for (int cand = 1; 2 * cand <= p; ++cand) {
        if (std::gcd(cand, p) != 1) continue;
        int prod = (cand * q0) % p;
        int diff = ((cand - q0) % p + p) % p;
        int sum = (cand + q0) % p;
        if (prod == 1 || prod == p - 1 || diff == 0 || sum == 0) return cand;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("normalize matches the exhaustive oracle on frozen examples") {
    CHECK(normalize(7, 5) == LensSpace{7, 2}); // oracle: 2*5 = 10 = 3, 2 = 5^{-1}... scan gives 2
    CHECK(*normalize_oracle(7, 5) == 2);
    CHECK(normalize(5, 2) == LensSpace{5, 2});
    CHECK(*normalize_oracle(5, 2) == 2);
    CHECK(normalize(3, 2) == LensSpace{3, 1}); // 2 = -1 (mod 3)
    CHECK(*normalize_oracle(3, 2) == 1);
}

TEST_CASE("normalize agrees with the oracle on a grid") {
    for (int p = 2; p <= 40; ++p) {
        for (int q = 1; q < p; ++q) {
            auto expected = normalize_oracle(p, q);
            if (!expected) continue;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(normalize(p, q).q == *expected);
        }
    }
}

TEST_CASE("normalize accepts arbitrary residue representatives") {
    CHECK(normalize(7, 12) == normalize(7, 5));
    CHECK(normalize(7, -2) == normalize(7, 5));
    CHECK(normalize(11, 100) == normalize(11, 1));
}

TEST_CASE("normalize rejects invalid input") {
    CHECK_THROWS_WITH_AS(normalize(1, 1), doctest::Contains("at least 2"), Error);
    CHECK_THROWS_AS(normalize(4, 2), Error);
    CHECK_THROWS_AS(normalize(5, 0), Error);
    CHECK_THROWS_AS(normalize(5, 10), Error); // q = 0 mod p

    try {
        normalize(4, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "NotCoprime");
    }
}

TEST_CASE("homeomorphism spot values") {
    CHECK(are_homeomorphic({7, 2}, {7, 4}));  // 2*4 = 8 = 1 (mod 7)
    CHECK(are_homeomorphic({7, 5}, {7, 2}));
    CHECK_FALSE(are_homeomorphic({5, 2}, {7, 2})); // p differs
    CHECK_FALSE(are_homeomorphic({5, 1}, {5, 2}));
}

TEST_CASE("homeomorphism equals equality of normal forms") {
    for (int p = 2; p <= 25; ++p) {
        for (int qa = 1; qa < p; ++qa) {
            if (std::gcd(p, qa) != 1) continue;
            for (int qb = 1; qb < p; ++qb) {
                if (std::gcd(p, qb) != 1) continue;
                CAPTURE(p);
                CAPTURE(qa);
                CAPTURE(qb);
                CHECK(are_homeomorphic({p, qa}, {p, qb}) ==
                      (normalize(p, qa) == normalize(p, qb)));
            }
        }
    }
}

TEST_CASE("classification spot values") {
    CHECK(classify(normalize(2, 1)) == StructureCase::C1a);
    CHECK(classify(normalize(4, 1)) == StructureCase::C1b);
    CHECK(classify(normalize(3, 1)) == StructureCase::C2a);
    CHECK(classify(normalize(5, 2)) == StructureCase::C2b);
    CHECK(classify(normalize(7, 2)) == StructureCase::C2c);
    CHECK(classify(normalize(7, 3)) == StructureCase::C2c); // p = 2q + 1
    CHECK(classify(normalize(11, 4)) == StructureCase::C1c);
    CHECK(classify(normalize(13, 5)) == StructureCase::C3); // 13 mod 5 = 3
}

TEST_CASE("classification matches the literal oracle and partitions the grid") {
    for (int p = 2; p <= 60; ++p) {
        for (int q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            LensSpace L{p, q};
            auto oracle = verify::classify_oracle(L);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(oracle.fired == 1);
            CHECK(classify(L) == oracle.tag);
        }
    }
}

TEST_CASE("classification is a homeomorphism invariant") {
    for (int p = 2; p <= 30; ++p) {
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(classify(normalize(p, q)) == classify(normalize(p, (p - q) % p == 0 ? q : p - q)));
        }
    }
}

TEST_CASE("case names round-trip") {
    for (StructureCase c : {StructureCase::C1a, StructureCase::C1b, StructureCase::C1c,
                            StructureCase::C2a, StructureCase::C2b, StructureCase::C2c,
                            StructureCase::C3}) {
        CHECK(case_from_name(case_name(c)) == c);
    }
    CHECK_THROWS_AS(case_from_name("C4"), Error);
}
