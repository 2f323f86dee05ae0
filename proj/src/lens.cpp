#include "ptlens/lens.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ptlens/error.hpp"

namespace ptlens {
namespace {

// Least non-negative residue; works for negative values.
long long mod_pos(long long value, long long m) {
    long long r = value % m;
    return r < 0 ? r + m : r;
}

// Modular inverse for gcd(a, m) = 1 via extended Euclid.
long long mod_inverse(long long a, long long m) {
    long long old_r = a, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_s = std::exchange(s, old_s - quot * s);
    }
    return mod_pos(old_s, m);
}

void check_pair(long long p, long long q) {
    if (p < 2) {
        throw Error("InvalidP", "p must be at least 2, got " + std::to_string(p));
    }
    long long q0 = mod_pos(q, p);
    if (q0 == 0) {
        throw Error("ZeroResidue",
                    "q = " + std::to_string(q) + " is divisible by p = " + std::to_string(p));
    }
    if (std::gcd(p, q0) != 1) {
        throw Error("NotCoprime", "gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                                      ") != 1");
    }
}

} // namespace

std::string_view case_name(StructureCase c) {
    switch (c) {
    case StructureCase::C1a: return "C1a";
    case StructureCase::C1b: return "C1b";
    case StructureCase::C1c: return "C1c";
    case StructureCase::C2a: return "C2a";
    case StructureCase::C2b: return "C2b";
    case StructureCase::C2c: return "C2c";
    case StructureCase::C3: return "C3";
    }
    return "?";
}

StructureCase case_from_name(std::string_view name) {
    for (StructureCase c : {StructureCase::C1a, StructureCase::C1b, StructureCase::C1c,
                            StructureCase::C2a, StructureCase::C2b, StructureCase::C2c,
                            StructureCase::C3}) {
        if (case_name(c) == name) return c;
    }
    throw Error("UnknownCase", "unknown structure case '" + std::string(name) + "'");
}

LensSpace normalize(long long p, long long q) {
    check_pair(p, q);
    long long q0 = mod_pos(q, p);
    long long qi = mod_inverse(q0, p);

    long long best = -1;
    for (long long cand : {q0, p - q0, qi, p - qi}) {
        if (2 * cand <= p && (best < 0 || cand < best)) best = cand;
    }
    // One of q0, p - q0 is always <= p/2 (they sum to p and p = 2q0 would
    // contradict coprimality for q0 > 1).
    return LensSpace{static_cast<int>(p), static_cast<int>(best)};
}

bool are_homeomorphic(std::pair<long long, long long> a,
                      std::pair<long long, long long> b) {
    check_pair(a.first, a.second);
    check_pair(b.first, b.second);
    if (a.first != b.first) return false;

    long long p = a.first;
    long long qa = mod_pos(a.second, p);
    long long qb = mod_pos(b.second, p);
    long long prod = mod_pos(qa * qb, p);
    long long diff = mod_pos(qb - qa, p);
    long long sum = mod_pos(qb + qa, p);
    // q_b * q_a = +-1 covers the inverse relation; q_b = +-q_a the direct one.
    return prod == 1 || prod == p - 1 || diff == 0 || sum == 0;
}

StructureCase classify(const LensSpace& L) {
    int p = L.p;
    int q = L.q;

    if (q == 1) {
        if (p == 2) return StructureCase::C1a;
        if (p == 3) return StructureCase::C2a;
        return StructureCase::C1b;
    }
    int r = p % q;
    bool congruent = (r == 1 || r == q - 1);
    if (!congruent) return StructureCase::C3;

    if (q == 2 || p == 2 * q + 1) {
        return p == 5 ? StructureCase::C2b : StructureCase::C2c;
    }
    return StructureCase::C1c;
}

} // namespace ptlens
