#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace ptlens {

// Lens-space parameters in normal form: p >= 2, 1 <= q <= p/2, gcd(p, q) = 1.
// Values are only produced by normalize(), so holding a LensSpace implies the
// invariants hold.
struct LensSpace {
    int p = 0;
    int q = 0;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
    friend auto operator<=>(const LensSpace&, const LensSpace&) = default;
};

// The seven structure cases of the primitive disk complex. The tag is a
// deterministic function of the normalized (p, q):
//
//   C1a  p = 2, q = 1          tree, all edges type-2
//   C1b  q = 1, p >= 4         tree, all edges type-1
//   C1c  q >= 3, p != 2q+1,    tree, type-0 and type-1 edges mix at
//        p = +-1 mod q         every vertex
//   C2a  p = 3                 two-dimensional, all edges type-1, each in a
//                              unique triangle
//   C2b  p = 5, q = 2          triangles carry one type-1 and two type-0
//                              edges; type-0 edges shared by two triangles
//   C2c  p >= 7, q = 2 or      as C2b but type-0 edges lie in a unique
//        p = 2q+1              triangle and naked type-1 edges appear
//   C3   p != +-1 mod q        disconnected: tree components joined by
//                              bridges
enum class StructureCase { C1a, C1b, C1c, C2a, C2b, C2c, C3 };

std::string_view case_name(StructureCase c);

// Parses "C1a" .. "C3"; throws Error("UnknownCase") otherwise.
StructureCase case_from_name(std::string_view name);

// Reduces (p, q) to normal form. q may be any integer representative of its
// residue class, including negatives. Among the candidates +-q^{+-1} mod p
// that land in [1, p/2], the smallest is chosen, which makes the result
// canonical per homeomorphism class.
//
// Throws Error with code:
//   "InvalidP"     if p < 2
//   "ZeroResidue"  if q = 0 mod p
//   "NotCoprime"   if gcd(p, q mod p) != 1
LensSpace normalize(long long p, long long q);

// True iff L(a) and L(b) are homeomorphic: equal p and q_b * q_a^{+-1} = +-1
// (mod p). Implemented on the congruences directly, not via normalize(), so
// the two routes check each other in tests. Inputs are validated like
// normalize().
bool are_homeomorphic(std::pair<long long, long long> a,
                      std::pair<long long, long long> b);

// Structure-case tag for a normalized lens space.
StructureCase classify(const LensSpace& L);

} // namespace ptlens
