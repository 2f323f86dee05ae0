#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ptlens {

// Deterministic RNG stream keyed by (seed, stream name). Every module draws
// from its own named stream so a single top-level --seed reproduces whole
// runs regardless of evaluation order elsewhere.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view name)
        : engine_(mix(seed, name)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return static_cast<double>(engine_()) / static_cast<double>(UINT64_MAX) < p;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    static std::uint64_t mix(std::uint64_t seed, std::string_view name) {
        // FNV-1a over the stream name, folded into the seed, then one
        // splitmix64 round so nearby seeds do not yield nearby states.
        std::uint64_t h = 14695981039346656037ull;
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::uint64_t z = seed ^ h;
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace ptlens
