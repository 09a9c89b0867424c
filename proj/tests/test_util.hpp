#pragma once

#include <cstdint>

#include "gader/group.hpp"

namespace testutil {

/// Shared contexts with stable addresses (elements remember their context
/// by pointer).
inline const gader::GroupCtx& f2() {
    static gader::GroupCtx ctx = gader::parse_presentation("gens: x1 x2");
    return ctx;
}

inline const gader::GroupCtx& z2() {
    static gader::GroupCtx ctx =
        gader::parse_presentation("gens: a b\nrel: a b a^-1 b^-1");
    return ctx;
}

inline const gader::GroupCtx& s3() {
    static gader::GroupCtx ctx =
        gader::parse_presentation("gens: a b\nrel: a^3, b^2, (a b)^2");
    return ctx;
}

inline const gader::GroupCtx& s3_table() {
    static gader::GroupCtx ctx = gader::materialize_table(s3());
    return ctx;
}

/// splitmix64: tiny deterministic generator for seeded property tests.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace testutil
