#pragma once

#include <cstdint>
#include <random>

namespace lhom {

/// Bounded draw with a fully specified sequence (mt19937_64 is pinned by
/// the standard, so seeded output is reproducible across platforms).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

/// Integer in [lo, hi] inclusive.
inline long draw_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace lhom
