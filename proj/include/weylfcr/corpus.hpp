#pragma once

// Seeded random linear ideals for property tests. Only the engine's raw
// output is used (mapped by modulo), so corpora are identical on every
// platform.

#include "weylfcr/ideals.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace weylfcr {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    Rational small_rational(long long lim, long long max_den) {
        return Rational(range(-lim, lim), range(1, max_den));
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t system_seed(std::uint64_t seed, const RootSystem& rs, std::uint64_t salt = 0) {
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(rs.kind()) + 1) * 0xC2B2AE3D27D4EB4FULL;
    h ^= (static_cast<std::uint64_t>(rs.param()) + 17) * 0x165667B19E3779F9ULL;
    h ^= salt * 0xD6E8FEB86659FD93ULL;
    return h;
}

/// A random dominant integral weight m_1 w_1 + ... + m_r w_r with m_i <= 3.
inline RatVec random_base_weight(const RootSystem& rs, SeededRng& rng) {
    RatVec mu = zero_vec(rs.ambient_dim());
    for (const auto& w : rs.fundamental_weights()) axpy(mu, Rational(rng.range(0, 3)), w);
    return mu;
}

/// A random direction: a sparse combination of simple roots (half-integer
/// coefficients allowed) or a nonnegative combination of fundamental weights.
inline RatVec random_direction(const RootSystem& rs, SeededRng& rng) {
    RatVec d = zero_vec(rs.ambient_dim());
    const std::size_t r = rs.semisimple_rank();
    if (rng.below(2) == 0) {
        for (std::size_t i = 0; i < r; ++i)
            if (rng.below(2) == 0) axpy(d, Rational(rng.range(-2, 2), rng.range(1, 2)), rs.simple_root(i));
    } else {
        for (std::size_t i = 0; i < r; ++i)
            if (rng.below(2) == 0) axpy(d, Rational(rng.range(0, 2)), rs.fundamental_weights()[i]);
    }
    return d;
}

/// `count` ideals whose varieties pass through a random dominant integral
/// weight with 0 to rank random directions.
inline std::vector<LinearIdeal> random_ideals(const RootSystemPtr& rs, std::size_t count, std::uint64_t seed) {
    SeededRng rng(system_seed(seed, *rs));
    std::vector<LinearIdeal> out;
    out.reserve(count);
    const std::size_t r = rs->semisimple_rank();
    while (out.size() < count) {
        RatVec base = random_base_weight(*rs, rng);
        const auto dim = rng.below(r + 1);
        RatMatrix dirs;
        for (std::uint64_t j = 0; j < dim; ++j) dirs.push_back(random_direction(*rs, rng));
        out.push_back(LinearIdeal::from_variety(rs, AffineSubspace(base, dirs)));
    }
    return out;
}

/// Systems of semisimple rank at most 3 used by the fuzz suites.
inline std::vector<RootSystemPtr> fuzz_systems() {
    return {RootSystem::build(RootKind::A, 1), RootSystem::build(RootKind::A, 2), RootSystem::build(RootKind::A, 3),
            RootSystem::build(RootKind::B, 2), RootSystem::build(RootKind::B, 3), RootSystem::build(RootKind::C, 1),
            RootSystem::build(RootKind::C, 2), RootSystem::build(RootKind::C, 3)};
}

}  // namespace weylfcr
