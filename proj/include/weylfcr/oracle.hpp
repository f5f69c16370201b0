#pragma once

// Enumeration oracle for strong dominance, independent of the cone and
// lattice machinery used by is_strongly_dominant.
//
// S_N = {sum m_i w_i : 0 <= m_i <= N} intersected with V. If p, q are in S_N
// and q - p is dominant (m_q >= m_p coordinatewise), then p + t(q - p) stays
// in V and in P+ for every t in N. So when such differences span the direction
// space of V, the dominant integral points of V are Zariski dense. The "dense"
// answer is always correct; "not dense" can be wrong only when N is too small,
// so a "not dense" verdict at N counts as stabilized only if it persists at
// 2N, 4N and 8N. Comparing N with 2N alone misses planes whose dominant
// points first appear with coordinates in the teens.

#include "weylfcr/ideals.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace weylfcr {

struct DensityProbe {
    bool dense = false;
    std::size_t points = 0;  // |S_N|
    std::size_t span_dim = 0;
};

namespace detail {
/// Membership in V for weights sum m_i w_i, evaluated on integer data.
class BoxMembership {
public:
    BoxMembership(const RootSystem& rs, const AffineSubspace& v) {
        const auto& fund = rs.fundamental_weights();
        for (const auto& f : v.vanishing_functionals()) {
            RatVec vals;
            for (const auto& w : fund) vals.push_back(dot(f.h, w));
            vals.push_back(f.c);
            auto [ints, den] = clear_denominators(vals);
            std::vector<long long> row;
            for (const auto& x : ints) {
                if (abs(x) > Integer(1) << 40) throw std::overflow_error("density oracle: coefficients too large");
                row.push_back(x.convert_to<long long>());
            }
            rows_.push_back(std::move(row));
        }
    }

    bool contains(const std::vector<int>& m) const {
        for (const auto& row : rows_) {
            long long s = row.back();
            for (std::size_t i = 0; i < m.size(); ++i) s += row[i] * m[i];
            if (s != 0) return false;
        }
        return true;
    }

private:
    std::vector<std::vector<long long>> rows_;
};
}  // namespace detail

inline DensityProbe probe_dominant_density(const LinearIdeal& omega, int bound) {
    const auto& rs = omega.rs();
    if (!rs.is_semisimple()) throw std::invalid_argument("density oracle needs a semisimple system");
    const std::size_t r = rs.semisimple_rank();
    const auto& fund = rs.fundamental_weights();
    const auto& v = omega.variety();
    detail::BoxMembership member(rs, v);

    std::vector<std::vector<int>> hits;
    std::vector<RatVec> hit_weights;
    std::vector<int> m(r, 0);
    while (true) {
        if (member.contains(m)) {
            RatVec mu = zero_vec(rs.ambient_dim());
            for (std::size_t i = 0; i < r; ++i) axpy(mu, Rational(m[i]), fund[i]);
            hits.push_back(m);
            hit_weights.push_back(std::move(mu));
        }
        std::size_t i = 0;
        while (i < r && m[i] == bound) m[i++] = 0;
        if (i == r) break;
        ++m[i];
    }

    DensityProbe probe;
    probe.points = hits.size();
    if (hits.empty()) return probe;
    const std::size_t target = v.dimension();
    HullBuilder span(rs.ambient_dim());
    span.add(zero_vec(rs.ambient_dim()));
    for (std::size_t a = 0; a < hits.size() && span.dimension() < target; ++a)
        for (std::size_t b = 0; b < hits.size() && span.dimension() < target; ++b) {
            if (a == b) continue;
            bool dominant = true;
            for (std::size_t i = 0; i < r && dominant; ++i) dominant = hits[b][i] >= hits[a][i];
            if (dominant) span.add(hit_weights[b] - hit_weights[a]);
        }
    probe.span_dim = span.dimension();
    probe.dense = probe.span_dim == target;
    return probe;
}

struct OracleVerdict {
    bool dense = false;       // answer at the primary bound
    bool stabilized = false;  // same answer at 2, 4 and 8 times the bound
};

inline OracleVerdict strong_dominance_oracle(const LinearIdeal& omega, int bound = 6) {
    if (probe_dominant_density(omega, bound).dense) return {true, true};
    for (int k : {2, 4, 8})
        if (probe_dominant_density(omega, k * bound).dense) return {false, false};
    return {false, true};
}

}  // namespace weylfcr
