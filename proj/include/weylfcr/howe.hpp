#pragma once

// Highest weights of O(V) for the dual pairs (GL_k, gl_{p+q}) and
// (O_k, sp_2n), the Zariski closures of those weight sets as unions of linear
// varieties, and the Weyl elements relating the components.

#include "weylfcr/fcr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfcr {

// ---- partitions -------------------------------------------------------------

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
            if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int length() const { return static_cast<int>(parts.size()); }
    /// i-th part, 1-based, zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts[static_cast<std::size_t>(i - 1)] : 0; }
    bool operator==(const Partition&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

/// lambda'_i = |{j : lambda_j >= i}|.
inline Partition conjugate(const Partition& l) {
    std::vector<int> out;
    for (int i = 1; i <= l.part(1); ++i) {
        int c = 0;
        for (int x : l.parts)
            if (x >= i) ++c;
        out.push_back(c);
    }
    return Partition(std::move(out));
}

/// All partitions with at most max_len parts, each at most max_part.
inline std::vector<Partition> bounded_partitions(int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = 1; x <= cap; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    if (max_len >= 0 && max_part >= 0) rec(max_part);
    return out;
}

// ---- closure bookkeeping ------------------------------------------------------

/// Distinct subspaces of the list not contained in another one, in first-seen order.
inline std::vector<AffineSubspace> maximal_subspaces(const std::vector<AffineSubspace>& xs) {
    std::vector<AffineSubspace> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
            if (i == j || !xs[j].contains(xs[i])) continue;
            // Equal subspaces: keep the first occurrence only.
            dominated = !(xs[i].contains(xs[j])) || j < i;
        }
        if (!dominated) out.push_back(xs[i]);
    }
    return out;
}

/// Finite unions of affine subspaces agree iff each piece lies in a piece of the other.
inline bool same_union(const std::vector<AffineSubspace>& a, const std::vector<AffineSubspace>& b) {
    auto covered = [](const std::vector<AffineSubspace>& xs, const std::vector<AffineSubspace>& ys) {
        for (const auto& x : xs) {
            bool ok = false;
            for (const auto& y : ys) ok = ok || y.contains(x);
            if (!ok) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

/// Affine hulls of weights grouped by an integer key.
class StrataHulls {
public:
    explicit StrataHulls(std::size_t n) : n_(n) {}

    void add(int key, const RatVec& weight) {
        builders_.try_emplace(key, n_).first->second.add(weight);
        ++points_;
    }

    std::map<int, AffineSubspace> hulls() const {
        std::map<int, AffineSubspace> out;
        for (const auto& [k, b] : builders_) out.emplace(k, *b.hull());
        return out;
    }

    std::vector<AffineSubspace> all() const {
        std::vector<AffineSubspace> out;
        for (auto& [k, h] : hulls()) out.push_back(h);
        return out;
    }

    std::size_t points() const { return points_; }

private:
    std::size_t n_;
    std::map<int, HullBuilder> builders_;
    std::size_t points_ = 0;
};

struct ClosureReport {
    std::string case_name;
    int p = 0, q = 0, k = 0, n = 0;
    bool full_space = false;
    std::vector<int> index_set;
    std::vector<LinearIdeal> components;
    std::vector<std::size_t> dims;
    bool oracle_agreement = false;

    // Oracle detail.
    bool closure_convention_agrees = false;  // maximal stratum hulls = components
    bool strict_convention_agrees = false;   // hulls of maximal-length strata = components
    bool index_match = false;                // stratum i hull = V(Omega_i) for every listed i
    bool stabilized = false;                 // maximal hulls unchanged at bound + 1
    bool weights_covered = false;            // every weight lies in some component
    bool incomparable = false;               // no component variety contains another
    std::size_t weights_enumerated = 0;
    int bound = 0;
};

inline bool pairwise_incomparable(const std::vector<LinearIdeal>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (i != j && cs[j].variety().contains(cs[i].variety())) return false;
    return true;
}

inline std::vector<AffineSubspace> varieties_of(const std::vector<LinearIdeal>& cs) {
    std::vector<AffineSubspace> out;
    for (const auto& c : cs) out.push_back(c.variety());
    return out;
}

// ---- Case A: (GL_k, gl_n), n = p + q ------------------------------------------

struct CaseAEntry {
    Partition alpha, beta;
    RatVec weight_g;            // length n
    std::vector<int> weight_K;  // length k
};

inline void check_case_A_params(int p, int q, int k) {
    if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("case A needs p, q >= 0 and p + q >= 1");
    if (k < 1) throw std::invalid_argument("case A needs k >= 1");
}

/// (-k-a_p, ..., -k-a_1, b_1, ..., b_q).
inline RatVec case_A_weight_g(const Partition& a, const Partition& b, int p, int q, int k) {
    RatVec w;
    for (int j = p; j >= 1; --j) w.push_back(Rational(-k - a.part(j)));
    for (int j = 1; j <= q; ++j) w.push_back(Rational(b.part(j)));
    return w;
}

/// (a_1, ..., a_p, 0, ..., 0, -b_q, ..., -b_1), padded to length k.
inline std::vector<int> case_A_weight_K(const Partition& a, const Partition& b, int k) {
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    for (int j = 1; j <= a.length(); ++j) w[static_cast<std::size_t>(j - 1)] = a.part(j);
    for (int j = 1; j <= b.length(); ++j) w[static_cast<std::size_t>(k - j)] = -b.part(j);
    return w;
}

/// Pairs (alpha, beta) with l(alpha) <= p, l(beta) <= q, l(alpha) + l(beta) <= k,
/// parts at most bound.
inline std::vector<CaseAEntry> enumerate_case_A(int p, int q, int k, int bound) {
    check_case_A_params(p, q, k);
    std::vector<CaseAEntry> out;
    for (const auto& a : bounded_partitions(std::min(p, k), bound))
        for (const auto& b : bounded_partitions(std::min(q, k - a.length()), bound))
            out.push_back({a, b, case_A_weight_g(a, b, p, q, k), case_A_weight_K(a, b, k)});
    return out;
}

/// Omega_m over gl_n: E_1 + k, ..., E_m + k, E_{m+k+1}, ..., E_n.
inline LinearIdeal omega_case_A(int m, int k, int n) {
    if (k < 1 || k >= n || m < 0 || m > n - k)
        throw std::invalid_argument("omega_case_A needs 1 <= k < n and 0 <= m <= n - k");
    auto rs = RootSystem::build(RootKind::GL, n);
    std::vector<AffineFunctional> fs;
    for (int j = 1; j <= m; ++j) fs.push_back(coordinate_functional(*rs, j, k));
    for (int j = m + k + 1; j <= n; ++j) fs.push_back(coordinate_functional(*rs, j));
    return LinearIdeal::from_functionals(rs, fs);
}

/// Phi_p, read off the regime tables; nullopt means the closure is all of h*.
/// Throws std::logic_error if overlapping rows disagree or the tables disagree
/// with max(0, p - k) <= i <= min(p, n - k).
inline std::optional<std::vector<int>> phi_set(int p, int q, int k) {
    check_case_A_params(p, q, k);
    const int n = p + q;
    if (n <= k) return std::nullopt;
    auto range = [](int lo, int hi) {
        std::vector<int> r;
        for (int i = lo; i <= hi; ++i) r.push_back(i);
        return r;
    };
    std::vector<std::vector<int>> rows;
    if (n <= 2 * k) {
        if (p <= n - k) rows.push_back(range(0, p));
        if (n - k <= p && p <= k) rows.push_back(range(0, n - k));
        if (k <= p && p <= n) rows.push_back(range(p - k, n - k));
    }
    if (2 * k <= n) {
        if (p <= k) rows.push_back(range(0, p));
        if (k <= p && p <= n - k) rows.push_back(range(p - k, p));
        if (p >= n - k) rows.push_back(range(p - k, n - k));
    }
    if (rows.empty()) throw std::logic_error("phi_set: no regime row applies");
    for (const auto& r : rows)
        if (r != rows.front()) throw std::logic_error("phi_set: overlapping regime rows disagree");
    if (rows.front() != range(std::max(0, p - k), std::min(p, n - k)))
        throw std::logic_error("phi_set: regime table disagrees with the stratum range");
    return rows.front();
}

namespace detail {
struct CaseAStrata {
    std::vector<AffineSubspace> closure_max;
    std::map<int, AffineSubspace> closure_by_index;
    std::vector<AffineSubspace> strict;
    std::vector<RatVec> weights;
};

inline CaseAStrata case_A_strata(int p, int q, int k, int bound) {
    const int n = p + q;
    StrataHulls closure(static_cast<std::size_t>(n)), strict(static_cast<std::size_t>(n));
    CaseAStrata s;
    for (const auto& e : enumerate_case_A(p, q, k, bound)) {
        const int i = p - e.alpha.length();
        closure.add(i, e.weight_g);
        if (e.beta.length() == k + i - p) strict.add(i, e.weight_g);
        s.weights.push_back(e.weight_g);
    }
    s.closure_by_index = closure.hulls();
    s.closure_max = maximal_subspaces(closure.all());
    s.strict = strict.all();
    return s;
}
}  // namespace detail

/// Components V(Omega_m), m in Phi_p, checked against the affine hulls of the
/// enumerated weights grouped by l(alpha) = p - i.
inline ClosureReport closure_case_A(int p, int q, int k, int bound) {
    check_case_A_params(p, q, k);
    const int n = p + q;
    ClosureReport rep;
    rep.case_name = "A";
    rep.p = p, rep.q = q, rep.k = k, rep.n = n, rep.bound = bound;
    auto phi = phi_set(p, q, k);
    auto rs = RootSystem::build(RootKind::GL, n);
    if (!phi) {
        rep.full_space = true;
        rep.components.push_back(LinearIdeal::from_functionals(rs, {}));
    } else {
        rep.index_set = *phi;
        for (int m : *phi) rep.components.push_back(omega_case_A(m, k, n));
    }
    for (const auto& c : rep.components) rep.dims.push_back(c.dimension());

    auto comps = varieties_of(rep.components);
    auto s = detail::case_A_strata(p, q, k, bound);
    auto s_next = detail::case_A_strata(p, q, k, bound + 1);
    rep.weights_enumerated = s.weights.size();
    rep.closure_convention_agrees = same_union(s.closure_max, comps) && s.closure_max.size() == comps.size();
    rep.strict_convention_agrees = same_union(s.strict, comps) && s.strict.size() == comps.size();
    rep.stabilized = same_union(s.closure_max, s_next.closure_max) && s.closure_max.size() == s_next.closure_max.size();
    rep.weights_covered = std::all_of(s.weights.begin(), s.weights.end(), [&](const RatVec& w) {
        return std::any_of(comps.begin(), comps.end(), [&](const AffineSubspace& c) { return c.contains(w); });
    });
    rep.incomparable = pairwise_incomparable(rep.components);
    rep.index_match = true;
    if (!rep.full_space) {
        for (std::size_t j = 0; j < rep.index_set.size(); ++j) {
            auto it = s.closure_by_index.find(rep.index_set[j]);
            if (it == s.closure_by_index.end() || !(it->second == comps[j])) rep.index_match = false;
        }
    } else {
        rep.index_match = s.closure_max.size() == 1 && s.closure_max[0].dimension() == static_cast<std::size_t>(n);
    }
    rep.oracle_agreement = rep.closure_convention_agrees && rep.stabilized && rep.weights_covered &&
                           rep.incomparable && rep.index_match;
    return rep;
}

/// w_i(j) = j (j <= i), j + k (i < j <= n - k), j - n + k + i (j > n - k); 1-based.
inline std::vector<int> witness_permutation_case_A(int i, int n, int k) {
    if (k < 1 || k >= n || i < 0 || i > n - k)
        throw std::invalid_argument("witness_w_case_A needs 1 <= k < n and 0 <= i <= n - k");
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        if (j <= i)
            w[static_cast<std::size_t>(j)] = j;
        else if (j <= n - k)
            w[static_cast<std::size_t>(j)] = j + k;
        else
            w[static_cast<std::size_t>(j)] = j - n + k + i;
    }
    return w;
}

/// The linear map e_j -> e_{perm(j)} (perm 1-based, perm[0] unused).
inline WeylElement permutation_element(const std::vector<int>& perm) {
    const std::size_t n = perm.size() - 1;
    RatMatrix m(n, zero_vec(n));
    for (std::size_t j = 1; j <= n; ++j) m[static_cast<std::size_t>(perm[j] - 1)][j - 1] = 1;
    return WeylElement(std::move(m));
}

struct CaseAWitness {
    int i = 0, n = 0, k = 0;
    std::size_t element = 0;
    bool maps_to_omega_i = false;  // w_i.Omega_{n-k} = Omega_i
    bool in_w_lambda = false;      // w_i(B_lambda) in R+ for lambda of Omega_{n-k}
    bool omega0_strongly_dominant = false;
    bool omega_top_strongly_dominant = false;

    bool ok() const {
        return maps_to_omega_i && in_w_lambda && omega0_strongly_dominant && omega_top_strongly_dominant;
    }
};

/// Builds w_i in W(gl_n) = S_n and checks the statements attached to it.
inline CaseAWitness witness_w_case_A(const WeylGroup& g, int i, int n, int k) {
    if (g.rs().kind() != RootKind::GL || g.rs().param() != n)
        throw std::invalid_argument("witness_w_case_A needs the Weyl group of gl_n");
    CaseAWitness c;
    c.i = i, c.n = n, c.k = k;
    c.element = g.index_of(permutation_element(witness_permutation_case_A(i, n, k)));
    LinearIdeal top = omega_case_A(n - k, k, n);
    LinearIdeal target = omega_case_A(i, k, n);
    c.maps_to_omega_i = dot_act(g, c.element, top) == target;
    c.in_w_lambda = in_min_coset_reps(g, integral_root_data(top).b_lambda, c.element);
    c.omega0_strongly_dominant = is_strongly_dominant(omega_case_A(0, k, n));
    c.omega_top_strongly_dominant = is_strongly_dominant(top);
    return c;
}

// ---- Case B: (O_k, sp_2n) -----------------------------------------------------

struct CaseBEntry {
    Partition mu;
    RatVec weight_g;
};

/// (-k/2, ..., -k/2, -k/2 - mu_l, ..., -k/2 - mu_1), l = mu'_1.
inline RatVec case_B_weight_g(const Partition& mu, int n, int k) {
    const int l = mu.length();
    RatVec w;
    const Rational half_k(k, 2);
    for (int j = 1; j <= n - l; ++j) w.push_back(-half_k);
    for (int j = l; j >= 1; --j) w.push_back(-half_k - mu.part(j));
    return w;
}

/// Partitions with mu'_1 + mu'_2 <= k and mu'_1 <= n, parts at most bound.
inline std::vector<CaseBEntry> enumerate_case_B(int n, int k, int bound) {
    if (n < 1 || k < 1) throw std::invalid_argument("case B needs n >= 1 and k >= 1");
    std::vector<CaseBEntry> out;
    for (const auto& mu : bounded_partitions(std::min(n, k), bound)) {
        auto c = conjugate(mu);
        if (c.part(1) + c.part(2) > k) continue;
        out.push_back({mu, case_B_weight_g(mu, n, k)});
    }
    return out;
}

/// Omega_i for k = 2p, built from its variety
/// {a_1 = ... = a_r = -p, a_{r+1} = ... = a_s = -p - 1}, r = n-p-i, s = n-p+i.
/// For i >= 1 its generators are H_1, ..., H_{r-1}, H_r - 1, H_{r+1}, ...,
/// H_{s-1}, H_s + ... + H_n + p + 1.
inline LinearIdeal omega_case_B(int i, int n, int p) {
    if (p < 1 || p >= n || i < 0 || i > std::min(p, n - p))
        throw std::invalid_argument("omega_case_B needs 1 <= p < n and 0 <= i <= min(p, n - p)");
    auto rs = RootSystem::build(RootKind::C, n);
    const int r = n - p - i, s = n - p + i;
    std::vector<AffineFunctional> fs;
    if (i == 0) {
        for (int j = 1; j <= n - p - 1; ++j) fs.push_back(coroot_functional(*rs, j));
        AffineFunctional tail{zero_vec(rs->ambient_dim()), p};
        for (int j = n - p; j <= n; ++j) tail.h = tail.h + rs->simple_coroot(j - 1);
        fs.push_back(tail);
        return LinearIdeal::from_functionals(rs, fs);
    }
    for (int j = 1; j <= r - 1; ++j) fs.push_back(coroot_functional(*rs, j));
    if (r >= 1) fs.push_back(coroot_functional(*rs, r, -1));
    for (int j = r + 1; j <= s - 1; ++j) fs.push_back(coroot_functional(*rs, j));
    AffineFunctional tail{zero_vec(rs->ambient_dim()), p + 1};
    for (int j = s; j <= n; ++j) tail.h = tail.h + rs->simple_coroot(j - 1);
    fs.push_back(tail);
    return LinearIdeal::from_functionals(rs, fs);
}

/// The same generator list read with H_r + 1 in place of H_r - 1.
inline LinearIdeal omega_case_B_literal(int i, int n, int p) {
    if (i == 0) return omega_case_B(0, n, p);
    if (p < 1 || p >= n || i < 0 || i > std::min(p, n - p))
        throw std::invalid_argument("omega_case_B needs 1 <= p < n and 0 <= i <= min(p, n - p)");
    auto rs = RootSystem::build(RootKind::C, n);
    const int r = n - p - i, s = n - p + i;
    std::vector<AffineFunctional> fs;
    for (int j = 1; j <= r - 1; ++j) fs.push_back(coroot_functional(*rs, j));
    if (r >= 1) fs.push_back(coroot_functional(*rs, r, 1));
    for (int j = r + 1; j <= s - 1; ++j) fs.push_back(coroot_functional(*rs, j));
    AffineFunctional tail{zero_vec(rs->ambient_dim()), p + 1};
    for (int j = s; j <= n; ++j) tail.h = tail.h + rs->simple_coroot(j - 1);
    fs.push_back(tail);
    return LinearIdeal::from_functionals(rs, fs);
}

namespace detail {
inline StrataHulls case_B_strata(int n, int k, int bound, std::vector<RatVec>* weights = nullptr) {
    StrataHulls h(static_cast<std::size_t>(n));
    for (const auto& e : enumerate_case_B(n, k, bound)) {
        h.add(e.mu.length(), e.weight_g);
        if (weights) weights->push_back(e.weight_g);
    }
    return h;
}
}  // namespace detail

/// Components of the closure for any k, taken as the maximal affine hulls of
/// the strata mu'_1 = l. Meaningful for k < 2n; for k >= 2n it is all of h*.
inline std::vector<AffineSubspace> case_B_components_from_strata(int n, int k, int bound) {
    return maximal_subspaces(detail::case_B_strata(n, k, bound).all());
}

/// Components V(Omega_i), 0 <= i <= min(p, n-p), for k = 2p, checked against
/// the affine hulls of the weight strata mu'_1 = p + i.
inline ClosureReport closure_case_B(int n, int p, int bound) {
    if (n < 1 || p < 1) throw std::invalid_argument("closure_case_B needs n >= 1 and p >= 1");
    const int k = 2 * p;
    ClosureReport rep;
    rep.case_name = "B";
    rep.n = n, rep.p = p, rep.k = k, rep.bound = bound;
    auto rs = RootSystem::build(RootKind::C, n);
    if (k >= 2 * n) {
        rep.full_space = true;
        rep.components.push_back(LinearIdeal::from_functionals(rs, {}));
    } else {
        for (int i = 0; i <= std::min(p, n - p); ++i) {
            rep.index_set.push_back(i);
            rep.components.push_back(omega_case_B(i, n, p));
        }
    }
    for (const auto& c : rep.components) rep.dims.push_back(c.dimension());

    auto comps = varieties_of(rep.components);
    std::vector<RatVec> weights;
    auto strata = detail::case_B_strata(n, k, bound, &weights);
    auto maxi = maximal_subspaces(strata.all());
    auto maxi_next = maximal_subspaces(detail::case_B_strata(n, k, bound + 1).all());
    auto by_len = strata.hulls();
    rep.weights_enumerated = weights.size();
    rep.closure_convention_agrees = same_union(maxi, comps) && maxi.size() == comps.size();
    rep.stabilized = same_union(maxi, maxi_next) && maxi.size() == maxi_next.size();
    rep.weights_covered = std::all_of(weights.begin(), weights.end(), [&](const RatVec& w) {
        return std::any_of(comps.begin(), comps.end(), [&](const AffineSubspace& c) { return c.contains(w); });
    });
    rep.incomparable = pairwise_incomparable(rep.components);
    std::vector<AffineSubspace> strict;
    rep.index_match = true;
    if (!rep.full_space) {
        for (std::size_t j = 0; j < rep.index_set.size(); ++j) {
            auto it = by_len.find(p + rep.index_set[j]);
            if (it == by_len.end() || !(it->second == comps[j])) {
                rep.index_match = false;
                continue;
            }
            strict.push_back(it->second);
        }
    } else {
        rep.index_match = maxi.size() == 1 && maxi[0].dimension() == static_cast<std::size_t>(n);
        strict = maxi;
    }
    rep.strict_convention_agrees = same_union(strict, comps);
    rep.oracle_agreement = rep.closure_convention_agrees && rep.stabilized && rep.weights_covered &&
                           rep.incomparable && rep.index_match;
    return rep;
}

/// b_i = a_{i+p} (i <= n-p), a_{i+p-n} (i > n-p); as a map, e_{i+p} -> e_i.
inline WeylElement case_B_witness_element(int n, int p) {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) perm[static_cast<std::size_t>(j)] = j > p ? j - p : j - p + n;
    return permutation_element(perm);
}

struct CaseBFcr {
    int n = 0, p = 0;
    std::size_t element = 0;
    LinearIdeal omega;  // (H_{p+1}, ..., H_n)
    bool maps_to_omega0 = false;
    bool in_w_lambda = false;
    bool omega_strongly_dominant = false;
    FcrVerdict verdict;

    bool ok() const {
        return maps_to_omega0 && in_w_lambda && omega_strongly_dominant && verdict.status == FcrStatus::FCR;
    }
};

inline CaseBFcr case_B_fcr(const WeylGroup& g, int n, int p) {
    if (p < 1 || p >= n) throw std::invalid_argument("case_B_fcr needs 1 <= p < n");
    if (g.rs().kind() != RootKind::C || g.rs().param() != n)
        throw std::invalid_argument("case_B_fcr needs the Weyl group of sp_2n");
    auto rs = g.rs_ptr();
    std::vector<AffineFunctional> fs;
    for (int j = p + 1; j <= n; ++j) fs.push_back(coroot_functional(*rs, j));
    CaseBFcr c{n, p, 0, LinearIdeal::from_functionals(rs, fs)};
    c.element = g.index_of(case_B_witness_element(n, p));
    LinearIdeal omega0 = omega_case_B(0, n, p);
    c.maps_to_omega0 = dot_act(g, c.element, c.omega) == omega0;
    c.in_w_lambda = in_min_coset_reps(g, integral_root_data(c.omega).b_lambda, c.element);
    c.omega_strongly_dominant = is_strongly_dominant(c.omega);
    c.verdict = fcr_decide(g, omega0);
    return c;
}

/// A root whose coroot pairing is constant and non-integral on w^{-1}.X.
struct EmptinessCertificate {
    std::size_t component = 0;
    std::size_t element = 0;
    std::size_t root = 0;
    Rational value;
};

struct OddKReport {
    int n = 0, k = 0, bound = 0;
    std::vector<AffineSubspace> components;
    std::vector<EmptinessCertificate> certificates;
    bool certified = false;      // every (component, w) pair has a certificate
    bool lambda_empty = false;   // Lambda(Omega) within the box is empty for every component
};

/// For odd k < 2n: no dominant integral weight has a Weyl translate in the
/// closure of the weights, certified root by root.
inline OddKReport odd_k_case_B(const WeylGroup& g, int n, int k, int bound) {
    if (k % 2 == 0) throw std::invalid_argument("odd_k_case_B needs odd k");
    if (k >= 2 * n) throw std::invalid_argument("odd_k_case_B needs k < 2n (otherwise the closure is all of h*)");
    if (g.rs().kind() != RootKind::C || g.rs().param() != n)
        throw std::invalid_argument("odd_k_case_B needs the Weyl group of sp_2n");
    const auto& rs = g.rs();
    OddKReport rep;
    rep.n = n, rep.k = k, rep.bound = bound;
    rep.components = case_B_components_from_strata(n, k, bound);
    rep.certified = true;
    rep.lambda_empty = true;
    for (std::size_t c = 0; c < rep.components.size(); ++c) {
        for (std::size_t w = 0; w < g.size(); ++w) {
            AffineSubspace pulled = dot_act_variety(g, g.inverse(w), rep.components[c]);
            std::optional<EmptinessCertificate> cert;
            for (std::size_t a = 0; a < rs.num_positive() && !cert; ++a) {
                auto r = pulled.restrict({rs.coroot_of(a), 0});
                if (r.is_constant() && !is_integer(r.constant)) cert = EmptinessCertificate{c, w, a, r.constant};
            }
            if (cert)
                rep.certificates.push_back(*cert);
            else
                rep.certified = false;
        }
        auto ideal = LinearIdeal::from_variety(g.rs_ptr(), rep.components[c]);
        if (!lambda_set(g, ideal, static_cast<std::size_t>(bound)).empty()) rep.lambda_empty = false;
    }
    return rep;
}

// ---- kernel and Case C ----------------------------------------------------------

struct KernelReport {
    std::string case_name;
    int n = 0, k = 0, p = 0, q = 0;
    int rank_g = 0, rank_K = 0;
    bool kernel_zero = false;  // rank g <= rank K
    std::vector<std::size_t> dims;
    std::optional<std::size_t> kernel_component;  // index of the component carrying ker
    bool unique_max_dim = false;
};

/// Case A: (p, q, k); Case B: (n, k); Case C: (n, k).
inline KernelReport kernel_report(const std::string& which, int n, int k, int p = 0, int q = 0, int bound = 3) {
    KernelReport r;
    r.case_name = which;
    r.k = k;
    if (which == "A") {
        check_case_A_params(p, q, k);
        r.p = p, r.q = q, r.n = p + q;
        r.rank_g = r.n, r.rank_K = k;
        r.dims = closure_case_A(p, q, k, bound).dims;
    } else if (which == "B") {
        if (n < 1 || k < 1) throw std::invalid_argument("case B needs n >= 1 and k >= 1");
        r.n = n;
        r.rank_g = n, r.rank_K = k / 2;
        if (k % 2 == 0) {
            r.p = k / 2;
            auto rep = closure_case_B(n, k / 2, bound);
            r.dims = rep.dims;
            if (!rep.full_space) {
                // Omega_0 has dimension p and every other component p - i < p.
                std::size_t best = 0, count = 0;
                for (std::size_t i = 0; i < r.dims.size(); ++i)
                    if (r.dims[i] > r.dims[best]) best = i;
                for (auto d : r.dims)
                    if (d == r.dims[best]) ++count;
                r.kernel_component = best;
                r.unique_max_dim = count == 1;
            }
        } else if (k < 2 * n) {
            for (const auto& c : case_B_components_from_strata(n, k, bound)) r.dims.push_back(c.dimension());
        } else {
            r.dims = {static_cast<std::size_t>(n)};
        }
    } else if (which == "C") {
        if (n < 1 || k < 1) throw std::invalid_argument("case C needs n >= 1 and k >= 1");
        r.n = n;
        r.rank_g = n, r.rank_K = k;
    } else {
        throw std::invalid_argument("unknown dual pair case '" + which + "'");
    }
    r.kernel_zero = r.rank_g <= r.rank_K;
    return r;
}

struct CaseCReport {
    int n = 0, k = 0;
    bool irreducible = true;  // cited, not computed
    bool full = false;        // closure is all of h* iff n <= k
    bool fcr = true;          // cited, not computed
};

inline CaseCReport case_C_report(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("case C needs n >= 1 and k >= 1");
    return {n, k, true, n <= k, true};
}

}  // namespace weylfcr
