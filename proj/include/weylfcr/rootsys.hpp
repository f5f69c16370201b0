#pragma once

// Classical root systems realized in epsilon coordinates.
//
// Conventions: the form is the standard dot product of Q^n, the coroot of a
// root a is 2a/(a,a), and simple roots are e_i - e_{i+1} followed (for B, C,
// D) by e_n, 2e_n and e_{n-1} + e_n respectively. Roots are indexed with the
// positive roots first; index i + N is the negative of index i.

#include "weylfcr/exactlin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfcr {

enum class RootKind { GL, A, B, C, D };

inline std::string kind_name(RootKind k) {
    switch (k) {
        case RootKind::GL: return "GL";
        case RootKind::A: return "A";
        case RootKind::B: return "B";
        case RootKind::C: return "C";
        case RootKind::D: return "D";
    }
    return "?";
}

inline RootKind parse_kind(const std::string& s) {
    if (s == "GL" || s == "gl") return RootKind::GL;
    if (s == "A") return RootKind::A;
    if (s == "B") return RootKind::B;
    if (s == "C") return RootKind::C;
    if (s == "D") return RootKind::D;
    throw std::invalid_argument("unsupported root system kind '" + s + "'");
}

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
public:
    /// GL(n) is gl_n in Q^n; A(r) is sl_{r+1} in Q^{r+1}; B, C, D take the rank.
    static RootSystemPtr build(RootKind kind, int n) {
        if (n < 1) throw std::invalid_argument("root system rank must be positive");
        if (kind == RootKind::D && n < 2) throw std::invalid_argument("D(n) requires n >= 2");
        if (n > 64) throw std::invalid_argument("root system rank too large");
        return RootSystemPtr(new RootSystem(kind, n));
    }

    RootKind kind() const { return kind_; }
    int param() const { return param_; }
    std::size_t ambient_dim() const { return dim_; }
    bool is_semisimple() const { return kind_ != RootKind::GL; }
    std::size_t semisimple_rank() const { return simple_.size(); }

    std::size_t num_positive() const { return npos_; }
    std::size_t num_roots() const { return roots_.size(); }
    const RatVec& root(std::size_t i) const { return roots_.at(i); }
    const RatVec& coroot_of(std::size_t i) const { return coroots_.at(i); }
    std::size_t negate(std::size_t i) const { return i < npos_ ? i + npos_ : i - npos_; }
    bool is_positive(std::size_t i) const { return i < npos_; }

    const std::vector<std::size_t>& simple_indices() const { return simple_; }
    const RatVec& simple_root(std::size_t i) const { return roots_[simple_.at(i)]; }
    const RatVec& simple_coroot(std::size_t i) const { return coroots_[simple_.at(i)]; }
    const RatVec& rho() const { return rho_; }
    const RatMatrix& fundamental_weights() const { return fund_; }

    std::optional<std::size_t> index_of(const RatVec& v) const {
        auto it = lookup_.find(v);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_root(const RatVec& v) const {
        auto i = index_of(v);
        if (!i) throw std::invalid_argument("not a root: " + format_vec(v));
        return *i;
    }

    /// a^vee = 2a/(a,a).
    RatVec coroot(const RatVec& a) const { return coroots_[require_root(a)]; }

    Rational form_pairing(const RatVec& mu, const RatVec& nu) const { return dot(mu, nu); }

    /// (mu, a_i^vee) for every simple root.
    RatVec simple_pairings(const RatVec& mu) const {
        RatVec out;
        for (auto i : simple_) out.push_back(dot(mu, coroots_[i]));
        return out;
    }

    /// Every simple-coroot pairing is a nonnegative integer.
    bool is_dominant_integral(const RatVec& mu) const {
        for (auto i : simple_) {
            Rational v = dot(mu, coroots_[i]);
            if (!is_integer(v) || v < 0) return false;
        }
        return true;
    }

    /// mu is an integer combination of roots.
    bool root_lattice_contains(const RatVec& mu) const {
        RatMatrix cols;
        for (auto i : simple_) cols.push_back(roots_[i]);
        if (cols.empty()) return is_zero(mu);
        auto c = solve_particular(transpose(cols), mu, cols.size());
        if (!c) return false;
        if (mat_vec(transpose(cols), *c) != mu) return false;
        for (const auto& x : *c)
            if (!is_integer(x)) return false;
        return true;
    }

    /// Constraints cutting h* out of the ambient space: {sum mu_i = 0} for A.
    std::vector<AffineFunctional> ambient_constraints() const {
        if (kind_ != RootKind::A) return {};
        return {AffineFunctional{RatVec(dim_, Rational(1)), Rational(0)}};
    }

    /// The ambient weight space h*, as an affine subspace of Q^n.
    AffineSubspace weight_space() const { return *solve_affine(ambient_constraints(), dim_); }

    /// Center direction (1, ..., 1) of gl_n, absent otherwise.
    std::optional<RatVec> center_direction() const {
        if (kind_ != RootKind::GL) return std::nullopt;
        return RatVec(dim_, Rational(1));
    }

    /// |W| computed from the type, without enumeration.
    Integer weyl_order() const {
        Integer f = 1;
        const int n = kind_ == RootKind::A ? param_ + 1 : param_;
        for (int i = 2; i <= n; ++i) f *= i;
        switch (kind_) {
            case RootKind::GL:
            case RootKind::A: return f;
            case RootKind::B:
            case RootKind::C: return f * (Integer(1) << n);
            case RootKind::D: return f * (Integer(1) << (n - 1));
        }
        return f;
    }

    std::string name() const { return kind_name(kind_) + "(" + std::to_string(param_) + ")"; }

private:
    RootSystem(RootKind kind, int n) : kind_(kind), param_(n) {
        dim_ = kind == RootKind::A ? static_cast<std::size_t>(n) + 1 : static_cast<std::size_t>(n);
        const std::size_t m = dim_;
        auto e = [m](std::size_t i) { return unit_vec(m, i); };
        std::vector<RatVec> pos;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) pos.push_back(e(i) - e(j));
        if (kind == RootKind::B || kind == RootKind::C || kind == RootKind::D)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) pos.push_back(e(i) + e(j));
        if (kind == RootKind::B)
            for (std::size_t i = 0; i < m; ++i) pos.push_back(e(i));
        if (kind == RootKind::C)
            for (std::size_t i = 0; i < m; ++i) pos.push_back(Rational(2) * e(i));

        npos_ = pos.size();
        roots_ = pos;
        for (const auto& a : pos) roots_.push_back(-a);
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            lookup_.emplace(roots_[i], i);
            coroots_.push_back((Rational(2) / dot(roots_[i], roots_[i])) * roots_[i]);
        }

        std::vector<RatVec> simple;
        for (std::size_t i = 0; i + 1 < m; ++i) simple.push_back(e(i) - e(i + 1));
        if (kind == RootKind::B) simple.push_back(e(m - 1));
        if (kind == RootKind::C) simple.push_back(Rational(2) * e(m - 1));
        if (kind == RootKind::D) simple.push_back(e(m - 2) + e(m - 1));
        for (const auto& s : simple) simple_.push_back(lookup_.at(s));

        rho_ = zero_vec(m);
        for (const auto& a : pos) rho_ = rho_ + a;
        rho_ = Rational(1, 2) * rho_;

        compute_fundamental_weights();
    }

    void compute_fundamental_weights() {
        const std::size_t r = simple_.size();
        if (kind_ == RootKind::GL) {
            for (std::size_t i = 0; i < r; ++i) {
                RatVec w = zero_vec(dim_);
                for (std::size_t j = 0; j <= i; ++j) w[j] = 1;
                fund_.push_back(std::move(w));
            }
            return;
        }
        // w_i = sum_k c_k a_k with (w_i, a_j^vee) = delta_ij.
        RatMatrix cartan(r, zero_vec(r));  // cartan[j][k] = (a_k, a_j^vee)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) cartan[j][k] = dot(roots_[simple_[k]], coroots_[simple_[j]]);
        for (std::size_t i = 0; i < r; ++i) {
            auto c = solve_particular(cartan, unit_vec(r, i), r);
            RatVec w = zero_vec(dim_);
            for (std::size_t k = 0; k < r; ++k) axpy(w, (*c)[k], roots_[simple_[k]]);
            fund_.push_back(std::move(w));
        }
    }

    RootKind kind_;
    int param_;
    std::size_t dim_ = 0;
    std::size_t npos_ = 0;
    std::vector<RatVec> roots_;
    std::vector<RatVec> coroots_;
    std::map<RatVec, std::size_t, RatVecLess> lookup_;
    std::vector<std::size_t> simple_;
    RatVec rho_;
    RatMatrix fund_;
};

/// Elements of a positive subset that are not a sum of two of its elements.
inline std::vector<std::size_t> indecomposable_simples(const RootSystem& rs, const std::vector<std::size_t>& positive) {
    std::set<RatVec, RatVecLess> sums;
    for (std::size_t i = 0; i < positive.size(); ++i)
        for (std::size_t j = i + 1; j < positive.size(); ++j)
            sums.insert(rs.root(positive[i]) + rs.root(positive[j]));
    std::vector<std::size_t> out;
    for (auto i : positive)
        if (!sums.count(rs.root(i))) out.push_back(i);
    return out;
}

/// A root subsystem R1 together with its positive part, simple roots and rho'.
struct Subsystem {
    RootSystemPtr parent;
    std::vector<std::size_t> roots;     // sorted root indices of R1
    std::vector<std::size_t> positive;  // R1 intersect R+
    std::vector<std::size_t> simple;    // B1
    RatVec rho_prime;

    bool contains(std::size_t i) const { return std::binary_search(roots.begin(), roots.end(), i); }
};

/// Reflection s_a applied to mu: mu - (mu, a^vee) a.
inline RatVec reflect(const RootSystem& rs, std::size_t a, const RatVec& mu) {
    RatVec out = mu;
    axpy(out, -dot(mu, rs.coroot_of(a)), rs.root(a));
    return out;
}

/// Closure of a set of roots under the reflections it generates.
inline Subsystem subsystem(RootSystemPtr rs, const std::vector<std::size_t>& generators) {
    std::set<std::size_t> closed;
    for (auto g : generators) {
        if (g >= rs->num_roots()) throw std::invalid_argument("subsystem: generator is not a root index");
        closed.insert(g);
        closed.insert(rs->negate(g));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(closed.begin(), closed.end());
        for (auto a : cur)
            for (auto b : cur) {
                auto img = rs->require_root(reflect(*rs, a, rs->root(b)));
                if (closed.insert(img).second) grew = true;
            }
    }
    Subsystem s;
    s.parent = rs;
    s.roots.assign(closed.begin(), closed.end());
    for (auto i : s.roots)
        if (rs->is_positive(i)) s.positive.push_back(i);
    s.simple = indecomposable_simples(*rs, s.positive);
    s.rho_prime = zero_vec(rs->ambient_dim());
    for (auto i : s.positive) s.rho_prime = s.rho_prime + rs->root(i);
    s.rho_prime = Rational(1, 2) * s.rho_prime;
    return s;
}

inline Subsystem subsystem_of_vectors(RootSystemPtr rs, const std::vector<RatVec>& generators) {
    std::vector<std::size_t> idx;
    for (const auto& g : generators) idx.push_back(rs->require_root(g));
    return subsystem(std::move(rs), idx);
}

/// Subsystem spanned by the simple roots whose positions (0-based) are listed.
inline Subsystem parabolic_subsystem(RootSystemPtr rs, const std::vector<std::size_t>& simple_positions) {
    std::vector<std::size_t> idx;
    for (auto p : simple_positions) idx.push_back(rs->simple_indices().at(p));
    return subsystem(std::move(rs), idx);
}

}  // namespace weylfcr
