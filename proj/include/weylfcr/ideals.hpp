#pragma once

// Prime ideals of S(h) generated in degree <= 1, represented by their zero
// sets V(Omega), an affine subspace of h*.

#include "weylfcr/weyl.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfcr {

/// Thrown when the generators have no common zero (the ideal is not proper).
struct InconsistentIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// H_i + c, with H_i the i-th simple coroot (1-based).
inline AffineFunctional coroot_functional(const RootSystem& rs, std::size_t i, const Rational& c = 0) {
    if (i < 1 || i > rs.semisimple_rank()) throw std::invalid_argument("H index " + std::to_string(i) + " out of range");
    return {rs.simple_coroot(i - 1), c};
}

/// E_j + c, the j-th coordinate functional (1-based).
inline AffineFunctional coordinate_functional(const RootSystem& rs, std::size_t j, const Rational& c = 0) {
    if (j < 1 || j > rs.ambient_dim()) throw std::invalid_argument("E index " + std::to_string(j) + " out of range");
    return {unit_vec(rs.ambient_dim(), j - 1), c};
}

class LinearIdeal {
public:
    /// For type A the trace constraint sum mu_i = 0 is always imposed.
    static LinearIdeal from_functionals(RootSystemPtr rs, const std::vector<AffineFunctional>& fs) {
        auto all = rs->ambient_constraints();
        for (const auto& f : fs) {
            if (f.h.size() != rs->ambient_dim()) throw std::invalid_argument("functional has wrong dimension");
            all.push_back(f);
        }
        auto v = solve_affine(all, rs->ambient_dim());
        if (!v) throw InconsistentIdeal("generators have no common zero");
        return LinearIdeal(std::move(rs), std::move(*v));
    }

    static LinearIdeal from_variety(RootSystemPtr rs, const AffineSubspace& v) {
        if (v.ambient_dim() != rs->ambient_dim()) throw std::invalid_argument("variety has wrong dimension");
        if (!rs->weight_space().contains(v)) throw std::invalid_argument("variety leaves the weight space");
        return LinearIdeal(std::move(rs), v);
    }

    /// The maximal ideal M_mu of a single weight.
    static LinearIdeal point(RootSystemPtr rs, const RatVec& mu) {
        return from_variety(std::move(rs), AffineSubspace::point(mu));
    }

    const RootSystem& rs() const { return *rs_; }
    RootSystemPtr rs_ptr() const { return rs_; }
    const AffineSubspace& variety() const { return variety_; }
    std::size_t dimension() const { return variety_.dimension(); }

    /// Reduced echelon basis of all affine functionals vanishing on V(Omega).
    std::vector<AffineFunctional> functionals() const { return variety_.vanishing_functionals(); }

    bool operator==(const LinearIdeal& o) const {
        return rs_->kind() == o.rs_->kind() && rs_->param() == o.rs_->param() && variety_ == o.variety_;
    }

private:
    LinearIdeal(RootSystemPtr rs, AffineSubspace v) : rs_(std::move(rs)), variety_(std::move(v)) {}

    RootSystemPtr rs_;
    AffineSubspace variety_;
};

/// w.(h + c) = wh + c - h(sum of Q(w)).
inline AffineFunctional dot_act_functional(const WeylGroup& g, std::size_t w, const AffineFunctional& f) {
    RatVec q = root_sum(g.rs(), g.inversion_set(w));
    return {g.element(w).apply(f.h), f.c - dot(f.h, q)};
}

/// w.Omega, computed generator by generator.
inline LinearIdeal dot_act(const WeylGroup& g, std::size_t w, const LinearIdeal& omega) {
    std::vector<AffineFunctional> fs;
    for (const auto& f : omega.functionals()) fs.push_back(dot_act_functional(g, w, f));
    return LinearIdeal::from_functionals(g.rs_ptr(), fs);
}

/// w.V(Omega) = {w(mu + rho) - rho}, computed on points.
inline AffineSubspace dot_act_variety(const WeylGroup& g, std::size_t w, const AffineSubspace& v) {
    const auto& el = g.element(w);
    RatMatrix dirs;
    for (const auto& d : v.direction_basis()) dirs.push_back(el.apply(d));
    return AffineSubspace(dot_apply(g.rs(), el, v.base_point()), std::move(dirs));
}

struct IntegralRootData {
    std::vector<std::size_t> r_lambda;           // sorted root indices
    std::vector<std::size_t> b_lambda;           // simple roots of R_lambda+
    std::map<std::size_t, Integer> constants;    // a -> n_a

    bool contains(std::size_t a) const { return constants.count(a) > 0; }
};

/// R_lambda: roots whose coroot pairing is a constant integer on V(Omega).
inline IntegralRootData integral_root_data(const LinearIdeal& omega) {
    const auto& rs = omega.rs();
    IntegralRootData d;
    std::vector<std::size_t> pos;
    for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        auto r = omega.variety().restrict({rs.coroot_of(a), 0});
        if (!r.is_constant() || !is_integer(r.constant)) continue;
        d.r_lambda.push_back(a);
        d.constants.emplace(a, numerator_of(r.constant));
        if (rs.is_positive(a)) pos.push_back(a);
    }
    d.b_lambda = indecomposable_simples(rs, pos);
    return d;
}

/// Density of V(Omega) intersect P+ in V(Omega), decided by: constant simple
/// pairings in N, a common integral point for the others, and a
/// full-dimensional cone of directions along which they all increase.
inline bool is_strongly_dominant(const LinearIdeal& omega) {
    const auto& rs = omega.rs();
    const auto& v = omega.variety();
    std::vector<AffineFunctional> moving;
    std::vector<RatVec> linear;
    for (std::size_t i = 0; i < rs.semisimple_rank(); ++i) {
        AffineFunctional f{rs.simple_coroot(i), 0};
        auto r = v.restrict(f);
        if (r.is_constant()) {
            if (!is_integer(r.constant) || r.constant < 0) return false;
            continue;
        }
        moving.push_back(f);
        linear.push_back(r.linear);
    }
    if (moving.empty()) return true;
    if (!integral_points(v, moving)) return false;
    return cone_is_fulldim(v.dimension(), linear);
}

/// Rho-shifted value n_a + (rho, a^vee) of a root in R_lambda.
inline Rational shifted_value(const RootSystem& rs, const IntegralRootData& d, std::size_t a) {
    return Rational(d.constants.at(a)) + dot(rs.rho(), rs.coroot_of(a));
}

/// Every a in R_lambda with positive shifted value is a positive root.
inline bool is_dominant(const LinearIdeal& omega) {
    const auto& rs = omega.rs();
    auto d = integral_root_data(omega);
    for (auto a : d.r_lambda)
        if (shifted_value(rs, d, a) > 0 && !rs.is_positive(a)) return false;
    return true;
}

enum class LambdaClass { Strict, Weak, Neither };

inline std::string lambda_class_name(LambdaClass c) {
    switch (c) {
        case LambdaClass::Strict: return "strict";
        case LambdaClass::Weak: return "weak";
        case LambdaClass::Neither: return "neither";
    }
    return "?";
}

/// Strict if every shifted value over B_lambda is > 0, weak if >= 0.
inline LambdaClass lambda_plus_class(const LinearIdeal& omega) {
    const auto& rs = omega.rs();
    auto d = integral_root_data(omega);
    bool strict = true;
    for (auto a : d.b_lambda) {
        Rational v = shifted_value(rs, d, a);
        if (v < 0) return LambdaClass::Neither;
        if (v == 0) strict = false;
    }
    return strict ? LambdaClass::Strict : LambdaClass::Weak;
}

}  // namespace weylfcr
