#pragma once

// FCR classification of U(g)/I_Omega for linear prime ideals Omega.

#include "weylfcr/ideals.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfcr {

enum class FcrStatus { FiniteDimensional, FCR, NotFCR, UnknownReductive };

inline std::string status_name(FcrStatus s) {
    switch (s) {
        case FcrStatus::FiniteDimensional: return "FiniteDimensional";
        case FcrStatus::FCR: return "FCR";
        case FcrStatus::NotFCR: return "NotFCR";
        case FcrStatus::UnknownReductive: return "UnknownReductive";
    }
    return "?";
}

struct FcrVerdict {
    FcrStatus status = FcrStatus::NotFCR;
    std::optional<std::size_t> witness;        // w with input = w.base
    std::optional<LinearIdeal> base_ideal;     // strongly dominant
    std::vector<std::size_t> b_lambda;         // of base_ideal
    std::size_t witnesses_checked = 0;
};

/// Exists w in W with w.mu in V(Omega). mu must be dominant integral.
inline bool annihilator_contains(const WeylGroup& g, const LinearIdeal& omega, const RatVec& mu) {
    const auto& rs = g.rs();
    if (mu.size() != rs.ambient_dim() || !rs.is_dominant_integral(mu) || !rs.weight_space().contains(mu))
        throw std::invalid_argument("weight " + format_vec(mu) + " is not dominant integral");
    for (std::size_t w = 0; w < g.size(); ++w)
        if (omega.variety().contains(dot_apply(rs, g.element(w), mu))) return true;
    return false;
}

/// A dominant weight of Lambda(Omega). For gl_n the center coordinate is not
/// bounded by the box: `weight` is the solution with the given simple pairings
/// and, when center_free is set, every shift along (1, ..., 1) also belongs.
struct LambdaEntry {
    RatVec weight;
    bool center_free = false;

    bool operator<(const LambdaEntry& o) const {
        if (weight != o.weight) return RatVecLess{}(weight, o.weight);
        return center_free < o.center_free;
    }
    bool operator==(const LambdaEntry& o) const = default;
};

/// Lambda(Omega, w) restricted to the box 0 <= (mu, a_i^vee) <= bound.
inline std::vector<LambdaEntry> lambda_set_for(const WeylGroup& g, const LinearIdeal& omega, std::size_t w,
                                               std::size_t bound) {
    const auto& rs = g.rs();
    const std::size_t r = rs.semisimple_rank();
    const auto& fund = rs.fundamental_weights();
    auto center = rs.center_direction();
    const auto& el = g.element(w);
    std::vector<LambdaEntry> out;
    std::vector<std::size_t> m(r, 0);
    while (true) {
        RatVec mu = zero_vec(rs.ambient_dim());
        for (std::size_t i = 0; i < r; ++i) axpy(mu, Rational(m[i]), fund[i]);
        RatVec image = dot_apply(rs, el, mu);
        if (!center) {
            if (omega.variety().contains(image)) out.push_back({mu, false});
        } else {
            // w fixes the center, so w.(mu + c z) = w.mu + c z; solve for c.
            std::vector<AffineFunctional> pulled;
            for (const auto& f : omega.functionals()) pulled.push_back({RatVec{dot(f.h, *center)}, f(image)});
            auto sol = solve_affine(pulled, 1);
            if (sol) {
                if (sol->dimension() == 1)
                    out.push_back({mu, true});
                else
                    out.push_back({mu + sol->base_point()[0] * *center, false});
            }
        }
        std::size_t i = 0;
        while (i < r && m[i] == bound) m[i++] = 0;
        if (i == r) break;
        ++m[i];
    }
    return out;
}

/// Lambda(Omega) within the box, as the union of Lambda(Omega, w) over W.
inline std::vector<LambdaEntry> lambda_set(const WeylGroup& g, const LinearIdeal& omega, std::size_t bound) {
    std::set<LambdaEntry> all;
    for (std::size_t w = 0; w < g.size(); ++w)
        for (auto& e : lambda_set_for(g, omega, w, bound)) all.insert(std::move(e));
    return {all.begin(), all.end()};
}

/// w(B_lambda) subset of R+, for a strongly dominant Omega.
inline bool equivalence_bc(const WeylGroup& g, const LinearIdeal& omega, std::size_t w) {
    if (!is_strongly_dominant(omega)) throw std::invalid_argument("equivalence_bc: ideal is not strongly dominant");
    return in_min_coset_reps(g, integral_root_data(omega).b_lambda, w);
}

/// Searches all of W for strongly dominant bases w^{-1}.Omega' and classifies.
/// Throws DivergenceError if two bases disagree on W^lambda membership.
inline FcrVerdict fcr_decide(const WeylGroup& g, const LinearIdeal& target) {
    const auto& rs = g.rs();
    FcrVerdict v;
    std::optional<bool> predicate;
    for (std::size_t w = 0; w < g.size(); ++w) {
        LinearIdeal base = dot_act(g, g.inverse(w), target);
        if (!is_strongly_dominant(base)) continue;
        ++v.witnesses_checked;
        auto data = integral_root_data(base);
        bool p = in_min_coset_reps(g, data.b_lambda, w);
        if (!predicate) {
            predicate = p;
            v.witness = w;
            v.base_ideal = base;
            v.b_lambda = data.b_lambda;
        } else if (*predicate != p) {
            throw DivergenceError("strongly dominant bases disagree on W^lambda membership",
                                  "witnesses '" + g.word_string(*v.witness) + "' and '" + g.word_string(w) + "'");
        }
    }
    if (target.dimension() == 0 && rs.is_dominant_integral(target.variety().base_point())) {
        v.status = FcrStatus::FiniteDimensional;
        v.witness.reset();
        v.base_ideal.reset();
        v.b_lambda.clear();
        return v;
    }
    if (!predicate) {
        v.status = rs.is_semisimple() ? FcrStatus::NotFCR : FcrStatus::UnknownReductive;
        return v;
    }
    if (*predicate) {
        v.status = FcrStatus::FCR;
    } else if (rs.is_semisimple()) {
        v.status = FcrStatus::NotFCR;
    } else {
        v.status = FcrStatus::UnknownReductive;
        v.witness.reset();
    }
    return v;
}

}  // namespace weylfcr
