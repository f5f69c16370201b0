#pragma once

// Exhaustive and seeded verification suites. Each statement carries a short
// name and the formula it checks; failures are counted, and the first
// counterexample is kept.

#include "weylfcr/corpus.hpp"
#include "weylfcr/io.hpp"
#include "weylfcr/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weylfcr {

struct StatementResult {
    std::string name;
    std::string formula;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::optional<Json> counterexample;

    void record(bool ok, const std::function<Json()>& describe) {
        ++checked;
        if (ok) return;
        ++failures;
        if (!counterexample) counterexample = describe();
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> systems;
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::deque<StatementResult> statements;  // references stay valid as it grows

    StatementResult& statement(const std::string& name, const std::string& formula) {
        for (auto& s : statements)
            if (s.name == name) return s;
        statements.push_back({name, formula});
        return statements.back();
    }

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& s : statements) f += s.failures;
        return f;
    }

    void absorb(const SuiteReport& o) {
        checked += o.checked;
        for (const auto& s : o.systems)
            if (std::find(systems.begin(), systems.end(), s) == systems.end()) systems.push_back(s);
        for (const auto& s : o.statements) {
            auto& t = statement(o.suite + ": " + s.name, s.formula);
            t.checked += s.checked;
            t.failures += s.failures;
            t.skipped += s.skipped;
            if (!t.counterexample && s.counterexample) t.counterexample = s.counterexample;
        }
    }

    Json to_json() const {
        Json st = Json::array();
        for (const auto& s : statements) {
            Json j{{"name", s.name}, {"formula", s.formula}, {"checked", s.checked}, {"failures", s.failures}};
            if (s.skipped) j["skipped"] = s.skipped;
            if (s.counterexample) j["counterexample"] = *s.counterexample;
            st.push_back(j);
        }
        return Json{{"suite", suite},     {"systems", systems},       {"seed", seed},
                    {"checked", checked}, {"failures", failures()}, {"statements", st}};
    }
};

struct VerifyOptions {
    std::optional<RootKind> kind;
    std::optional<int> rank;
    std::uint64_t seed = 0;
    std::size_t corpus_size = 200;        // ideals per system for the theory suites
    std::size_t fuzz_size = 500;          // ideals per system for ideals-fuzz
    std::size_t duality_triples = 1000;   // per system
    int oracle_bound = 6;
    std::size_t lambda_bound = 2;
    std::size_t sampled_elements = 4;     // per ideal, for the costlier sweeps
};

namespace detail {

/// Classical systems of rank <= max_rank, optionally restricted by kind and rank.
inline std::vector<RootSystemPtr> select_systems(const VerifyOptions& o, int max_rank) {
    if (o.kind && *o.kind == RootKind::GL) throw std::invalid_argument("verification suites need a semisimple type");
    std::vector<RootSystemPtr> out;
    if (o.kind && o.rank) {
        out.push_back(RootSystem::build(*o.kind, *o.rank));
        return out;
    }
    for (RootKind k : {RootKind::A, RootKind::B, RootKind::C, RootKind::D}) {
        if (o.kind && *o.kind != k) continue;
        for (int r = k == RootKind::D ? 2 : 1; r <= max_rank; ++r) {
            if (o.rank && *o.rank != r) continue;
            out.push_back(RootSystem::build(k, r));
        }
    }
    return out;
}

/// Default fuzz systems unless a kind or rank is given.
inline std::vector<RootSystemPtr> select_fuzz_systems(const VerifyOptions& o) {
    if (!o.kind && !o.rank) return fuzz_systems();
    return select_systems(o, 3);
}

inline std::vector<std::size_t> as_set(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline Json element_json(const WeylGroup& g, std::size_t w) { return Json(g.word_string(w)); }

inline RatVec random_weight(const RootSystem& rs, SeededRng& rng) {
    RatVec mu = zero_vec(rs.ambient_dim());
    for (const auto& w : rs.fundamental_weights()) axpy(mu, rng.small_rational(4, 3), w);
    return mu;
}

inline std::vector<std::size_t> sample_elements(const WeylGroup& g, SeededRng& rng, std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<std::size_t>(rng.below(g.size())));
    return out;
}

}  // namespace detail

// ---- Weyl group combinatorics ---------------------------------------------------

/// Identities on a single group; `checked` grows by |W|.
inline void verify_weyl_identities(const WeylGroup& g, SuiteReport& rep, std::uint64_t seed, std::size_t triples) {
    const auto& rs = g.rs();
    const std::string sys = rs.name();
    rep.checked += g.size();

    auto& eq = rep.statement("inversion sum", "rho - w^{-1} rho = sum of Q(w)");
    auto& words = rep.statement("reduced word round trip", "compose(reduced_word(w)) = w, |word| = l(w)");
    auto& inv = rep.statement("inverse inversion set", "Q(w^{-1}) = -w Q(w)");
    for (std::size_t w = 0; w < g.size(); ++w) {
        auto q = g.inversion_set(w);
        RatVec lhs = rs.rho() - g.element(g.inverse(w)).apply(rs.rho());
        eq.record(lhs == root_sum(rs, q), [&] {
            return Json{{"system", sys}, {"w", detail::element_json(g, w)}, {"lhs", to_json(lhs)}};
        });
        auto word = g.reduced_word(w);
        words.record(g.compose_word(word) == w && word.size() == q.size(),
                     [&] { return Json{{"system", sys}, {"w", format_word(word)}}; });
        std::vector<std::size_t> img;
        for (auto a : q) img.push_back(rs.negate(g.act_root(w, a)));
        inv.record(detail::as_set(img) == detail::as_set(g.inversion_set(g.inverse(w))),
                   [&] { return Json{{"system", sys}, {"w", detail::element_json(g, w)}}; });
    }

    auto& rho1 = rep.statement("subsystem inversion sum", "w(R1) = R1 implies rho' - w^{-1} rho' = sum of Q(w) in R1");
    auto& dich = rep.statement("stabilizer positivity",
                               "w(R1) = R1 implies (rho', sum Q(w)) >= 0, with equality iff w(B1) = B1");
    auto& equiv = rep.statement("simple set equivalence",
                                "for w(R1) = R1: w(B1) = B1 iff w(B1) in R1+ iff l(w s_a) > l(w) for all a in B1");
    auto& fact = rep.statement("stabilizer factorization", "W0 = W1 T bijectively with l(w1 t) = l(w1) + l(t)");
    auto& kappa = rep.statement("longest element swap on Q(t)",
                                "a -> v a permutes Q(t), negates rho' pairings, and (rho', sum Q(t)) = 0");
    auto& w1q = rep.statement("inversions of W1 stay in R1", "w in W1 implies Q(w) in R1+");
    auto& coset = rep.statement("parabolic coset factorization",
                                "w = u v uniquely with u(B1) in R+, v in W1, l(w) = l(u) + l(v)");

    const std::size_t r = rs.semisimple_rank();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) positions.push_back(i);
        Subsystem sub = parabolic_subsystem(g.rs_ptr(), positions);
        auto where = [&](std::size_t w) {
            Json b = Json::array();
            for (auto p : positions) b.push_back(p + 1);
            return Json{{"system", sys}, {"B1", b}, {"w", detail::element_json(g, w)}};
        };
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (!stabilizes(g, sub, w)) continue;
            auto q = g.inversion_set(w);
            std::vector<std::size_t> t;
            for (auto a : q)
                if (sub.contains(a)) t.push_back(a);
            RatVec lhs = sub.rho_prime - g.element(g.inverse(w)).apply(sub.rho_prime);
            rho1.record(lhs == root_sum(rs, t), [&] { return where(w); });

            Rational pairing = dot(sub.rho_prime, root_sum(rs, q));
            const bool fixes = fixes_simple_set(g, sub, w);
            dich.record(pairing >= 0 && ((pairing == 0) == fixes), [&] {
                auto j = where(w);
                j["pairing"] = to_json(pairing);
                return j;
            });
            bool ascends = true;
            for (auto a : sub.simple) ascends = ascends && g.length(g.multiply(w, g.reflection(a))) > g.length(w);
            equiv.record(fixes == maps_into_positive(g, sub.simple, w) && fixes == ascends,
                         [&] { return where(w); });
        }
        auto d = stabilizer_decomposition(g, sub);
        fact.record(d.bijective && d.length_additive, [&] {
            auto j = where(0);
            j.erase("w");
            j["bijective"] = d.bijective;
            j["length_additive"] = d.length_additive;
            return j;
        });
        for (auto t : d.t) kappa.record(kappa_check(g, sub, t), [&] { return where(t); });
        for (auto w : d.w1) {
            auto q = g.inversion_set(w);
            w1q.record(std::all_of(q.begin(), q.end(), [&](std::size_t a) { return sub.contains(a); }),
                       [&] { return where(w); });
        }
        std::set<std::size_t> w1set(d.w1.begin(), d.w1.end());
        for (std::size_t w = 0; w < g.size(); ++w) {
            bool ok = true;
            try {
                auto [u, v] = coset_decompose(g, sub.simple, w);
                ok = g.multiply(u, v) == w && in_min_coset_reps(g, sub.simple, u) && w1set.count(v) &&
                     g.length(w) == g.length(u) + g.length(v);
            } catch (const std::logic_error&) {
                ok = false;
            }
            coset.record(ok, [&] { return where(w); });
        }
    }

    auto& dual = rep.statement("dot action duality", "(w.h)(mu) = h(w^{-1}.mu)");
    SeededRng rng(system_seed(seed, rs, 2));
    for (std::size_t i = 0; i < triples; ++i) {
        auto w = static_cast<std::size_t>(rng.below(g.size()));
        AffineFunctional h{zero_vec(rs.ambient_dim()), rng.small_rational(5, 4)};
        for (auto& x : h.h) x = rng.small_rational(5, 4);
        RatVec mu = detail::random_weight(rs, rng);
        Rational lhs = dot_act_functional(g, w, h)(mu);
        Rational rhs = h(dot_apply(rs, g.element(g.inverse(w)), mu));
        dual.record(lhs == rhs, [&] {
            return Json{{"system", sys}, {"w", detail::element_json(g, w)}, {"h", functional_json(h)}, {"mu", to_json(mu)}};
        });
    }
}

inline SuiteReport verify_section2(const VerifyOptions& o) {
    SuiteReport rep;
    rep.suite = "section2";
    rep.seed = o.seed;
    for (const auto& rs : detail::select_systems(o, 4)) {
        rep.systems.push_back(rs->name());
        WeylGroup g(rs);
        verify_weyl_identities(g, rep, o.seed, o.duality_triples);
    }
    return rep;
}

// ---- dominance of linear ideals -------------------------------------------------

inline void verify_dominance_system(const WeylGroup& g, const std::vector<LinearIdeal>& corpus, const VerifyOptions& o,
                                    SuiteReport& rep) {
    const auto& rs = g.rs();
    const std::string sys = rs.name();
    rep.checked += corpus.size();
    auto& oracle = rep.statement("strong dominance decision vs enumeration",
                                 "dense(V cap P+) decided exactly = span of dominant differences in the box");
    auto& impl = rep.statement("strongly dominant implies dominant",
                               "for a in R_lambda: n_a + (rho, a^vee) > 0 implies a in R+");
    auto& tau = rep.statement("tau invariant on cosets",
                              "w = u v with u in W^lambda, v in W_lambda: tau(w) = tau(v); tau(w) empty iff w in W^lambda");
    auto& action = rep.statement("dot action on ideals", "(w1 w2).Omega = w1.(w2.Omega), V(w.Omega) = w.V(Omega)");
    SeededRng rng(system_seed(o.seed, rs, 3));

    for (const auto& omega : corpus) {
        auto where = [&] { return Json{{"system", sys}, {"ideal", ideal_json(omega)}}; };
        const bool sd = is_strongly_dominant(omega);
        auto ov = strong_dominance_oracle(omega, o.oracle_bound);
        if (ov.stabilized) {
            oracle.record(ov.dense == sd, [&] {
                auto j = where();
                j["decision"] = sd;
                j["oracle"] = ov.dense;
                return j;
            });
        } else {
            ++oracle.skipped;
        }
        if (sd) impl.record(is_dominant(omega), where);

        auto data = integral_root_data(omega);
        for (std::size_t w = 0; w < g.size(); ++w) {
            bool ok = true;
            try {
                auto [u, v] = coset_decompose(g, data.b_lambda, w);
                auto tw = tau_invariant(g, data.b_lambda, w);
                ok = tw == tau_invariant(g, data.b_lambda, v) &&
                     tw.empty() == in_min_coset_reps(g, data.b_lambda, w) && g.multiply(u, v) == w;
            } catch (const std::logic_error&) {
                ok = false;
            }
            tau.record(ok, [&] {
                auto j = where();
                j["w"] = detail::element_json(g, w);
                return j;
            });
        }

        auto ws = detail::sample_elements(g, rng, 2 * o.sampled_elements);
        for (std::size_t s = 0; s + 1 < ws.size(); s += 2) {
            const std::size_t w1 = ws[s], w2 = ws[s + 1];
            LinearIdeal composed = dot_act(g, g.multiply(w1, w2), omega);
            bool ok = composed == dot_act(g, w1, dot_act(g, w2, omega)) &&
                      composed.variety() == dot_act_variety(g, g.multiply(w1, w2), omega.variety());
            action.record(ok, [&] {
                auto j = where();
                j["w1"] = detail::element_json(g, w1);
                j["w2"] = detail::element_json(g, w2);
                return j;
            });
        }
    }

    auto& points = rep.statement("point ideals", "M_mu strongly dominant iff mu in P+");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        RatVec mu = zero_vec(rs.ambient_dim());
        const bool integral = rng.below(4) != 0;
        for (const auto& w : rs.fundamental_weights())
            axpy(mu, integral ? Rational(rng.range(-2, 3)) : rng.small_rational(3, 2), w);
        LinearIdeal m = LinearIdeal::point(g.rs_ptr(), mu);
        points.record(is_strongly_dominant(m) == rs.is_dominant_integral(mu),
                      [&] { return Json{{"system", sys}, {"mu", to_json(mu)}}; });
    }
}

inline SuiteReport verify_section3(const VerifyOptions& o) {
    SuiteReport rep;
    rep.suite = "section3";
    rep.seed = o.seed;
    for (const auto& rs : detail::select_fuzz_systems(o)) {
        rep.systems.push_back(rs->name());
        WeylGroup g(rs);
        verify_dominance_system(g, random_ideals(rs, o.corpus_size, o.seed), o, rep);
    }
    return rep;
}

// ---- FCR theory -----------------------------------------------------------------

inline std::vector<LambdaEntry> lambda_within(const std::vector<LambdaEntry>& entries, const RootSystem& rs,
                                              std::size_t bound) {
    std::vector<LambdaEntry> out;
    for (const auto& e : entries) {
        auto p = rs.simple_pairings(e.weight);
        if (std::all_of(p.begin(), p.end(), [&](const Rational& x) { return x <= Rational(bound); })) out.push_back(e);
    }
    return out;
}

inline void verify_fcr_system(const WeylGroup& g, const std::vector<LinearIdeal>& corpus, const VerifyOptions& o,
                              SuiteReport& rep) {
    const auto& rs = g.rs();
    const std::string sys = rs.name();
    rep.checked += corpus.size();
    auto& consistent = rep.statement("witness consistency",
                                     "all strongly dominant bases w^{-1}.Omega' agree on w in W^lambda");
    auto& sd_fcr = rep.statement("strongly dominant ideals are FCR", "Omega strongly dominant implies verdict FCR");
    auto& inside = rep.statement("B_lambda inside B", "Omega strongly dominant implies B_lambda subset of B");
    auto& both = rep.statement("both dominant forces W^lambda",
                               "Omega, w.Omega strongly dominant implies w(B_lambda) in R+");
    auto& pos = rep.statement("positive rho' shift",
                              "w(R_lambda) = R_lambda, w(B_lambda) not in R_lambda+ implies (rho', sum Q(w)) > 0");
    auto& fixed = rep.statement("dot stabilizer fixes B_lambda", "w.Omega = Omega implies w(B_lambda) = B_lambda");
    auto& classify = rep.statement("FCR classification of translates",
                                   "Omega strongly dominant: U_{w.Omega} FCR iff w in W^lambda");
    auto& translate = rep.statement("translate root data",
                                    "v in W^lambda, Omega1 = v.Omega: B_lambda1 = v B_lambda; u in W^lambda1 implies u v in W^lambda");
    auto& orbit = rep.statement("Lambda depends on the orbit", "Lambda(w.Omega) = Lambda(Omega) = union over w of Lambda(Omega, w)");
    auto& mono = rep.statement("box monotonicity", "Lambda within bound b = Lambda within b + 1, cut to pairings <= b");
    auto& dense = rep.statement("dominant points lie in Lambda", "V(Omega) cap P+ subset of Lambda(Omega)");
    SeededRng rng(system_seed(o.seed, rs, 4));

    for (const auto& omega : corpus) {
        auto where = [&] { return Json{{"system", sys}, {"ideal", ideal_json(omega)}}; };
        auto with_w = [&](std::size_t w) {
            auto j = where();
            j["w"] = detail::element_json(g, w);
            return j;
        };
        std::optional<FcrVerdict> verdict;
        try {
            verdict = fcr_decide(g, omega);
            consistent.record(true, where);
        } catch (const DivergenceError& e) {
            consistent.record(false, [&] {
                auto j = where();
                j["detail"] = e.detail;
                return j;
            });
        }
        const bool sd = is_strongly_dominant(omega);
        auto data = integral_root_data(omega);
        const auto& simple = rs.simple_indices();

        if (sd) {
            if (verdict)
                sd_fcr.record(verdict->status == FcrStatus::FCR || verdict->status == FcrStatus::FiniteDimensional,
                              [&] {
                                  auto j = where();
                                  j["status"] = status_name(verdict->status);
                                  return j;
                              });
            inside.record(std::all_of(data.b_lambda.begin(), data.b_lambda.end(),
                                      [&](std::size_t a) {
                                          return std::find(simple.begin(), simple.end(), a) != simple.end();
                                      }),
                          where);
            Subsystem r_lambda = subsystem(g.rs_ptr(), data.b_lambda);
            for (std::size_t w = 0; w < g.size(); ++w) {
                LinearIdeal moved = dot_act(g, w, omega);
                const bool in_w = in_min_coset_reps(g, data.b_lambda, w);
                if (is_strongly_dominant(moved)) both.record(in_w, [&] { return with_w(w); });
                if (stabilizes(g, r_lambda, w) && !maps_into_positive(g, r_lambda.simple, w))
                    pos.record(inversion_sum_pairing(g, r_lambda, w) > 0, [&] { return with_w(w); });
                if (moved == omega) fixed.record(fixes_simple_set(g, r_lambda, w), [&] { return with_w(w); });
            }
            for (auto w : detail::sample_elements(g, rng, o.sampled_elements)) {
                bool ok = false;
                try {
                    auto v = fcr_decide(g, dot_act(g, w, omega));
                    const bool fcr = v.status == FcrStatus::FCR || v.status == FcrStatus::FiniteDimensional;
                    ok = fcr == in_min_coset_reps(g, data.b_lambda, w);
                } catch (const DivergenceError&) {
                }
                classify.record(ok, [&] { return with_w(w); });
            }
        }

        std::vector<std::size_t> reps;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (in_min_coset_reps(g, data.b_lambda, v)) reps.push_back(v);
        for (std::size_t s = 0; s < std::min<std::size_t>(o.sampled_elements, reps.size()); ++s) {
            const std::size_t v = reps[static_cast<std::size_t>(rng.below(reps.size()))];
            LinearIdeal moved = dot_act(g, v, omega);
            auto moved_data = integral_root_data(moved);
            std::vector<std::size_t> image;
            for (auto a : data.b_lambda) image.push_back(g.act_root(v, a));
            bool ok = detail::as_set(image) == detail::as_set(moved_data.b_lambda);
            const std::size_t u = static_cast<std::size_t>(rng.below(g.size()));
            if (in_min_coset_reps(g, moved_data.b_lambda, u))
                ok = ok && in_min_coset_reps(g, data.b_lambda, g.multiply(u, v));
            translate.record(ok, [&] {
                auto j = with_w(v);
                j["u"] = detail::element_json(g, u);
                return j;
            });
        }

        const std::size_t b = o.lambda_bound;
        auto lam = lambda_set(g, omega, b);
        const std::size_t w = static_cast<std::size_t>(rng.below(g.size()));
        bool same = lambda_set(g, dot_act(g, w, omega), b) == lam;
        for (const auto& e : lam) same = same && annihilator_contains(g, omega, e.weight);
        orbit.record(same, [&] { return with_w(w); });
        mono.record(lambda_within(lambda_set(g, omega, b + 1), rs, b) == lam, where);
        std::set<LambdaEntry> in_lam(lam.begin(), lam.end());
        bool covers = true;
        for (const auto& e : lambda_set_for(g, omega, g.identity_index(), b)) covers = covers && in_lam.count(e);
        dense.record(covers, where);
    }
}

inline SuiteReport verify_section4(const VerifyOptions& o) {
    SuiteReport rep;
    rep.suite = "section4";
    rep.seed = o.seed;
    for (const auto& rs : detail::select_fuzz_systems(o)) {
        rep.systems.push_back(rs->name());
        WeylGroup g(rs);
        verify_fcr_system(g, random_ideals(rs, o.corpus_size, o.seed), o, rep);
    }
    return rep;
}

// ---- dual pairs -----------------------------------------------------------------

inline SuiteReport verify_howe_a(const VerifyOptions& o, int max_n = 6, int max_k = 6, int bound = 3) {
    SuiteReport rep;
    rep.suite = "howe-a";
    rep.seed = o.seed;
    auto& closure = rep.statement("closure decomposition",
                                  "closure of the weights = union of V(Omega_m), m in Phi_p, stable at bound + 1");
    auto& dims = rep.statement("component dimension", "dim V(Omega_m) = k, or the closure is h* when n <= k");
    auto& incomparable = rep.statement("components incomparable", "no V(Omega_m) contains another");
    auto& regimes = rep.statement("regimes exercised", "n <= k, k < n <= 2k and 2k <= n all occur");
    auto& witness = rep.statement("permutation witnesses",
                                  "w_i.Omega_{n-k} = Omega_i, w_i in W^lambda, Omega_0 and Omega_{n-k} strongly dominant");
    bool full = false, mid = false, low = false;
    for (int n = 1; n <= max_n; ++n) {
        rep.systems.push_back(RootSystem::build(RootKind::GL, n)->name());
        for (int k = 1; k <= max_k; ++k)
            for (int p = 0; p <= n; ++p) {
                ++rep.checked;
                auto r = closure_case_A(p, n - p, k, bound);
                auto where = [&] { return Json{{"p", p}, {"q", n - p}, {"k", k}}; };
                closure.record(r.oracle_agreement, [&] { return closure_json(r); });
                bool dims_ok = std::all_of(r.dims.begin(), r.dims.end(), [&](std::size_t d) {
                    return d == static_cast<std::size_t>(r.full_space ? n : k);
                });
                dims.record(dims_ok && r.full_space == (n <= k), where);
                incomparable.record(r.incomparable, where);
                full = full || n <= k;
                mid = mid || (k < n && n <= 2 * k);
                low = low || 2 * k <= n;
            }
        if (n < 2) continue;
        WeylGroup g(RootSystem::build(RootKind::GL, n));
        for (int k = 1; k < n; ++k)
            for (int i = 0; i <= n - k; ++i) {
                auto c = witness_w_case_A(g, i, n, k);
                witness.record(c.ok(), [&] { return case_A_witness_json(g, c); });
            }
    }
    regimes.record(full && mid && low, [&] { return Json{{"full", full}, {"middle", mid}, {"low", low}}; });
    return rep;
}

inline SuiteReport verify_howe_b(const VerifyOptions& o, int max_n = 5, int max_p = 2, int bound = 3) {
    SuiteReport rep;
    rep.suite = "howe-b";
    rep.seed = o.seed;
    auto& closure = rep.statement("closure decomposition",
                                  "closure of the weights = union of V(Omega_i), 0 <= i <= min(p, n-p)");
    auto& dims = rep.statement("component dimension", "dim V(Omega_i) = p - i");
    auto& incomparable = rep.statement("components incomparable", "no V(Omega_i) contains another");
    auto& kernel = rep.statement("kernel component", "Omega_0 is the unique component of maximal dimension p");
    auto& fcr = rep.statement("explicit FCR witness",
                              "w.Omega = Omega_0, w in W^lambda, Omega strongly dominant, Omega_0 FCR");
    auto& odd = rep.statement("odd k has no finite dimensional modules",
                              "every Weyl translate of each component has a constant non-integral coroot pairing");
    for (int n = 1; n <= max_n; ++n) {
        WeylGroup g(RootSystem::build(RootKind::C, n));
        rep.systems.push_back(g.rs().name());
        for (int p = 1; p <= max_p; ++p) {
            ++rep.checked;
            auto r = closure_case_B(n, p, bound);
            auto where = [&] { return Json{{"n", n}, {"p", p}}; };
            closure.record(r.oracle_agreement, [&] { return closure_json(r); });
            incomparable.record(r.incomparable, where);
            if (r.full_space) {
                dims.record(r.dims == std::vector<std::size_t>{static_cast<std::size_t>(n)} && 2 * p >= 2 * n, where);
                continue;
            }
            bool dims_ok = true;
            for (std::size_t t = 0; t < r.dims.size(); ++t)
                dims_ok = dims_ok && r.dims[t] == static_cast<std::size_t>(p - r.index_set[t]);
            dims.record(dims_ok, where);
            auto kr = kernel_report("B", n, 2 * p, 0, 0, bound);
            kernel.record(kr.kernel_component == std::size_t{0} && kr.unique_max_dim, where);
            auto c = case_B_fcr(g, n, p);
            fcr.record(c.ok(), [&] { return case_B_fcr_json(g, c); });
        }
        if (n <= 3)
            for (int k : {1, 3}) {
                if (k >= 2 * n) continue;
                auto r = odd_k_case_B(g, n, k, bound);
                odd.record(r.certified && r.lambda_empty, [&] { return odd_k_json(g, r); });
            }
    }
    return rep;
}

// ---- fuzzing --------------------------------------------------------------------

inline SuiteReport verify_ideals_fuzz(const VerifyOptions& o) {
    SuiteReport rep;
    rep.suite = "ideals-fuzz";
    rep.seed = o.seed;
    auto& oracle = rep.statement("strong dominance decision vs enumeration",
                                 "dense(V cap P+) decided exactly = span of dominant differences in the box");
    auto& impl = rep.statement("strongly dominant implies dominant",
                               "for a in R_lambda: n_a + (rho, a^vee) > 0 implies a in R+");
    auto& routes = rep.statement("dot action routes agree", "w.Omega from generators = w.V(Omega) from points");
    auto& consistent = rep.statement("witness consistency",
                                     "all strongly dominant bases w^{-1}.Omega' agree on w in W^lambda");
    auto& canon = rep.statement("canonical form", "ideal rebuilt from its own functionals is equal");
    for (const auto& rs : detail::select_fuzz_systems(o)) {
        rep.systems.push_back(rs->name());
        WeylGroup g(rs);
        SeededRng rng(system_seed(o.seed, *rs, 5));
        auto corpus = random_ideals(rs, o.fuzz_size, o.seed);
        rep.checked += corpus.size();
        for (const auto& omega : corpus) {
            auto where = [&] { return Json{{"system", rs->name()}, {"ideal", ideal_json(omega)}}; };
            const bool sd = is_strongly_dominant(omega);
            auto ov = strong_dominance_oracle(omega, o.oracle_bound);
            if (ov.stabilized)
                oracle.record(ov.dense == sd, [&] {
                    auto j = where();
                    j["decision"] = sd;
                    j["oracle"] = ov.dense;
                    return j;
                });
            else
                ++oracle.skipped;
            if (sd) impl.record(is_dominant(omega), where);
            const auto w = static_cast<std::size_t>(rng.below(g.size()));
            routes.record(dot_act(g, w, omega).variety() == dot_act_variety(g, w, omega.variety()), [&] {
                auto j = where();
                j["w"] = detail::element_json(g, w);
                return j;
            });
            bool ok = true;
            try {
                fcr_decide(g, omega);
            } catch (const DivergenceError&) {
                ok = false;
            }
            consistent.record(ok, where);
            canon.record(LinearIdeal::from_functionals(rs, omega.functionals()) == omega, where);
        }
    }
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"section2", "section3", "section4", "howe-a",
                                                "howe-b",   "ideals-fuzz", "all"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
    if (name == "section2") return verify_section2(o);
    if (name == "section3") return verify_section3(o);
    if (name == "section4") return verify_section4(o);
    if (name == "howe-a") return verify_howe_a(o);
    if (name == "howe-b") return verify_howe_b(o);
    if (name == "ideals-fuzz") return verify_ideals_fuzz(o);
    if (name == "all") {
        SuiteReport all;
        all.suite = "all";
        all.seed = o.seed;
        for (const auto& n : suite_names())
            if (n != "all") all.absorb(run_suite(n, o));
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace weylfcr
