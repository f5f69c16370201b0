#include "weylfcr/corpus.hpp"
#include "weylfcr/ideals.hpp"
#include "weylfcr/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace weylfcr;

namespace {

RatVec v(std::initializer_list<Rational> xs) { return RatVec(xs); }

RootSystemPtr sys(RootKind k, int n) { return RootSystem::build(k, n); }

LinearIdeal ideal(const RootSystemPtr& rs, const std::vector<AffineFunctional>& fs) {
    return LinearIdeal::from_functionals(rs, fs);
}

// R_lambda by evaluating every coroot at the base point and at base + d for
// each direction d, without restricting functionals.
std::map<std::size_t, Rational> brute_force_constants(const LinearIdeal& omega) {
    const auto& rs = omega.rs();
    const auto& var = omega.variety();
    std::map<std::size_t, Rational> out;
    for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        Rational at_base = dot(var.base_point(), rs.coroot_of(a));
        bool constant = true;
        for (const auto& d : var.direction_basis())
            constant = constant && dot(var.base_point() + d, rs.coroot_of(a)) == at_base;
        if (constant && is_integer(at_base)) out.emplace(a, at_base);
    }
    return out;
}

}  // namespace

TEST(Canonical, ScaledGeneratorsGiveEqualIdeals) {
    auto rs = sys(RootKind::C, 2);
    auto a = ideal(rs, {coroot_functional(*rs, 1)});
    auto b = ideal(rs, {{Rational(2) * rs->simple_coroot(0), 0}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.functionals(), b.functionals());
}

TEST(Canonical, CoordinateIdealInGL2) {
    auto rs = sys(RootKind::GL, 2);
    auto om = ideal(rs, {coordinate_functional(*rs, 2)});
    EXPECT_EQ(om.dimension(), 1u);
    EXPECT_TRUE(om.variety().contains(v({5, 0})));
    EXPECT_FALSE(om.variety().contains(v({0, 1})));
}

TEST(Canonical, InconsistentGeneratorsRejected) {
    auto rs = sys(RootKind::GL, 2);
    EXPECT_NO_THROW(ideal(rs, {coordinate_functional(*rs, 1)}));
    EXPECT_THROW(ideal(rs, {coordinate_functional(*rs, 1), coordinate_functional(*rs, 1, 1)}), InconsistentIdeal);
    EXPECT_THROW(coroot_functional(*rs, 2), std::invalid_argument);
}

TEST(Canonical, TypeAStaysInTraceZeroHyperplane) {
    auto rs = sys(RootKind::A, 2);
    auto whole = ideal(rs, {});
    EXPECT_EQ(whole.dimension(), 2u);
    EXPECT_THROW(LinearIdeal::point(rs, v({1, 0, 0})), std::invalid_argument);
}

TEST(DotAct, IdentityAndGroupLaw) {
    for (const auto& rs : fuzz_systems()) {
        WeylGroup g(rs);
        const std::size_t r = rs->semisimple_rank();
        for (const auto& om : random_ideals(rs, 12, 4)) {
            EXPECT_EQ(dot_act(g, 0, om), om);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    auto si = g.simple_reflection(i), sj = g.simple_reflection(j);
                    EXPECT_EQ(dot_act(g, g.multiply(si, sj), om), dot_act(g, si, dot_act(g, sj, om)));
                }
        }
    }
}

TEST(DotAct, VarietyTransformsWithPoints) {
    for (const auto& rs : fuzz_systems()) {
        WeylGroup g(rs);
        for (const auto& om : random_ideals(rs, 10, 8)) {
            for (std::size_t w = 0; w < g.size(); w += 3) {
                auto moved = dot_act(g, w, om);
                EXPECT_EQ(moved.variety(), dot_act_variety(g, w, om.variety()));
                RatVec mu = om.variety().base_point();
                for (const auto& d : om.variety().direction_basis()) axpy(mu, Rational(1, 3), d);
                RatVec wmu = dot_apply(*rs, g.element(w), mu);
                EXPECT_TRUE(moved.variety().contains(wmu));
                for (const auto& f : om.functionals()) {
                    auto wf = dot_act_functional(g, w, f);
                    // (w.h)(w.mu) = h(mu)
                    EXPECT_EQ(wf(wmu), f(mu));
                }
            }
        }
    }
}

TEST(IntegralRootData, PointIdealHasAllRoots) {
    auto rs = sys(RootKind::B, 2);
    auto d = integral_root_data(LinearIdeal::point(rs, v({2, 1})));
    EXPECT_EQ(d.r_lambda.size(), rs->num_roots());
    std::set<std::size_t> simple(rs->simple_indices().begin(), rs->simple_indices().end());
    EXPECT_EQ(std::set<std::size_t>(d.b_lambda.begin(), d.b_lambda.end()), simple);
}

TEST(IntegralRootData, WholeSpaceHasNone) {
    auto rs = sys(RootKind::C, 3);
    auto d = integral_root_data(ideal(rs, {}));
    EXPECT_TRUE(d.r_lambda.empty());
    EXPECT_TRUE(d.b_lambda.empty());
    EXPECT_TRUE(is_dominant(ideal(rs, {})));
}

TEST(IntegralRootData, C3LastTwoCorootsMatchBruteForce) {
    auto rs = sys(RootKind::C, 3);
    auto om = ideal(rs, {coroot_functional(*rs, 2), coroot_functional(*rs, 3)});
    auto d = integral_root_data(om);
    auto bf = brute_force_constants(om);
    ASSERT_EQ(d.r_lambda.size(), bf.size());
    for (const auto& [a, c] : bf) EXPECT_EQ(Rational(d.constants.at(a)), c);
    // V = {(t, 0, 0)}: exactly the C(2) roots on coordinates 2 and 3 pair constantly.
    EXPECT_EQ(bf.size(), 8u);
    EXPECT_EQ(d.b_lambda.size(), 2u);
}

TEST(IntegralRootData, MatchesBruteForceOnCorpus) {
    for (const auto& rs : fuzz_systems()) {
        for (const auto& om : random_ideals(rs, 30, 2)) {
            auto d = integral_root_data(om);
            auto bf = brute_force_constants(om);
            ASSERT_EQ(d.r_lambda.size(), bf.size());
            for (const auto& [a, c] : bf) {
                EXPECT_EQ(Rational(d.constants.at(a)), c);
                EXPECT_EQ(d.constants.at(rs->negate(a)), -d.constants.at(a));
            }
            for (auto b : d.b_lambda) EXPECT_TRUE(rs->is_positive(b));
        }
    }
}

TEST(StrongDominance, PointIdealsAreMembership) {
    auto rs = sys(RootKind::C, 2);
    EXPECT_TRUE(is_strongly_dominant(LinearIdeal::point(rs, v({1, 0}))));
    EXPECT_FALSE(is_strongly_dominant(LinearIdeal::point(rs, v({0, 1}))));
    EXPECT_FALSE(is_strongly_dominant(LinearIdeal::point(rs, v({Rational(1, 2), 0}))));
}

TEST(StrongDominance, CoordinateIdealOfGL) {
    // (E3, E4) in GL(4): contains N w1 + N w2.
    auto rs = sys(RootKind::GL, 4);
    EXPECT_TRUE(is_strongly_dominant(ideal(rs, {coordinate_functional(*rs, 3), coordinate_functional(*rs, 4)})));
    EXPECT_FALSE(is_strongly_dominant(ideal(rs, {coordinate_functional(*rs, 1), coordinate_functional(*rs, 4)})));
}

TEST(StrongDominance, TrailingCorootsOfC3) {
    auto rs = sys(RootKind::C, 3);
    EXPECT_TRUE(is_strongly_dominant(ideal(rs, {coroot_functional(*rs, 2), coroot_functional(*rs, 3)})));
    EXPECT_FALSE(is_strongly_dominant(ideal(rs, {coroot_functional(*rs, 2, 1), coroot_functional(*rs, 3)})));
}

TEST(StrongDominance, HalfIntegralLineIsNotDense) {
    // H1 = 1/2 on a line in A2: no integral points at all.
    auto rs = sys(RootKind::A, 2);
    EXPECT_FALSE(is_strongly_dominant(ideal(rs, {coroot_functional(*rs, 1, Rational(-1, 2))})));
}

TEST(StrongDominance, AgreesWithEnumerationOracle) {
    std::size_t compared = 0;
    for (const auto& rs : fuzz_systems()) {
        for (const auto& om : random_ideals(rs, 40, 1)) {
            auto verdict = strong_dominance_oracle(om);
            if (!verdict.stabilized) continue;
            ++compared;
            EXPECT_EQ(is_strongly_dominant(om), verdict.dense) << rs->name() << " " << format_vec(om.variety().base_point());
        }
    }
    EXPECT_GT(compared, 250u);
}

TEST(Dominance, StronglyDominantImpliesDominant) {
    for (const auto& rs : fuzz_systems())
        for (const auto& om : random_ideals(rs, 60, 3))
            if (is_strongly_dominant(om)) EXPECT_TRUE(is_dominant(om));
}

TEST(Dominance, A1ShiftedCorootIsNotDominant) {
    auto rs = sys(RootKind::A, 1);
    auto om = ideal(rs, {coroot_functional(*rs, 1, 2)});
    EXPECT_FALSE(is_dominant(om));
    EXPECT_FALSE(is_strongly_dominant(om));
    EXPECT_EQ(lambda_plus_class(om), LambdaClass::Neither);
}

TEST(LambdaClass, Examples) {
    auto a1 = sys(RootKind::A, 1);
    EXPECT_EQ(lambda_plus_class(ideal(a1, {coroot_functional(*a1, 1, 1)})), LambdaClass::Weak);
    EXPECT_EQ(lambda_plus_class(ideal(a1, {coroot_functional(*a1, 1)})), LambdaClass::Strict);
    auto c2 = sys(RootKind::C, 2);
    EXPECT_EQ(lambda_plus_class(LinearIdeal::point(c2, v({1, 0}))), LambdaClass::Strict);
    EXPECT_EQ(lambda_plus_class(ideal(c2, {})), LambdaClass::Strict);
}

TEST(Tau, LastSimpleReflectionOfReducedWordIsInTau) {
    auto rs = sys(RootKind::C, 3);
    WeylGroup g(rs);
    auto om = ideal(rs, {coroot_functional(*rs, 2), coroot_functional(*rs, 3)});
    auto bl = integral_root_data(om).b_lambda;
    EXPECT_TRUE(tau_invariant(g, bl, 0).empty());
    for (auto x : g.generated_subgroup(bl))
        for (auto a : bl) {
            auto u = g.multiply(x, g.reflection(a));
            if (g.length(u) < g.length(x)) {
                auto t = tau_invariant(g, bl, x);
                EXPECT_TRUE(std::find(t.begin(), t.end(), a) != t.end());
            }
        }
}
