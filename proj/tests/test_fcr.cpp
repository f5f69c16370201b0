#include "weylfcr/corpus.hpp"
#include "weylfcr/fcr.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace weylfcr;

namespace {

RatVec v(std::initializer_list<Rational> xs) { return RatVec(xs); }

RootSystemPtr sys(RootKind k, int n) { return RootSystem::build(k, n); }

LinearIdeal ideal(const RootSystemPtr& rs, const std::vector<AffineFunctional>& fs) {
    return LinearIdeal::from_functionals(rs, fs);
}

std::vector<RatVec> dominant_box(const RootSystem& rs, std::size_t bound) {
    std::vector<RatVec> out;
    const std::size_t r = rs.semisimple_rank();
    std::vector<std::size_t> m(r, 0);
    while (true) {
        RatVec mu = zero_vec(rs.ambient_dim());
        for (std::size_t i = 0; i < r; ++i) axpy(mu, Rational(m[i]), rs.fundamental_weights()[i]);
        out.push_back(mu);
        std::size_t i = 0;
        while (i < r && m[i] == bound) m[i++] = 0;
        if (i == r) break;
        ++m[i];
    }
    return out;
}

std::set<RatVec, RatVecLess> weights_of(const std::vector<LambdaEntry>& es) {
    std::set<RatVec, RatVecLess> out;
    for (const auto& e : es) out.insert(e.weight);
    return out;
}

// (H1, H2 + H3 + 1) in C(3), i.e. mu_1 = mu_2, mu_2 = -1.
LinearIdeal c3_omega0() {
    auto rs = sys(RootKind::C, 3);
    return ideal(rs, {{v({1, -1, 0}), 0}, {v({0, 1, 0}), 1}});
}

}  // namespace

TEST(Annihilator, CoordinateIdealOfGL2) {
    auto rs = sys(RootKind::GL, 2);
    WeylGroup g(rs);
    auto om = ideal(rs, {coordinate_functional(*rs, 2)});
    for (int m = 0; m <= 4; ++m) EXPECT_TRUE(annihilator_contains(g, om, v({m, 0})));
    EXPECT_FALSE(annihilator_contains(g, om, v({1, 1})));
    EXPECT_THROW(annihilator_contains(g, om, v({0, 1})), std::invalid_argument);
}

TEST(Annihilator, PointIdealIsOrbitMembership) {
    auto rs = sys(RootKind::B, 2);
    WeylGroup g(rs);
    auto box = dominant_box(*rs, 2);
    for (const auto& nu : box) {
        auto om = LinearIdeal::point(rs, nu);
        for (const auto& mu : box) {
            bool in_orbit = false;
            for (std::size_t w = 0; w < g.size(); ++w) in_orbit = in_orbit || dot_apply(*rs, g.element(w), mu) == nu;
            EXPECT_EQ(annihilator_contains(g, om, mu), in_orbit);
        }
        // A second point in the dot orbit of nu.
        auto far = LinearIdeal::point(rs, dot_apply(*rs, g.element(g.longest()), nu));
        EXPECT_TRUE(annihilator_contains(g, far, nu));
    }
}

TEST(LambdaSet, RegularPointIsItsOwnSet) {
    auto rs = sys(RootKind::C, 2);
    WeylGroup g(rs);
    auto ls = lambda_set(g, LinearIdeal::point(rs, v({1, 0})), 3);
    ASSERT_EQ(ls.size(), 1u);
    EXPECT_EQ(ls[0].weight, v({1, 0}));
}

TEST(LambdaSet, WholeSpaceGivesFullBox) {
    auto rs = sys(RootKind::A, 2);
    WeylGroup g(rs);
    auto ls = lambda_set(g, ideal(rs, {}), 2);
    EXPECT_EQ(ls.size(), 9u);
    EXPECT_EQ(weights_of(ls), weights_of([&] {
                  std::vector<LambdaEntry> es;
                  for (auto& mu : dominant_box(*rs, 2)) es.push_back({mu, false});
                  return es;
              }()));
}

TEST(LambdaSet, HalfIntegralConstantGivesEmpty) {
    // mu_1 = 1/2 in B(1) x ... : every dot translate keeps a half-integral
    // pairing with e1 - e2 in C(2).
    auto rs = sys(RootKind::C, 2);
    WeylGroup g(rs);
    auto om = ideal(rs, {{v({1, -1}), Rational(-1, 2)}});
    EXPECT_TRUE(lambda_set(g, om, 4).empty());
}

TEST(LambdaSet, CenterFreeEntriesForGL) {
    auto rs = sys(RootKind::GL, 2);
    WeylGroup g(rs);
    auto whole = lambda_set(g, ideal(rs, {}), 1);
    ASSERT_EQ(whole.size(), 2u);
    for (const auto& e : whole) EXPECT_TRUE(e.center_free);
    auto fixed = lambda_set(g, ideal(rs, {coordinate_functional(*rs, 2)}), 2);
    for (const auto& e : fixed) {
        EXPECT_FALSE(e.center_free);
        EXPECT_TRUE(annihilator_contains(g, ideal(rs, {coordinate_functional(*rs, 2)}), e.weight));
    }
}

TEST(FcrDecide, DominantPointIsFiniteDimensional) {
    auto rs = sys(RootKind::B, 2);
    WeylGroup g(rs);
    auto v1 = fcr_decide(g, LinearIdeal::point(rs, v({1, 1})));
    EXPECT_EQ(v1.status, FcrStatus::FiniteDimensional);
    EXPECT_FALSE(v1.witness);
}

TEST(FcrDecide, A1ShiftedCorootIsNotFCR) {
    auto rs = sys(RootKind::A, 1);
    WeylGroup g(rs);
    auto v1 = fcr_decide(g, ideal(rs, {coroot_functional(*rs, 1, 2)}));
    EXPECT_EQ(v1.status, FcrStatus::NotFCR);
    ASSERT_TRUE(v1.witness);
    EXPECT_EQ(g.word_string(*v1.witness), "s1");
    ASSERT_TRUE(v1.base_ideal);
    EXPECT_EQ(*v1.base_ideal, ideal(rs, {coroot_functional(*rs, 1)}));
    EXPECT_EQ(v1.b_lambda, std::vector<std::size_t>{rs->simple_indices()[0]});
}

TEST(FcrDecide, SymplecticOmega0IsFCR) {
    auto om = c3_omega0();
    WeylGroup g(om.rs_ptr());
    auto v1 = fcr_decide(g, om);
    EXPECT_EQ(v1.status, FcrStatus::FCR);
    ASSERT_TRUE(v1.witness);
    EXPECT_TRUE(maps_into_positive(g, v1.b_lambda, *v1.witness));
    EXPECT_EQ(dot_act(g, *v1.witness, *v1.base_ideal), om);
}

TEST(FcrDecide, NoStronglyDominantTranslate) {
    auto a2 = sys(RootKind::A, 2);
    WeylGroup g(a2);
    auto v1 = fcr_decide(g, ideal(a2, {coroot_functional(*a2, 1, Rational(-1, 2))}));
    EXPECT_EQ(v1.status, FcrStatus::NotFCR);
    EXPECT_FALSE(v1.witness);
    EXPECT_EQ(v1.witnesses_checked, 0u);

    auto gl = sys(RootKind::GL, 2);
    WeylGroup h(gl);
    auto v2 = fcr_decide(h, ideal(gl, {{v({1, -1}), Rational(-1, 2)}}));
    EXPECT_EQ(v2.status, FcrStatus::UnknownReductive);
}

TEST(FcrDecide, ReductiveFailingPredicateIsUnknown) {
    auto gl = sys(RootKind::GL, 2);
    WeylGroup g(gl);
    auto v1 = fcr_decide(g, ideal(gl, {coroot_functional(*gl, 1, 2)}));
    EXPECT_EQ(v1.status, FcrStatus::UnknownReductive);
    EXPECT_FALSE(v1.witness);
    auto v2 = fcr_decide(g, ideal(gl, {coordinate_functional(*gl, 2)}));
    EXPECT_EQ(v2.status, FcrStatus::FCR);
}

TEST(EquivalenceBC, Examples) {
    auto om = ideal(sys(RootKind::C, 3), {coroot_functional(*sys(RootKind::C, 3), 2), coroot_functional(*sys(RootKind::C, 3), 3)});
    WeylGroup g(om.rs_ptr());
    EXPECT_TRUE(equivalence_bc(g, om, 0));
    for (auto a : integral_root_data(om).b_lambda) EXPECT_FALSE(equivalence_bc(g, om, g.reflection(a)));
    EXPECT_THROW(equivalence_bc(g, c3_omega0(), 0), std::invalid_argument);
}

TEST(CorpusProperties, StronglyDominantBasesAndWitnesses) {
    for (const auto& rs : fuzz_systems()) {
        WeylGroup g(rs);
        for (const auto& om : random_ideals(rs, 15, 9)) {
            if (!is_strongly_dominant(om)) continue;
            auto data = integral_root_data(om);
            std::set<std::size_t> simple(rs->simple_indices().begin(), rs->simple_indices().end());
            for (auto b : data.b_lambda) EXPECT_TRUE(simple.count(b)) << "B_lambda outside B";
            for (std::size_t w = 0; w < g.size(); ++w) {
                auto moved = dot_act(g, w, om);
                if (moved == om) {
                    std::set<std::size_t> img;
                    for (auto b : data.b_lambda) img.insert(g.act_root(w, b));
                    EXPECT_EQ(img, std::set<std::size_t>(data.b_lambda.begin(), data.b_lambda.end()));
                }
                const bool in_wl = in_min_coset_reps(g, data.b_lambda, w);
                if (is_strongly_dominant(moved)) EXPECT_TRUE(in_wl);
                if (in_wl) {
                    auto d1 = integral_root_data(moved);
                    std::set<std::size_t> img;
                    for (auto b : data.b_lambda) img.insert(g.act_root(w, b));
                    EXPECT_EQ(img, std::set<std::size_t>(d1.b_lambda.begin(), d1.b_lambda.end()));
                    for (std::size_t u = 0; u < g.size(); u += 5)
                        if (in_min_coset_reps(g, d1.b_lambda, u))
                            EXPECT_TRUE(in_min_coset_reps(g, data.b_lambda, g.multiply(u, w)));
                }
                auto verdict = fcr_decide(g, moved);
                if (verdict.status == FcrStatus::FCR) {
                    EXPECT_EQ(in_wl, true);
                    ASSERT_TRUE(verdict.witness);
                    EXPECT_TRUE(maps_into_positive(g, verdict.b_lambda, *verdict.witness));
                } else if (verdict.status == FcrStatus::NotFCR) {
                    EXPECT_FALSE(in_wl);
                    EXPECT_TRUE(verdict.witness);
                }
            }
        }
    }
}

TEST(CorpusProperties, LambdaSetBoxMonotoneAndContainsDominantPoints) {
    for (const auto& rs : fuzz_systems()) {
        if (rs->semisimple_rank() > 2) continue;
        WeylGroup g(rs);
        for (const auto& om : random_ideals(rs, 15, 6)) {
            auto small = weights_of(lambda_set(g, om, 2));
            auto big = weights_of(lambda_set(g, om, 3));
            for (const auto& mu : small) EXPECT_TRUE(big.count(mu));
            for (const auto& mu : dominant_box(*rs, 2)) {
                if (om.variety().contains(mu)) EXPECT_TRUE(small.count(mu));
                EXPECT_EQ(small.count(mu) > 0, annihilator_contains(g, om, mu));
            }
        }
    }
}
