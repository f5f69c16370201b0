#include "weylfcr/howe.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace weylfcr;

namespace {

RatVec v(std::initializer_list<Rational> xs) { return RatVec(xs); }

// Transpose of the Young diagram, cell by cell.
Partition transpose_diagram(const Partition& l) {
    std::vector<int> cols;
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l.part(i); ++j) {
            if (static_cast<int>(cols.size()) < j) cols.push_back(0);
            ++cols[static_cast<std::size_t>(j - 1)];
        }
    return Partition(cols);
}

// {a_1 = ... = a_r = -p, a_{r+1} = ... = a_s = -p - 1} in Q^n.
AffineSubspace case_B_variety(int i, int n, int p) {
    const int r = n - p - i, s = n - p + i;
    RatVec base = zero_vec(static_cast<std::size_t>(n));
    for (int j = 0; j < r; ++j) base[static_cast<std::size_t>(j)] = -p;
    for (int j = r; j < s; ++j) base[static_cast<std::size_t>(j)] = -p - 1;
    RatMatrix dirs;
    for (int j = s; j < n; ++j) dirs.push_back(unit_vec(static_cast<std::size_t>(n), static_cast<std::size_t>(j)));
    return AffineSubspace(base, dirs);
}

}  // namespace

TEST(Partitions, Conjugate) {
    EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    std::mt19937_64 eng(2);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> parts;
        int top = static_cast<int>(eng() % 7);
        for (int len = static_cast<int>(eng() % 6); len > 0 && top > 0; --len) {
            parts.push_back(top);
            top -= static_cast<int>(eng() % 3);
        }
        Partition l(parts);
        EXPECT_EQ(conjugate(l), transpose_diagram(l));
        EXPECT_EQ(conjugate(conjugate(l)), l);
    }
}

TEST(CaseA, EnumerationForOneOneOne) {
    auto es = enumerate_case_A(1, 1, 1, 2);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& e : es) got.insert({e.alpha.str(), e.beta.str()});
    std::set<std::pair<std::string, std::string>> want{{"()", "()"}, {"(1)", "()"}, {"(2)", "()"}, {"()", "(1)"}, {"()", "(2)"}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(es.size(), 5u);
}

TEST(CaseA, WeightFormulas) {
    EXPECT_EQ(case_A_weight_g(Partition({2}), Partition(), 1, 1, 1), v({-3, 0}));
    EXPECT_EQ(case_A_weight_g(Partition(), Partition(), 2, 2, 3), v({-3, -3, 0, 0}));
    EXPECT_EQ(case_A_weight_g(Partition({3, 1}), Partition({2}), 2, 1, 3), v({-4, -6, 2}));
    EXPECT_EQ(case_A_weight_K(Partition({3, 1}), Partition({2}), 3), (std::vector<int>{3, 1, -2}));
}

TEST(CaseA, OmegaExamplesAndDimensions) {
    auto o0 = omega_case_A(0, 1, 2);
    EXPECT_EQ(o0.variety(), *solve_affine({{v({0, 1}), 0}}, 2));
    auto top = omega_case_A(2, 2, 4);
    EXPECT_EQ(top.variety(), *solve_affine({{v({1, 0, 0, 0}), 2}, {v({0, 1, 0, 0}), 2}}, 4));
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (int m = 0; m <= n - k; ++m) EXPECT_EQ(omega_case_A(m, k, n).dimension(), static_cast<std::size_t>(k));
    EXPECT_THROW(omega_case_A(0, 2, 2), std::invalid_argument);
}

TEST(CaseA, PhiExamples) {
    EXPECT_EQ(phi_set(1, 3, 2), (std::vector<int>{0, 1}));
    EXPECT_EQ(phi_set(2, 2, 1), (std::vector<int>{1, 2}));
    EXPECT_FALSE(phi_set(1, 1, 2).has_value());
    // Boundary rows overlap and must agree.
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 8; ++k)
            for (int p = 0; p <= n; ++p) EXPECT_NO_THROW(phi_set(p, n - p, k));
}

TEST(CaseA, ClosureExamples) {
    auto r = closure_case_A(1, 1, 1, 3);
    ASSERT_EQ(r.components.size(), 2u);
    EXPECT_EQ(r.components[0], omega_case_A(0, 1, 2));
    EXPECT_EQ(r.components[1], omega_case_A(1, 1, 2));
    EXPECT_TRUE(r.oracle_agreement);
    EXPECT_TRUE(r.index_match);

    auto r2 = closure_case_A(1, 3, 2, 3);
    EXPECT_EQ(r2.index_set, (std::vector<int>{0, 1}));
    EXPECT_EQ(r2.dims, (std::vector<std::size_t>{2, 2}));
    EXPECT_TRUE(r2.oracle_agreement && r2.stabilized && r2.incomparable);

    auto full = closure_case_A(1, 1, 3, 3);
    EXPECT_TRUE(full.full_space);
    EXPECT_TRUE(full.oracle_agreement);
}

TEST(CaseA, WeightsLieInComponents) {
    for (auto [p, q, k] : {std::tuple{2, 2, 1}, {1, 3, 2}, {2, 3, 2}, {3, 1, 2}}) {
        auto r = closure_case_A(p, q, k, 3);
        for (const auto& e : enumerate_case_A(p, q, k, 3)) {
            bool covered = false;
            for (const auto& c : r.components) covered = covered || c.variety().contains(e.weight_g);
            EXPECT_TRUE(covered) << e.alpha.str() << " " << e.beta.str();
        }
    }
}

TEST(CaseA, Witnesses) {
    auto g3 = WeylGroup(RootSystem::build(RootKind::GL, 3));
    EXPECT_TRUE(witness_w_case_A(g3, 0, 3, 1).ok());
    auto top = witness_w_case_A(g3, 2, 3, 1);
    EXPECT_EQ(top.element, WeylGroup::identity_index());
    EXPECT_EQ(witness_permutation_case_A(1, 4, 2), (std::vector<int>{0, 1, 4, 2, 3}));
    for (int n = 2; n <= 5; ++n) {
        WeylGroup g(RootSystem::build(RootKind::GL, n));
        for (int k = 1; k < n; ++k)
            for (int i = 0; i <= n - k; ++i) EXPECT_TRUE(witness_w_case_A(g, i, n, k).ok()) << n << " " << k << " " << i;
    }
}

TEST(CaseB, Enumeration) {
    EXPECT_EQ(case_B_weight_g(Partition({1}), 2, 2), v({-1, -2}));
    EXPECT_EQ(case_B_weight_g(Partition(), 3, 3), v({Rational(-3, 2), Rational(-3, 2), Rational(-3, 2)}));
    for (const auto& e : enumerate_case_B(2, 2, 3)) {
        auto c = conjugate(e.mu);
        EXPECT_LE(c.part(1) + c.part(2), 2);
        EXPECT_NE(e.mu, Partition({2, 2}));
        const int l = e.mu.length();
        for (int j = 0; j < 2 - l; ++j) EXPECT_EQ(e.weight_g[static_cast<std::size_t>(j)], -1);
    }
}

TEST(CaseB, OmegaVarietiesFollowTheWeightDescription) {
    EXPECT_EQ(omega_case_B(0, 3, 1).variety(), AffineSubspace(v({-1, -1, 0}), {v({0, 0, 1})}));
    EXPECT_EQ(omega_case_B(1, 2, 1).variety(), AffineSubspace::point(v({-2, -2})));
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p <= 2 && p < n; ++p)
            for (int i = 0; i <= std::min(p, n - p); ++i) {
                auto om = omega_case_B(i, n, p);
                EXPECT_EQ(om.dimension(), static_cast<std::size_t>(p - i));
                if (i > 0) EXPECT_EQ(om.variety(), case_B_variety(i, n, p)) << n << " " << p << " " << i;
            }
}

TEST(CaseB, LiteralGeneratorReadingDiffers) {
    // r = n - p - i >= 1 is where the two readings of the H_r generator part.
    EXPECT_NE(omega_case_B_literal(1, 3, 1), omega_case_B(1, 3, 1));
    EXPECT_EQ(omega_case_B_literal(0, 3, 1), omega_case_B(0, 3, 1));
    EXPECT_EQ(omega_case_B_literal(1, 2, 1), omega_case_B(1, 2, 1));
}

TEST(CaseB, Closures) {
    for (auto [n, p] : {std::pair{2, 1}, {3, 1}}) {
        auto r = closure_case_B(n, p, 3);
        EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 0}));
        EXPECT_TRUE(r.oracle_agreement && r.incomparable && r.stabilized);
    }
    auto full = closure_case_B(2, 2, 3);
    EXPECT_TRUE(full.full_space);
}

TEST(CaseB, ExplicitFcrWitness) {
    for (auto [n, p] : {std::pair{2, 1}, {3, 1}, {4, 2}}) {
        WeylGroup g(RootSystem::build(RootKind::C, n));
        auto c = case_B_fcr(g, n, p);
        EXPECT_TRUE(c.maps_to_omega0 && c.in_w_lambda && c.omega_strongly_dominant);
        EXPECT_EQ(c.verdict.status, FcrStatus::FCR);
    }
}

TEST(CaseB, OddKHasNoFiniteDimensionalQuotients) {
    for (auto [n, k] : {std::pair{2, 1}, {2, 3}, {3, 1}}) {
        WeylGroup g(RootSystem::build(RootKind::C, n));
        auto r = odd_k_case_B(g, n, k, 3);
        EXPECT_TRUE(r.certified) << n << " " << k;
        EXPECT_TRUE(r.lambda_empty) << n << " " << k;
        EXPECT_FALSE(r.components.empty());
        for (const auto& c : r.certificates) EXPECT_FALSE(is_integer(c.value));
    }
    WeylGroup g1(RootSystem::build(RootKind::C, 1));
    EXPECT_THROW(odd_k_case_B(g1, 1, 3, 3), std::invalid_argument);
}

TEST(Kernel, Reports) {
    auto a = kernel_report("A", 0, 3, 1, 1);
    EXPECT_TRUE(a.kernel_zero);
    auto b = kernel_report("B", 2, 2);
    EXPECT_FALSE(b.kernel_zero);
    EXPECT_EQ(b.dims, (std::vector<std::size_t>{1, 0}));
    ASSERT_TRUE(b.kernel_component);
    EXPECT_EQ(*b.kernel_component, 0u);
    EXPECT_TRUE(b.unique_max_dim);
    EXPECT_TRUE(kernel_report("B", 2, 4).kernel_zero);
    EXPECT_TRUE(kernel_report("C", 2, 3).kernel_zero);
    EXPECT_THROW(kernel_report("E", 2, 3), std::invalid_argument);
}

TEST(CaseC, Reports) {
    EXPECT_TRUE(case_C_report(2, 3).full);
    EXPECT_FALSE(case_C_report(3, 2).full);
    EXPECT_TRUE(case_C_report(3, 2).irreducible);
    EXPECT_TRUE(case_C_report(3, 2).fcr);
}
