#include "weylfcr/exactlin.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace weylfcr;

namespace {

RatVec v(std::initializer_list<Rational> xs) { return RatVec(xs); }

// Independent rank: plain Gaussian elimination on a copy.
std::size_t naive_rank(RatMatrix m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto r = naive_rank(both);
    return naive_rank(a) == r && naive_rank(b) == r;
}

RatMatrix random_matrix(std::mt19937_64& eng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, RatVec(cols));
    for (auto& row : m)
        for (auto& x : row) x = Rational(static_cast<long long>(eng() % 7) - 3, static_cast<long long>(eng() % 3) + 1);
    return m;
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
    auto r = rref(identity_matrix(3));
    EXPECT_EQ(r.rows, identity_matrix(3));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, DependentRowsCollapse) {
    auto r = rref({v({1, 2}), v({2, 4})});
    ASSERT_EQ(r.pivots.size(), 1u);
    EXPECT_EQ(r.rows[0], v({1, 2}));
    EXPECT_TRUE(is_zero(r.rows[1]));
}

TEST(Rref, PreservesRowSpaceAndIsIdempotent) {
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(eng, 3, 5);
        auto r = rref(m);
        EXPECT_TRUE(same_row_space(m, r.rows));
        EXPECT_EQ(r.pivots.size(), naive_rank(m));
        EXPECT_EQ(rref(r.rows).rows, r.rows);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            for (std::size_t j = 0; j < r.rows.size(); ++j)
                EXPECT_EQ(r.rows[j][r.pivots[i]], i == j ? 1 : 0);
    }
}

TEST(NullSpace, AnnihilatesAndHasComplementaryDimension) {
    std::mt19937_64 eng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(eng, 2 + trial % 3, 5);
        auto ns = null_space(m, 5);
        EXPECT_EQ(ns.size() + naive_rank(m), 5u);
        for (const auto& x : ns)
            for (const auto& row : m) EXPECT_EQ(dot(row, x), 0);
    }
}

TEST(SolveAffine, SingleFunctional) {
    auto s = solve_affine({{v({1, 0}), 0}}, 2);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->dimension(), 1u);
    EXPECT_TRUE(s->contains(v({0, 7})));
    EXPECT_FALSE(s->contains(v({1, 0})));
}

TEST(SolveAffine, InconsistentIsEmpty) {
    EXPECT_FALSE(solve_affine({{v({1, 0}), 0}, {v({1, 0}), -1}}, 2));
}

TEST(SolveAffine, LineInThreeSpace) {
    // mu_1 + 1 = 0, mu_2 + 1 = 0 gives {(-1, -1, t)}.
    auto s = solve_affine({{v({1, 0, 0}), 1}, {v({0, 1, 0}), 1}}, 3);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->dimension(), 1u);
    EXPECT_EQ(s->base_point(), v({-1, -1, 0}));
    EXPECT_TRUE(s->contains(v({-1, -1, Rational(5, 3)})));
}

TEST(AffineSubspace, CanonicalFormIgnoresPresentation) {
    AffineSubspace a(v({1, 1, 0}), {v({1, 1, 0}), v({0, 0, 2})});
    AffineSubspace b(v({3, 3, 5}), {v({0, 0, 1}), v({-2, -2, 1})});
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.contains(b) && b.contains(a));
}

TEST(AffineSubspace, VanishingFunctionalsCutOutTheSubspace) {
    std::mt19937_64 eng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto dirs = random_matrix(eng, trial % 4, 4);
        auto base = random_matrix(eng, 1, 4)[0];
        AffineSubspace s(base, dirs);
        auto fs = s.vanishing_functionals();
        EXPECT_EQ(fs.size() + s.dimension(), 4u);
        auto back = solve_affine(fs, 4);
        ASSERT_TRUE(back);
        EXPECT_EQ(*back, s);
    }
}

TEST(IntegralPoints, WholePlane) {
    auto plane = AffineSubspace::whole_space(2);
    auto lat = integral_points(plane, {{v({1, 0}), 0}, {v({0, 1}), 0}});
    ASSERT_TRUE(lat);
    EXPECT_TRUE(lat->contains(v({3, -4})));
    EXPECT_FALSE(lat->contains(v({Rational(1, 2), 0})));
}

TEST(IntegralPoints, ShiftedLine) {
    // (t, t + 1/2): integral first coordinate, second is m + 1/2.
    AffineSubspace line(v({0, Rational(1, 2)}), {v({1, 1})});
    auto lat = integral_points(line, {{v({1, 0}), 0}});
    ASSERT_TRUE(lat);
    for (long long m = -3; m <= 3; ++m) EXPECT_TRUE(lat->contains(v({m, Rational(2 * m + 1, 2)})));
    EXPECT_FALSE(lat->contains(v({Rational(1, 3), Rational(5, 6)})));
}

TEST(IntegralPoints, IncompatibleConditionsAreEmpty) {
    // On (t, 2t), mu_1 in Z forces mu_2 even, so mu_2 - 1/2 is never integral.
    AffineSubspace line(v({0, 0}), {v({1, 2})});
    EXPECT_FALSE(integral_points(line, {{v({1, 0}), 0}, {v({0, 1}), Rational(-1, 2)}}));
}

TEST(IntegralPoints, ConstantFunctionalThrows) {
    AffineSubspace line(v({0, 0}), {v({1, 0})});
    EXPECT_THROW(integral_points(line, {{v({0, 1}), 0}}), std::invalid_argument);
}

TEST(IntegralPoints, AgreesWithGridSearch) {
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto dirs = random_matrix(eng, 2, 3);
        AffineSubspace s(random_matrix(eng, 1, 3)[0], dirs);
        if (s.dimension() != 2) continue;
        std::vector<AffineFunctional> fs;
        for (const auto& h : random_matrix(eng, 2, 3)) {
            if (s.restrict({h, 0}).is_constant()) continue;
            fs.push_back({h, 0});
        }
        if (fs.empty()) continue;
        auto lat = integral_points(s, fs);
        // Sample rational points of s with small denominators.
        for (long long a = -6; a <= 6; ++a)
            for (long long b = -6; b <= 6; ++b) {
                RatVec x = s.point_at(v({Rational(a, 6), Rational(b, 6)}));
                bool integral = true;
                for (const auto& f : fs) integral = integral && is_integer(f(x));
                EXPECT_EQ(lat.has_value() && lat->contains(x), integral);
            }
    }
}

TEST(Cone, CoordinateFunctionalsAreFullDimensional) {
    EXPECT_TRUE(cone_is_fulldim(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})}));
}

TEST(Cone, OppositePairIsFlat) {
    EXPECT_FALSE(cone_is_fulldim(2, {v({1, 0}), v({-1, 0})}));
    EXPECT_FALSE(positive_witness(2, {v({1, 0}), v({-1, 0})}));
}

TEST(Cone, ZeroFunctionalHasNoInterior) { EXPECT_FALSE(cone_is_fulldim(2, {v({0, 0})})); }

TEST(Cone, AgreesWithGridAndWitnessesAreValid) {
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        auto fs = random_matrix(eng, 2 + trial % 4, dim);
        bool grid = false;
        std::vector<long long> d(dim, -4);
        while (!grid) {
            RatVec x(d.begin(), d.end());
            bool all = true;
            for (const auto& f : fs) all = all && dot(f, x) > 0;
            grid = all;
            std::size_t i = 0;
            while (i < dim && d[i] == 4) d[i++] = -4;
            if (i == dim) break;
            ++d[i];
        }
        auto w = positive_witness(dim, fs);
        if (grid) EXPECT_TRUE(w.has_value());
        if (w)
            for (const auto& f : fs) EXPECT_GT(dot(f, *w), 0);
        EXPECT_EQ(cone_is_fulldim(dim, fs), w.has_value());
    }
}
