#pragma once

// Exact rational linear algebra: row reduction, affine subspaces, integer
// points of affine subspaces and full-dimensionality of polyhedral cones.

#include "weylfcr/rational.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weylfcr {

struct RrefResult {
    RatMatrix rows;                    // same shape as the input; zero rows at the bottom
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(RatMatrix m) {
    RrefResult out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank_of(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
inline RatMatrix row_space_basis(const RatMatrix& m) {
    auto r = rref(m);
    r.rows.resize(r.pivots.size());
    return r.rows;
}

/// Basis of {x : m x = 0}, one vector per free column.
inline RatMatrix null_space(const RatMatrix& m, std::size_t cols) {
    auto r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v = zero_vec(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = y with free variables set to zero, if any exists.
inline std::optional<RatVec> solve_particular(const RatMatrix& m, const RatVec& y, std::size_t cols) {
    RatMatrix aug;
    aug.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        RatVec row = m[i];
        row.push_back(y.at(i));
        aug.push_back(std::move(row));
    }
    auto r = rref(aug);
    RatVec x = zero_vec(cols);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == cols) return std::nullopt;
        x[r.pivots[i]] = r.rows[i][cols];
    }
    return x;
}

/// The affine map mu -> h . mu + c.
struct AffineFunctional {
    RatVec h;
    Rational c = 0;

    Rational operator()(const RatVec& mu) const { return dot(h, mu) + c; }
    bool operator==(const AffineFunctional&) const = default;
};

/// A functional pulled back along t -> base + sum t_i d_i.
struct RestrictedFunctional {
    RatVec linear;  // one coefficient per direction vector
    Rational constant;

    bool is_constant() const { return is_zero(linear); }
};

/// Nonempty affine subspace of Q^n held in a unique canonical form: the
/// direction basis is in reduced echelon form and the base point vanishes in
/// every pivot column of that basis.
class AffineSubspace {
public:
    AffineSubspace(RatVec base, RatMatrix directions) {
        n_ = base.size();
        for (const auto& d : directions)
            if (d.size() != n_) throw std::invalid_argument("AffineSubspace: dimension mismatch");
        auto r = rref(std::move(directions));
        r.rows.resize(r.pivots.size());
        dirs_ = std::move(r.rows);
        pivots_ = std::move(r.pivots);
        for (std::size_t i = 0; i < dirs_.size(); ++i) axpy(base, -base[pivots_[i]], dirs_[i]);
        base_ = std::move(base);
    }

    static AffineSubspace whole_space(std::size_t n) {
        RatMatrix dirs;
        for (std::size_t i = 0; i < n; ++i) dirs.push_back(unit_vec(n, i));
        return AffineSubspace(zero_vec(n), std::move(dirs));
    }

    static AffineSubspace point(RatVec p) { return AffineSubspace(std::move(p), {}); }

    const RatVec& base_point() const { return base_; }
    const RatMatrix& direction_basis() const { return dirs_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dimension() const { return dirs_.size(); }

    RatVec point_at(const RatVec& coeffs) const {
        RatVec p = base_;
        for (std::size_t i = 0; i < dirs_.size(); ++i) axpy(p, coeffs.at(i), dirs_[i]);
        return p;
    }

    /// Coordinates of x along the direction basis after removing the base point,
    /// or nullopt when x is not in the subspace.
    std::optional<RatVec> coordinates_of(const RatVec& x) const {
        if (x.size() != n_) throw std::invalid_argument("coordinates_of: dimension mismatch");
        RatVec rest = x - base_;
        RatVec coeffs(dirs_.size());
        for (std::size_t i = 0; i < dirs_.size(); ++i) {
            coeffs[i] = rest[pivots_[i]];
            axpy(rest, -coeffs[i], dirs_[i]);
        }
        if (!is_zero(rest)) return std::nullopt;
        return coeffs;
    }

    bool contains(const RatVec& x) const { return coordinates_of(x).has_value(); }

    bool contains(const AffineSubspace& other) const {
        if (other.n_ != n_) return false;
        if (!contains(other.base_)) return false;
        for (const auto& d : other.dirs_)
            if (!contains(base_ + d)) return false;
        return true;
    }

    RestrictedFunctional restrict(const AffineFunctional& f) const {
        RestrictedFunctional r;
        r.constant = f(base_);
        r.linear.reserve(dirs_.size());
        for (const auto& d : dirs_) r.linear.push_back(dot(f.h, d));
        return r;
    }

    /// Reduced echelon basis of the affine functionals (h, c) vanishing here.
    std::vector<AffineFunctional> vanishing_functionals() const {
        RatMatrix hs = null_space(dirs_, n_);
        RatMatrix rows;
        for (auto& h : hs) {
            Rational c = -dot(h, base_);
            h.push_back(c);
            rows.push_back(std::move(h));
        }
        std::vector<AffineFunctional> out;
        for (auto& row : row_space_basis(rows)) {
            Rational c = row.back();
            row.pop_back();
            out.push_back({std::move(row), c});
        }
        return out;
    }

    bool operator==(const AffineSubspace& o) const {
        return n_ == o.n_ && base_ == o.base_ && dirs_ == o.dirs_;
    }

private:
    std::size_t n_ = 0;
    RatVec base_;
    RatMatrix dirs_;
    std::vector<std::size_t> pivots_;
};

/// Zero set of a family of affine functionals, or nullopt when inconsistent.
inline std::optional<AffineSubspace> solve_affine(const std::vector<AffineFunctional>& fs, std::size_t n) {
    RatMatrix aug;
    for (const auto& f : fs) {
        if (f.h.size() != n) throw std::invalid_argument("solve_affine: functional dimension mismatch");
        RatVec row = f.h;
        row.push_back(-f.c);
        aug.push_back(std::move(row));
    }
    auto r = rref(aug);
    RatVec base = zero_vec(n);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == n) return std::nullopt;
        base[r.pivots[i]] = r.rows[i][n];
    }
    RatMatrix coeffs;
    coeffs.reserve(r.pivots.size());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        RatVec row = r.rows[i];
        row.pop_back();
        coeffs.push_back(std::move(row));
    }
    return AffineSubspace(std::move(base), null_space(coeffs, n));
}

/// Smallest affine subspace containing the points; nullopt for no points.
inline std::optional<AffineSubspace> affine_hull(const std::vector<RatVec>& points) {
    if (points.empty()) return std::nullopt;
    RatMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
    return AffineSubspace(points[0], std::move(dirs));
}

/// Incremental affine hull; cheap when many points are redundant.
class HullBuilder {
public:
    explicit HullBuilder(std::size_t n) : n_(n) {}

    void add(const RatVec& p) {
        if (!base_) {
            base_ = p;
            return;
        }
        RatVec v = p - *base_;
        for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, -v[piv_[i]], basis_[i]);
        std::size_t k = 0;
        while (k < v.size() && v[k] == 0) ++k;
        if (k == v.size()) return;
        Rational inv = 1 / v[k];
        for (auto& x : v) x *= inv;
        for (auto& b : basis_) axpy(b, -b[k], v);
        basis_.push_back(std::move(v));
        piv_.push_back(k);
    }

    bool empty() const { return !base_.has_value(); }
    std::size_t dimension() const { return basis_.size(); }

    std::optional<AffineSubspace> hull() const {
        if (!base_) return std::nullopt;
        return AffineSubspace(*base_, basis_);
    }

private:
    std::size_t n_;
    std::optional<RatVec> base_;
    RatMatrix basis_;
    std::vector<std::size_t> piv_;
};

// ---- integer linear systems ----------------------------------------------

using IntVec = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;

struct ExtGcd {
    Integer g, x, y;  // x a + y b = g >= 0
};

inline ExtGcd ext_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Floor division for integers.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

struct IntegerSolution {
    IntVec particular;
    IntMatrix kernel;  // lattice basis of {z : N z = 0}
};

/// All integer z with n z = g, via column-style Hermite triangularization
/// n U = [H | 0] with U unimodular.
inline std::optional<IntegerSolution> solve_integer_system(const IntMatrix& n, const IntVec& g, std::size_t cols) {
    IntMatrix h = n;
    IntMatrix u(cols, IntVec(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_combine = [&](std::size_t p, std::size_t j, const Integer& a11, const Integer& a12,
                           const Integer& a21, const Integer& a22) {
        // new col p = a11 col p + a12 col j ; new col j = a21 col p + a22 col j
        auto apply = [&](IntMatrix& m) {
            for (auto& row : m) {
                Integer cp = row[p], cj = row[j];
                row[p] = a11 * cp + a12 * cj;
                row[j] = a21 * cp + a22 * cj;
            }
        };
        apply(h);
        apply(u);
    };

    struct PivotRow {
        std::size_t row, col;
    };
    std::vector<PivotRow> pivots;
    std::vector<std::size_t> loose_rows;
    std::size_t p = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (p == cols) {
            loose_rows.push_back(i);
            continue;
        }
        for (std::size_t j = p + 1; j < cols; ++j) {
            if (h[i][j] == 0) continue;
            Integer a = h[i][p], b = h[i][j];
            auto e = ext_gcd(a, b);
            col_combine(p, j, e.x, e.y, -b / e.g, a / e.g);
        }
        if (h[i][p] == 0) {
            loose_rows.push_back(i);
            continue;
        }
        if (h[i][p] < 0)
            for (auto* m : {&h, &u})
                for (auto& row : *m) row[p] = -row[p];
        pivots.push_back({i, p});
        ++p;
    }

    IntVec x(cols, Integer(0));
    for (const auto& pr : pivots) {
        Integer rhs = g[pr.row];
        for (std::size_t j = 0; j < pr.col; ++j) rhs -= h[pr.row][j] * x[j];
        if (rhs % h[pr.row][pr.col] != 0) return std::nullopt;
        x[pr.col] = rhs / h[pr.row][pr.col];
    }
    for (auto i : loose_rows) {
        Integer lhs = 0;
        for (std::size_t j = 0; j < p; ++j) lhs += h[i][j] * x[j];
        if (lhs != g[i]) return std::nullopt;
    }

    IntegerSolution sol;
    sol.particular.assign(cols, Integer(0));
    for (std::size_t r = 0; r < cols; ++r)
        for (std::size_t j = 0; j < p; ++j) sol.particular[r] += u[r][j] * x[j];
    for (std::size_t j = p; j < cols; ++j) {
        IntVec k(cols);
        for (std::size_t r = 0; r < cols; ++r) k[r] = u[r][j];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

/// Row-style Hermite normal form of an integer matrix; zero rows dropped.
/// Pivots are positive and entries above a pivot lie in [0, pivot).
inline IntMatrix hermite_rows(IntMatrix m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Integer a = m[r][c], b = m[i][c];
            auto e = ext_gcd(a, b);
            Integer a21 = -b / e.g, a22 = a / e.g;
            for (std::size_t j = 0; j < cols; ++j) {
                Integer x = m[r][j], y = m[i][j];
                m[r][j] = e.x * x + e.y * y;
                m[i][j] = a21 * x + a22 * y;
            }
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (auto& x : m[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(m[i][c], m[r][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    m.resize(r);
    return m;
}

/// Integer multiple of a rational row clearing its denominators, with the factor.
inline std::pair<IntVec, Integer> clear_denominators(const RatVec& v) {
    Integer l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator_of(x));
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(numerator_of(x) * (l / denominator_of(x)));
    return {out, l};
}

/// Points base + sum n_i lattice_i + sum t_j free_j (n_i integers, t_j rational).
/// free_basis spans the directions along which no integrality was imposed.
class AffineLattice {
public:
    AffineLattice(RatVec base, RatMatrix lattice, RatMatrix free) {
        const std::size_t n = base.size();
        auto fr = rref(std::move(free));
        fr.rows.resize(fr.pivots.size());
        free_ = std::move(fr.rows);
        free_piv_ = std::move(fr.pivots);
        auto reduce_free = [&](RatVec& v) {
            for (std::size_t i = 0; i < free_.size(); ++i) axpy(v, -v[free_piv_[i]], free_[i]);
        };
        reduce_free(base);
        for (auto& l : lattice) reduce_free(l);

        Integer den = 1;
        for (const auto& l : lattice)
            for (const auto& x : l) den = boost::multiprecision::lcm(den, denominator_of(x));
        IntMatrix im;
        for (const auto& l : lattice) {
            IntVec row;
            for (const auto& x : l) row.push_back(numerator_of(x) * (den / denominator_of(x)));
            im.push_back(std::move(row));
        }
        for (auto& row : hermite_rows(std::move(im))) {
            RatVec v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = Rational(row[j], den);
            std::size_t pc = 0;
            while (v[pc] == 0) ++pc;
            lat_piv_.push_back(pc);
            lattice_.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < lattice_.size(); ++i) {
            Integer q = floor_of(base[lat_piv_[i]] / lattice_[i][lat_piv_[i]]);
            axpy(base, -Rational(q), lattice_[i]);
        }
        base_ = std::move(base);
    }

    const RatVec& base_point() const { return base_; }
    const RatMatrix& lattice_basis() const { return lattice_; }
    const RatMatrix& free_basis() const { return free_; }

    RatVec point_at(const std::vector<long long>& ns) const {
        RatVec p = base_;
        for (std::size_t i = 0; i < lattice_.size(); ++i) axpy(p, Rational(ns.at(i)), lattice_[i]);
        return p;
    }

    bool contains(const RatVec& x) const {
        RatVec v = x - base_;
        for (std::size_t i = 0; i < free_.size(); ++i) axpy(v, -v[free_piv_[i]], free_[i]);
        for (std::size_t i = 0; i < lattice_.size(); ++i) {
            Rational coeff = v[lat_piv_[i]] / lattice_[i][lat_piv_[i]];
            if (!is_integer(coeff)) return false;
            axpy(v, -coeff, lattice_[i]);
        }
        return is_zero(v);
    }

    bool operator==(const AffineLattice& o) const {
        return base_ == o.base_ && lattice_ == o.lattice_ && free_ == o.free_;
    }

private:
    RatVec base_;
    RatMatrix lattice_;
    RatMatrix free_;
    std::vector<std::size_t> free_piv_;
    std::vector<std::size_t> lat_piv_;
};

/// {v in space : f_j(v) in Z for all j}. Throws when a functional is constant
/// on the space; constant functionals must be filtered by the caller.
inline std::optional<AffineLattice> integral_points(const AffineSubspace& space,
                                                    const std::vector<AffineFunctional>& fs) {
    const std::size_t d = space.dimension();
    const std::size_t m = fs.size();
    RatMatrix a;
    RatVec c;
    for (const auto& f : fs) {
        auto r = space.restrict(f);
        if (r.is_constant()) throw std::invalid_argument("integral_points: functional is constant on the subspace");
        a.push_back(std::move(r.linear));
        c.push_back(r.constant);
    }
    // z = A t + c must be an integer vector lying in c + Col(A).
    RatMatrix left_null = null_space(transpose(a), m);
    IntMatrix n_int;
    IntVec g_int;
    for (const auto& y : left_null) {
        auto [row, scale] = clear_denominators(y);
        Rational g = dot(y, c) * Rational(scale);
        if (!is_integer(g)) return std::nullopt;
        n_int.push_back(std::move(row));
        g_int.push_back(numerator_of(g));
    }
    auto sol = solve_integer_system(n_int, g_int, m);
    if (!sol) return std::nullopt;

    auto to_rat = [](const IntVec& v) {
        RatVec r;
        r.reserve(v.size());
        for (const auto& x : v) r.emplace_back(x);
        return r;
    };
    auto lift = [&](const RatVec& y) {  // t with A t = y, mapped into the ambient space
        auto t = solve_particular(a, y, d);
        if (!t) throw std::logic_error("integral_points: lattice vector outside the column space");
        return *t;
    };
    auto to_ambient_dir = [&](const RatVec& t) {
        RatVec v = zero_vec(space.ambient_dim());
        for (std::size_t i = 0; i < d; ++i) axpy(v, t[i], space.direction_basis()[i]);
        return v;
    };

    RatVec base = space.point_at(lift(to_rat(sol->particular) - c));
    RatMatrix lattice;
    for (const auto& k : sol->kernel) lattice.push_back(to_ambient_dir(lift(to_rat(k))));
    RatMatrix free;
    for (const auto& k : null_space(a, d)) free.push_back(to_ambient_dir(k));
    return AffineLattice(std::move(base), std::move(lattice), std::move(free));
}

// ---- cones ---------------------------------------------------------------

namespace detail {

/// Row a . x >= b.
struct Ineq {
    RatVec a;
    Rational b;
};

inline void normalize(Ineq& q) {
    Rational scale = 0;
    for (const auto& x : q.a)
        if (x != 0) {
            scale = abs(x);
            break;
        }
    if (scale == 0) return;
    for (auto& x : q.a) x /= scale;
    q.b /= scale;
}

}  // namespace detail

/// A point d with f_j . d > 0 for every j, found by Fourier-Motzkin elimination
/// of the homogeneous system f_j . d >= 1; nullopt when none exists.
inline std::optional<RatVec> positive_witness(std::size_t dim, const std::vector<RatVec>& fs) {
    using detail::Ineq;
    std::vector<std::vector<Ineq>> stages;
    std::vector<Ineq> sys;
    for (const auto& f : fs) {
        if (f.size() != dim) throw std::invalid_argument("positive_witness: dimension mismatch");
        sys.push_back({f, Rational(1)});
    }
    for (std::size_t step = 0; step < dim; ++step) {
        const std::size_t var = dim - 1 - step;
        stages.push_back(sys);
        std::vector<Ineq> pos, neg, next;
        for (auto& q : sys) {
            if (q.a[var] > 0)
                pos.push_back(q);
            else if (q.a[var] < 0)
                neg.push_back(q);
            else
                next.push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational sp = 1 / p.a[var], sq = -1 / q.a[var];
                Ineq r{sp * p.a + sq * q.a, sp * p.b + sq * q.b};
                r.a[var] = 0;
                next.push_back(std::move(r));
            }
        std::set<std::pair<RatVec, Rational>, std::less<>> seen;
        sys.clear();
        for (auto& q : next) {
            detail::normalize(q);
            if (is_zero(q.a)) {
                if (q.b > 0) return std::nullopt;
                continue;
            }
            auto key = std::make_pair(q.a, q.b);
            if (seen.insert(key).second) sys.push_back(std::move(q));
        }
    }
    for (const auto& q : sys)
        if (q.b > 0) return std::nullopt;

    RatVec x = zero_vec(dim);
    for (std::size_t var = 0; var < dim; ++var) {
        const auto& stage = stages[dim - 1 - var];
        std::optional<Rational> lo, hi;
        for (const auto& q : stage) {
            if (q.a[var] == 0) continue;
            Rational rest = q.b;
            for (std::size_t j = 0; j < var; ++j) rest -= q.a[j] * x[j];
            Rational bound = rest / q.a[var];
            if (q.a[var] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo)
            x[var] = *lo;
        else if (hi)
            x[var] = *hi;
    }
    for (const auto& f : fs)
        if (dot(f, x) <= 0) throw std::logic_error("positive_witness: back-substitution produced an invalid point");
    return x;
}

/// True iff the cone {f_j >= 0} has nonempty interior.
inline bool cone_is_fulldim(std::size_t dim, const std::vector<RatVec>& fs) {
    return positive_witness(dim, fs).has_value();
}

}  // namespace weylfcr
