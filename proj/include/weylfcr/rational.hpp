#pragma once

// Exact scalar and vector types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylfcr {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coordinates of a weight (or coweight) in the epsilon basis.
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// Largest integer not exceeding q.
inline Integer floor_of(const Rational& q) {
    Integer n = numerator_of(q);
    Integer d = denominator_of(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& q) {
    Integer d = denominator_of(q);
    if (d == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + d.str();
}

namespace detail {
inline Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits);
}
}  // namespace detail

/// Parses "p", "p/q" (any sign placement on p, q != 0). The result is canonical.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    Integer num = detail::parse_integer(s.substr(0, slash));
    Integer den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

/// A computed fact contradicts a statement the library checks at runtime.
/// `detail` carries the counterexample in readable form.
struct DivergenceError : std::logic_error {
    DivergenceError(const std::string& what, std::string detail_text)
        : std::logic_error(what), detail(std::move(detail_text)) {}
    std::string detail;
};

// ---- small vector algebra ------------------------------------------------

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rational(0)); }

inline RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec operator*(const Rational& s, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// a += s * b
inline void axpy(RatVec& a, const Rational& s, const RatVec& b) {
    if (s == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

inline RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    RatVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    RatMatrix r(n, zero_vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

inline RatMatrix transpose(const RatMatrix& a) {
    if (a.empty()) return {};
    RatMatrix t(a[0].size(), zero_vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Lexicographic order, so vectors can key ordered containers.
struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline std::vector<std::string> to_strings(const RatVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline std::string format_vec(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace weylfcr
