#pragma once

// Weyl groups of the classical systems: enumeration, inversion sets, reduced
// words, the dot action, and the subsystem-stabilizer machinery.

#include "weylfcr/rootsys.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylfcr {

/// Thrown when |W| exceeds the enumeration cap or the rank guard.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Weyl group element as an exact orthogonal matrix acting on Q^n.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(RatMatrix m) : m_(std::move(m)) {}

    static WeylElement identity(std::size_t n) { return WeylElement(identity_matrix(n)); }

    const RatMatrix& matrix() const { return m_; }
    RatVec apply(const RatVec& mu) const { return mat_vec(m_, mu); }
    WeylElement operator*(const WeylElement& o) const { return WeylElement(mat_mul(m_, o.m_)); }
    WeylElement inverse() const { return WeylElement(transpose(m_)); }
    bool operator==(const WeylElement& o) const { return m_ == o.m_; }

private:
    RatMatrix m_;
};

/// Reflection matrix of a root: mu -> mu - (mu, a^vee) a.
inline WeylElement reflection_element(const RootSystem& rs, std::size_t a) {
    const std::size_t n = rs.ambient_dim();
    RatMatrix m(n, zero_vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        RatVec col = reflect(rs, a, unit_vec(n, j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return WeylElement(std::move(m));
}

/// w.xi = w(xi + rho) - rho.
inline RatVec dot_apply(const RootSystem& rs, const WeylElement& w, const RatVec& xi) {
    return w.apply(xi + rs.rho()) - rs.rho();
}

inline std::size_t weyl_group_cap() {
    if (const char* s = std::getenv("WEYL_GROUP_CAP")) {
        try {
            long long v = std::stoll(s);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 10'000'000;
}

using Word = std::vector<int>;  // 1-based simple reflection indices

/// "s1 s3 s2"; the identity is the empty string.
inline std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += "s" + std::to_string(w[i]);
    }
    return s;
}

/// Accepts "s1 s3 s2", "1 3 2", "" or "e".
inline Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Word out;
    while (in >> tok) {
        if (tok == "e" || tok == "id") continue;
        std::string digits = (tok[0] == 's' || tok[0] == 'S') ? tok.substr(1) : tok;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed word token '" + tok + "'");
        out.push_back(std::stoi(digits));
    }
    return out;
}

/// The full Weyl group, enumerated breadth-first over simple reflections
/// (indices ascending), identity first. Elements are addressed by index.
class WeylGroup {
public:
    explicit WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)) {
        if (rs_->semisimple_rank() > 8) throw CapExceeded("rank guard: semisimple rank exceeds 8");
        if (rs_->weyl_order() > Integer(weyl_group_cap()))
            throw CapExceeded("Weyl group order " + rs_->weyl_order().str() + " exceeds cap " +
                              std::to_string(weyl_group_cap()));
        const std::size_t r = rs_->semisimple_rank();
        for (std::size_t i = 0; i < r; ++i) {
            auto s = reflection_element(*rs_, rs_->simple_indices()[i]);
            simple_perm_.push_back(root_permutation(s));
        }
        add(WeylElement::identity(rs_->ambient_dim()), identity_perm());
        for (std::size_t cur = 0; cur < elems_.size(); ++cur) {
            for (std::size_t i = 0; i < r; ++i) {
                Perm p = compose_perm(perms_[cur], simple_perm_[i]);
                if (lookup_.count(p)) continue;
                add(elems_[cur] * reflection_element(*rs_, rs_->simple_indices()[i]), std::move(p));
            }
        }
    }

    const RootSystem& rs() const { return *rs_; }
    RootSystemPtr rs_ptr() const { return rs_; }
    std::size_t size() const { return elems_.size(); }
    const WeylElement& element(std::size_t i) const { return elems_.at(i); }
    static constexpr std::size_t identity_index() { return 0; }

    /// Image of root index a under element w.
    std::size_t act_root(std::size_t w, std::size_t a) const { return perms_[w][a]; }

    std::size_t index_of(const WeylElement& w) const {
        auto it = lookup_.find(root_permutation(w));
        if (it == lookup_.end()) throw std::invalid_argument("matrix is not an element of the Weyl group");
        return it->second;
    }

    std::size_t multiply(std::size_t a, std::size_t b) const {
        return lookup_.at(compose_perm(perms_[a], perms_[b]));
    }

    std::size_t inverse(std::size_t a) const {
        const Perm& p = perms_[a];
        Perm inv(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint16_t>(i);
        return lookup_.at(inv);
    }

    std::size_t simple_reflection(std::size_t i) const { return lookup_.at(simple_perm_.at(i)); }

    std::size_t reflection(std::size_t root) const {
        return lookup_.at(root_permutation(reflection_element(*rs_, root)));
    }

    /// Q(w) = {a in R+ : w a in -R+}, as sorted root indices.
    std::vector<std::size_t> inversion_set(std::size_t w) const {
        std::vector<std::size_t> out;
        for (std::size_t a = 0; a < rs_->num_positive(); ++a)
            if (!rs_->is_positive(perms_[w][a])) out.push_back(a);
        return out;
    }

    std::size_t length(std::size_t w) const { return inversion_set(w).size(); }

    /// Index of the longest element.
    std::size_t longest() const {
        std::size_t best = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (length(i) > length(best)) best = i;
        return best;
    }

    /// Repeatedly strips the smallest right descent: word(w) = word(w s_i) + [i].
    Word reduced_word(std::size_t w) const {
        Word rev;
        std::size_t cur = w;
        while (cur != identity_index()) {
            std::size_t i = 0;
            while (rs_->is_positive(perms_[cur][rs_->simple_indices()[i]])) ++i;
            rev.push_back(static_cast<int>(i + 1));
            cur = multiply(cur, simple_reflection(i));
        }
        return Word(rev.rbegin(), rev.rend());
    }

    std::size_t compose_word(const Word& word) const {
        std::size_t cur = identity_index();
        for (int i : word) {
            if (i < 1 || static_cast<std::size_t>(i) > rs_->semisimple_rank())
                throw std::invalid_argument("simple reflection index s" + std::to_string(i) + " out of range");
            cur = multiply(cur, simple_reflection(static_cast<std::size_t>(i - 1)));
        }
        return cur;
    }

    std::string word_string(std::size_t w) const { return format_word(reduced_word(w)); }

    /// Subgroup generated by the reflections in the given roots.
    std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& roots) const {
        std::vector<std::size_t> gens;
        for (auto a : roots) gens.push_back(reflection(a));
        std::vector<std::size_t> out{identity_index()};
        std::set<std::size_t> seen{identity_index()};
        for (std::size_t cur = 0; cur < out.size(); ++cur)
            for (auto g : gens) {
                std::size_t x = multiply(out[cur], g);
                if (seen.insert(x).second) out.push_back(x);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    using Perm = std::vector<std::uint16_t>;

    Perm identity_perm() const {
        Perm p(rs_->num_roots());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint16_t>(i);
        return p;
    }

    Perm root_permutation(const WeylElement& w) const {
        Perm p(rs_->num_roots());
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto img = rs_->index_of(w.apply(rs_->root(i)));
            if (!img) throw std::invalid_argument("matrix does not permute the roots");
            p[i] = static_cast<std::uint16_t>(*img);
        }
        return p;
    }

    static Perm compose_perm(const Perm& a, const Perm& b) {
        Perm c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    }

    void add(WeylElement w, Perm p) {
        lookup_.emplace(p, elems_.size());
        perms_.push_back(std::move(p));
        elems_.push_back(std::move(w));
    }

    RootSystemPtr rs_;
    std::vector<WeylElement> elems_;
    std::vector<Perm> perms_;
    std::vector<Perm> simple_perm_;
    std::map<Perm, std::size_t> lookup_;
};

inline RatVec root_sum(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    RatVec s = zero_vec(rs.ambient_dim());
    for (auto a : roots) s = s + rs.root(a);
    return s;
}

/// Sum of Q(w); throws std::logic_error if it differs from rho - w^{-1} rho.
inline RatVec rho_difference(const WeylGroup& g, std::size_t w) {
    const auto& rs = g.rs();
    RatVec s = root_sum(rs, g.inversion_set(w));
    RatVec expected = rs.rho() - g.element(g.inverse(w)).apply(rs.rho());
    if (s != expected) throw std::logic_error("rho - w^-1 rho differs from the inversion sum for " + g.word_string(w));
    return s;
}

/// w(R1) = R1.
inline bool stabilizes(const WeylGroup& g, const Subsystem& sub, std::size_t w) {
    for (auto a : sub.roots)
        if (!sub.contains(g.act_root(w, a))) return false;
    return true;
}

/// w(B1) = B1 as sets.
inline bool fixes_simple_set(const WeylGroup& g, const Subsystem& sub, std::size_t w) {
    std::vector<std::size_t> img;
    for (auto b : sub.simple) img.push_back(g.act_root(w, b));
    std::sort(img.begin(), img.end());
    std::vector<std::size_t> b = sub.simple;
    std::sort(b.begin(), b.end());
    return img == b;
}

/// w maps every root of the given list into R+.
inline bool maps_into_positive(const WeylGroup& g, const std::vector<std::size_t>& roots, std::size_t w) {
    for (auto a : roots)
        if (!g.rs().is_positive(g.act_root(w, a))) return false;
    return true;
}

/// T(w) = {a in R1+ : w a in -R1+}; throws std::logic_error if the rho'
/// identity fails, std::invalid_argument if w does not stabilize R1.
inline std::vector<std::size_t> subsystem_inversions(const WeylGroup& g, const Subsystem& sub, std::size_t w) {
    if (!stabilizes(g, sub, w)) throw std::invalid_argument("element does not stabilize the subsystem");
    const auto& rs = g.rs();
    std::vector<std::size_t> t;
    for (auto a : sub.positive)
        if (!rs.is_positive(g.act_root(w, a))) t.push_back(a);
    RatVec lhs = sub.rho_prime - g.element(g.inverse(w)).apply(sub.rho_prime);
    if (lhs != root_sum(rs, t)) throw std::logic_error("rho' identity fails for " + g.word_string(w));
    return t;
}

/// (rho', <Q(w)>) for w stabilizing R1.
inline Rational inversion_sum_pairing(const WeylGroup& g, const Subsystem& sub, std::size_t w) {
    if (!stabilizes(g, sub, w)) throw std::invalid_argument("element does not stabilize the subsystem");
    return dot(sub.rho_prime, root_sum(g.rs(), g.inversion_set(w)));
}

struct StabilizerDecomposition {
    std::vector<std::size_t> w0;  // {w : w(R1) = R1}
    std::vector<std::size_t> w1;  // generated by reflections in B1
    std::vector<std::size_t> t;   // {w : w(B1) = B1}
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> factor;  // w -> (w1, t), w = w1 t
    bool bijective = true;
    bool length_additive = true;
};

inline StabilizerDecomposition stabilizer_decomposition(const WeylGroup& g, const Subsystem& sub) {
    StabilizerDecomposition d;
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (!stabilizes(g, sub, w)) continue;
        d.w0.push_back(w);
        if (fixes_simple_set(g, sub, w)) d.t.push_back(w);
    }
    d.w1 = g.generated_subgroup(sub.simple);
    std::set<std::size_t> w1set(d.w1.begin(), d.w1.end());
    std::set<std::size_t> w0set(d.w0.begin(), d.w0.end());
    std::map<std::size_t, int> hits;
    for (auto a : d.w1)
        for (auto b : d.t) {
            std::size_t prod = g.multiply(a, b);
            if (!w0set.count(prod)) d.bijective = false;
            if (++hits[prod] == 1) d.factor[prod] = {a, b};
            if (g.length(prod) != g.length(a) + g.length(b)) d.length_additive = false;
        }
    if (hits.size() != d.w0.size()) d.bijective = false;
    for (const auto& [w, c] : hits)
        if (c != 1) d.bijective = false;
    return d;
}

/// Checks that a -> v a (v the longest element of W1) permutes Q(t), swaps the
/// positive and negative rho'-pairing parts, and that (rho', <Q(t)>) = 0.
inline bool kappa_check(const WeylGroup& g, const Subsystem& sub, std::size_t t) {
    if (!fixes_simple_set(g, sub, t)) throw std::invalid_argument("kappa_check: t does not fix B1");
    auto w1 = g.generated_subgroup(sub.simple);
    std::size_t v = w1.front();
    for (auto x : w1)
        if (g.length(x) > g.length(v)) v = x;
    const auto& rs = g.rs();
    auto q = g.inversion_set(t);
    std::set<std::size_t> qs(q.begin(), q.end());
    std::set<std::size_t> image;
    for (auto a : q) {
        std::size_t b = g.act_root(v, a);
        if (!qs.count(b)) return false;
        Rational pa = dot(sub.rho_prime, rs.root(a));
        Rational pb = dot(sub.rho_prime, rs.root(b));
        if (pa != -pb) return false;
        image.insert(b);
    }
    if (image != qs) return false;
    return dot(sub.rho_prime, root_sum(rs, q)) == 0;
}

/// W_lambda generated by reflections in b_lambda; W^lambda membership is
/// w(b_lambda) subset of R+.
inline bool in_min_coset_reps(const WeylGroup& g, const std::vector<std::size_t>& b_lambda, std::size_t w) {
    return maps_into_positive(g, b_lambda, w);
}

/// w = u v with u in W^lambda and v in W_lambda; throws if not unique.
inline std::pair<std::size_t, std::size_t> coset_decompose(const WeylGroup& g, const std::vector<std::size_t>& b_lambda,
                                                           std::size_t w) {
    for (auto b : b_lambda)
        if (!g.rs().is_positive(b)) throw std::invalid_argument("coset_decompose: B_lambda must be positive roots");
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (auto v : g.generated_subgroup(b_lambda)) {
        std::size_t u = g.multiply(w, g.inverse(v));
        if (!in_min_coset_reps(g, b_lambda, u)) continue;
        if (found) throw std::logic_error("coset_decompose: factorization is not unique");
        found = {u, v};
    }
    if (!found) throw std::logic_error("coset_decompose: no factorization found");
    return *found;
}

/// tau(w) = {a in B_Lambda : w a in -R+} under the linear action.
inline std::vector<std::size_t> tau_invariant(const WeylGroup& g, const std::vector<std::size_t>& b_lambda, std::size_t w) {
    std::vector<std::size_t> out;
    for (auto a : b_lambda)
        if (!g.rs().is_positive(g.act_root(w, a))) out.push_back(a);
    return out;
}

}  // namespace weylfcr
