#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/rational.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {

/// Basis symbol t^beta d^gamma of the Weyl algebra K_n^+, already in
/// normal order (every t to the left of every d).
struct WeylKey {
    MultiIndex beta;
    MultiIndex gamma;

    bool operator==(const WeylKey& o) const { return beta == o.beta && gamma == o.gamma; }
};

struct WeylKeyLess {
    bool operator()(const WeylKey& a, const WeylKey& b) const {
        auto c = lex_compare(a.beta, b.beta);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return lex_compare(a.gamma, b.gamma) == std::strong_ordering::less;
    }
};

/// Element of K_n^+ as a rational combination of normal-ordered symbols.
/// Zero coefficients are dropped eagerly, so equality is structural.
class WeylElement {
public:
    using TermMap = std::map<WeylKey, Rational, WeylKeyLess>;

    explicit WeylElement(int n) : n_(n) {
        if (n < 1) throw RangeError("weyl element needs arity >= 1");
    }

    static WeylElement basis(const MultiIndex& beta, const MultiIndex& gamma) {
        require_same_arity(beta, gamma);
        WeylElement a(beta.arity());
        a.add_term(beta, gamma, 1);
        return a;
    }

    static WeylElement one(int n) {
        return basis(MultiIndex::zero(n), MultiIndex::zero(n));
    }

    static WeylElement t_power(const MultiIndex& beta) {
        return basis(beta, MultiIndex::zero(beta.arity()));
    }

    static WeylElement d_power(const MultiIndex& gamma) {
        return basis(MultiIndex::zero(gamma.arity()), gamma);
    }

    /// Image of a polynomial vector field under t^a d_i -> t^a d^{e_i}.
    static WeylElement from_witt(const WittElement& x) {
        WeylElement a(x.arity());
        for (const auto& [key, c] : x.terms())
            a.add_term(key.alpha, MultiIndex::unit(x.arity(), key.dir), c);
        return a;
    }

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const MultiIndex& beta, const MultiIndex& gamma, const Rational& c) {
        if (beta.arity() != n_ || gamma.arity() != n_)
            throw ArityError("weyl term arity mismatch");
        if (c == 0) return;
        WeylKey key{beta, gamma};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeylElement operator+(const WeylElement& o) const {
        if (o.n_ != n_) throw ArityError("weyl arity mismatch");
        WeylElement out = *this;
        for (const auto& [k, c] : o.terms_) out.add_term(k.beta, k.gamma, c);
        return out;
    }

    WeylElement operator-(const WeylElement& o) const { return *this + o.scaled(-1); }

    WeylElement scaled(const Rational& c) const {
        WeylElement out(n_);
        if (c == 0) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    bool operator==(const WeylElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += format_rational(c) + "*t^" + k.beta.to_string() + "d^" + k.gamma.to_string();
        }
        return s;
    }

private:
    int n_;
    TermMap terms_;
};

namespace detail {

/// Coefficients A_k with d^b t^c = sum_k A_k t^{c-k} d^{b-k} in one
/// variable, produced by the elementary rewriting d t -> t d + 1. The
/// recursion peels one d at a time, so the result is literally the normal
/// form the rewriting system reaches.
inline std::vector<Integer> one_variable_normal_order(int b, int c) {
    if (b == 0 || c == 0) return {Integer(1)};
    std::vector<Integer> tail = one_variable_normal_order(b - 1, c);
    std::vector<Integer> lower = one_variable_normal_order(b - 1, c - 1);
    std::vector<Integer> out(std::min(b, c) + 1, Integer(0));
    for (std::size_t k = 0; k < tail.size(); ++k) out[k] += tail[k];
    for (std::size_t k = 0; k < lower.size(); ++k) out[k + 1] += Integer(c) * lower[k];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

} // namespace detail

/// Product in K_n^+. Each cross term d^b t^c is driven to normal order by
/// the one-variable rewriting, independently per variable.
inline WeylElement weyl_multiply(const WeylElement& x, const WeylElement& y) {
    if (x.arity() != y.arity()) throw ArityError("weyl product arity mismatch");
    const int n = x.arity();
    WeylElement out(n);
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            // (t^a d^b)(t^c d^d): normal order d^b t^c, then attach the
            // outer factors by exponent addition.
            std::vector<std::pair<std::vector<int>, Integer>> combos{{{}, Integer(1)}};
            for (int i = 0; i < n; ++i) {
                auto coeffs = detail::one_variable_normal_order(kx.gamma[i], ky.beta[i]);
                std::vector<std::pair<std::vector<int>, Integer>> next;
                for (const auto& [ks, acc] : combos)
                    for (std::size_t k = 0; k < coeffs.size(); ++k) {
                        if (coeffs[k] == 0) continue;
                        auto ks2 = ks;
                        ks2.push_back(static_cast<int>(k));
                        next.emplace_back(std::move(ks2), acc * coeffs[k]);
                    }
                combos = std::move(next);
            }
            const Rational c = cx * cy;
            for (const auto& [ks, acc] : combos) {
                std::vector<int> beta(static_cast<std::size_t>(n)), gamma(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    beta[static_cast<std::size_t>(i)] = kx.beta[i] + ky.beta[i] - ks[static_cast<std::size_t>(i)];
                    gamma[static_cast<std::size_t>(i)] = kx.gamma[i] + ky.gamma[i] - ks[static_cast<std::size_t>(i)];
                }
                out.add_term(MultiIndex(beta), MultiIndex(gamma), c * Rational(acc));
            }
        }
    }
    return out;
}

/// Vector in P_0 = K_n^+ / sum_i K_n^+ t_i, written on the basis of
/// classes dbar^alpha. As a vector space this is the polynomial ring in
/// the d's; the K_n^+ action twists multiplication by t into differencing.
class P0Vector {
public:
    using TermMap = std::map<MultiIndex, Rational, MultiIndexLexLess>;

    explicit P0Vector(int n) : n_(n) {
        if (n < 1) throw RangeError("p0 vector needs arity >= 1");
    }

    static P0Vector monomial(const MultiIndex& alpha, const Rational& c) {
        P0Vector v(alpha.arity());
        v.add_term(alpha, c);
        return v;
    }

    /// The class of 1, i.e. dbar^0.
    static P0Vector one(int n) { return monomial(MultiIndex::zero(n), 1); }

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const MultiIndex& alpha, const Rational& c) {
        if (alpha.arity() != n_) throw ArityError("p0 term arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            terms_.emplace(alpha, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    P0Vector operator+(const P0Vector& o) const {
        if (o.n_ != n_) throw ArityError("p0 arity mismatch");
        P0Vector out = *this;
        for (const auto& [a, c] : o.terms_) out.add_term(a, c);
        return out;
    }

    P0Vector operator-(const P0Vector& o) const { return *this + o.scaled(-1); }

    P0Vector scaled(const Rational& c) const {
        P0Vector out(n_);
        if (c == 0) return out;
        for (const auto& [a, v] : terms_) out.terms_.emplace(a, v * c);
        return out;
    }

    /// Largest total degree in the support; -1 for the zero vector.
    int height() const {
        int best = -1;
        for (const auto& [a, c] : terms_) {
            (void)c;
            best = std::max(best, a.degree());
        }
        return best;
    }

    bool operator==(const P0Vector& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const P0Vector& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [a, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += format_rational(c) + "*dbar^" + a.to_string();
        }
        return s;
    }

private:
    int n_;
    TermMap terms_;
};

/// Action of K_n^+ on P_0 by the closed formula
///   t^beta dbar^alpha = (-1)^{|beta|} beta! C(alpha, beta) dbar^{alpha-beta},
/// zero when beta does not divide alpha, after d^gamma raises alpha by gamma.
inline P0Vector p0_act(const WeylElement& a, const P0Vector& v) {
    if (a.arity() != v.arity()) throw ArityError("p0 action arity mismatch");
    P0Vector out(v.arity());
    for (const auto& [key, c] : a.terms()) {
        const int sign = key.beta.degree() % 2 == 0 ? 1 : -1;
        const Rational front = c * mi_factorial(key.beta) * sign;
        for (const auto& [alpha, va] : v.terms()) {
            MultiIndex raised = mi_add(alpha, key.gamma);
            auto rest = mi_sub_checked(raised, key.beta);
            if (!rest) continue;
            Rational coeff = front * va * mi_binomial(raised, key.beta);
            out.add_term(*rest, coeff);
        }
    }
    return out;
}

/// Canonical projection K_n^+ -> P_0, sending a to its class a.1bar. On a
/// normal-ordered symbol this reduces t^beta d^gamma by the same closed
/// formula as the action; the kernel is the left ideal sum_i K_n^+ t_i,
/// since rewriting any a t_i with the t on the right leaves no t-free part.
inline P0Vector projection_phi(const WeylElement& a) {
    P0Vector out(a.arity());
    for (const auto& [key, c] : a.terms()) {
        auto rest = mi_sub_checked(key.gamma, key.beta);
        if (!rest) continue;
        const int sign = key.beta.degree() % 2 == 0 ? 1 : -1;
        out.add_term(*rest, c * mi_factorial(key.beta) * mi_binomial(key.gamma, key.beta) * sign);
    }
    return out;
}

struct ReachOne {
    MultiIndex beta;
    Rational c;
};

/// Constructive simplicity witness for P_0: for v != 0 the lex-largest
/// support exponent beta satisfies t^beta v = c * 1bar with c != 0,
/// because t^beta kills every lex-smaller monomial in the support.
inline ReachOne p0_reach_one(const P0Vector& v) {
    if (v.is_zero()) throw ZeroVectorError("reach-one needs a nonzero vector");
    const auto& [beta, a_beta] = *v.terms().rbegin();
    const int sign = beta.degree() % 2 == 0 ? 1 : -1;
    return ReachOne{beta, a_beta * mi_factorial(beta) * sign};
}

} // namespace wittsmooth
