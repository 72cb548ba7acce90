#pragma once

#include <map>
#include <string>
#include <utility>

#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

/// Sparse polynomial in n commuting variables t_1..t_n with rational
/// coefficients. Terms are keyed by exponent multi-index in lex order and
/// zero coefficients are never stored, so equality is structural.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, MultiIndexLexLess>;

    explicit Polynomial(int n) : n_(n) {
        if (n < 1) throw RangeError("polynomial needs arity >= 1");
    }

    static Polynomial monomial(const MultiIndex& alpha, const Rational& c) {
        Polynomial p(alpha.arity());
        p.add_term(alpha, c);
        return p;
    }

    static Polynomial one(int n) { return monomial(MultiIndex::zero(n), 1); }

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const MultiIndex& alpha, const Rational& c) {
        if (alpha.arity() != n_) throw ArityError("polynomial term arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            terms_.emplace(alpha, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        if (o.n_ != n_) throw ArityError("polynomial arity mismatch");
        Polynomial out = *this;
        for (const auto& [a, c] : o.terms_) out.add_term(a, c);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

    Polynomial scaled(const Rational& c) const {
        Polynomial out(n_);
        if (c == 0) return out;
        for (const auto& [a, v] : terms_) out.terms_.emplace(a, v * c);
        return out;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (o.n_ != n_) throw ArityError("polynomial arity mismatch");
        Polynomial out(n_);
        for (const auto& [a, c] : terms_)
            for (const auto& [b, d] : o.terms_) out.add_term(mi_add(a, b), c * d);
        return out;
    }

    /// Partial derivative with respect to t_i (0-based).
    Polynomial derivative(int i) const {
        if (i < 0 || i >= n_) throw RangeError("derivative direction out of range");
        Polynomial out(n_);
        for (const auto& [a, c] : terms_) {
            if (a[i] == 0) continue;
            out.add_term(mi_sub(a, MultiIndex::unit(n_, i)), c * a[i]);
        }
        return out;
    }

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [a, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += format_rational(c) + "*t^" + a.to_string();
        }
        return s;
    }

private:
    int n_;
    TermMap terms_;
};

} // namespace wittsmooth
