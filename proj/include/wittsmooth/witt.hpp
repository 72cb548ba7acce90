#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/polynomial.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

/// Basis symbol t^alpha d_i of the Lie algebra W_n^+ of polynomial vector
/// fields (derivations of C[t_1..t_n]). Direction i is 0-based internally.
struct WittKey {
    MultiIndex alpha;
    int dir;

    bool operator==(const WittKey& o) const { return dir == o.dir && alpha == o.alpha; }
};

/// Canonical term order: lex on the exponent, then the direction.
struct WittKeyLess {
    bool operator()(const WittKey& a, const WittKey& b) const {
        auto c = lex_compare(a.alpha, b.alpha);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return a.dir < b.dir;
    }
};

/// Z-degree of the symbol t^alpha d_i.
inline int witt_grade(const WittKey& k) { return k.alpha.degree() - 1; }

/// Element of W_n^+: a finite rational combination of symbols t^alpha d_i.
/// The term map is canonically ordered and never stores zero coefficients,
/// so structural equality is semantic equality.
class WittElement {
public:
    using TermMap = std::map<WittKey, Rational, WittKeyLess>;

    explicit WittElement(int n) : n_(n) {
        if (n < 1) throw RangeError("vector field needs arity >= 1");
    }

    static WittElement basis(const MultiIndex& alpha, int dir) {
        WittElement x(alpha.arity());
        x.add_term(alpha, dir, 1);
        return x;
    }

    /// The derivation d_i itself (alpha = 0).
    static WittElement derivation(int n, int dir) {
        return basis(MultiIndex::zero(n), dir);
    }

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const MultiIndex& alpha, int dir, const Rational& c) {
        if (alpha.arity() != n_) throw ArityError("vector field term arity mismatch");
        if (dir < 0 || dir >= n_) throw RangeError("vector field direction out of range");
        if (c == 0) return;
        WittKey key{alpha, dir};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WittElement operator+(const WittElement& o) const {
        if (o.n_ != n_) throw ArityError("vector field arity mismatch");
        WittElement out = *this;
        for (const auto& [k, c] : o.terms_) out.add_term(k.alpha, k.dir, c);
        return out;
    }

    WittElement operator-(const WittElement& o) const { return *this + o.scaled(-1); }

    WittElement scaled(const Rational& c) const {
        WittElement out(n_);
        if (c == 0) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    bool operator==(const WittElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const WittElement& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += format_rational(c) + "*t^" + k.alpha.to_string() + "d" +
                 std::to_string(k.dir + 1);
        }
        return s;
    }

private:
    int n_;
    TermMap terms_;
};

/// Lie bracket, computed termwise from
///   [t^a d_i, t^b d_j] = b_i t^{a+b-e_i} d_j - a_j t^{a+b-e_j} d_i.
inline WittElement bracket(const WittElement& x, const WittElement& y) {
    if (x.arity() != y.arity()) throw ArityError("bracket arity mismatch");
    const int n = x.arity();
    WittElement out(n);
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const Rational c = cx * cy;
            const MultiIndex sum = mi_add(kx.alpha, ky.alpha);
            if (ky.alpha[kx.dir] > 0)
                out.add_term(mi_sub(sum, MultiIndex::unit(n, kx.dir)), ky.dir,
                             c * ky.alpha[kx.dir]);
            if (kx.alpha[ky.dir] > 0)
                out.add_term(mi_sub(sum, MultiIndex::unit(n, ky.dir)), kx.dir,
                             c * (-kx.alpha[ky.dir]));
        }
    }
    return out;
}

/// Component of x in degree k of the Z-gradation deg(t^alpha d_i) = |alpha| - 1.
inline WittElement grade_component(const WittElement& x, int k) {
    WittElement out(x.arity());
    for (const auto& [key, c] : x.terms())
        if (witt_grade(key) == k) out.add_term(key.alpha, key.dir, c);
    return out;
}

/// Splits x into its nonzero graded pieces, keyed by degree.
inline std::map<int, WittElement> grade_split(const WittElement& x) {
    std::map<int, WittElement> out;
    for (const auto& [key, c] : x.terms()) {
        const int k = witt_grade(key);
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, WittElement(x.arity())).first;
        it->second.add_term(key.alpha, key.dir, c);
    }
    return out;
}

/// Largest degree with a nonzero component. Calling this on zero is an error.
inline int max_grade(const WittElement& x) {
    if (x.is_zero()) throw ZeroVectorError("max grade of zero vector field");
    int best = -2;
    for (const auto& [key, c] : x.terms()) {
        (void)c;
        if (witt_grade(key) > best) best = witt_grade(key);
    }
    return best;
}

/// Basis of the graded piece of degree k >= -1: all t^alpha d_i with
/// |alpha| = k + 1, listed alpha lex ascending, direction inner.
inline std::vector<WittElement> basis_of_grade(int n, int k) {
    if (k < -1) throw RangeError("graded piece below -1 is zero");
    std::vector<WittElement> out;
    for (const auto& alpha : multi_indexes_of_degree(n, k + 1))
        for (int i = 0; i < n; ++i) out.push_back(WittElement::basis(alpha, i));
    return out;
}

/// Dimension of the graded piece of degree k.
inline Integer dim_of_grade(int n, int k) {
    if (k < -1) return 0;
    return Integer(n) * integer_binomial(k + n, n - 1);
}

/// Coordinates of a homogeneous element over basis_of_grade(n, k), in the
/// same order. Terms of any other grade are rejected.
inline std::vector<Rational> grade_coordinates(const WittElement& x, int k) {
    const int n = x.arity();
    const auto monomials = multi_indexes_of_degree(n, k + 1);
    std::map<MultiIndex, int, MultiIndexLexLess> slot;
    for (std::size_t s = 0; s < monomials.size(); ++s)
        slot[monomials[s]] = static_cast<int>(s);

    std::vector<Rational> coords(monomials.size() * static_cast<std::size_t>(n), Rational(0));
    for (const auto& [key, c] : x.terms()) {
        auto it = slot.find(key.alpha);
        if (it == slot.end()) throw RangeError("element is not homogeneous of the given grade");
        coords[static_cast<std::size_t>(it->second * n + key.dir)] = c;
    }
    return coords;
}

/// Applies the derivation to a polynomial: (t^a d_i)(f) = t^a * df/dt_i.
/// This is the semantic model of W_n^+ and serves as the independent check
/// of the bracket through [x, y](f) = x(y(f)) - y(x(f)).
inline Polynomial apply_to_polynomial(const WittElement& x, const Polynomial& f) {
    if (x.arity() != f.arity()) throw ArityError("derivation arity mismatch");
    Polynomial out(f.arity());
    for (const auto& [key, c] : x.terms()) {
        Polynomial part = f.derivative(key.dir);
        out = out + Polynomial::monomial(key.alpha, c) * part;
    }
    return out;
}

/// Euler vector field sum_i t_i d_i. Its adjoint action is the grading:
/// [euler, x] = k x for x in degree k.
inline WittElement euler_element(int n) {
    WittElement x(n);
    for (int i = 0; i < n; ++i) x.add_term(MultiIndex::unit(n, i), i, 1);
    return x;
}

/// Distinguished elements of W_2^+ used throughout the two-variable
/// analyses. e, i, h, f span the graded piece of degree 0 (a gl_2 copy,
/// with i central and (e, h, f) an sl_2 triple). p0..p3 and q0, q1 are
/// bases of the two irreducible pieces of degree 1 under that action,
/// with p0 and q0 the highest-weight members of the 4- and 2-dimensional
/// pieces respectively.
namespace w2plus {

inline WittElement make(std::initializer_list<std::tuple<int, int, int, int>> parts) {
    // Each part is (a1, a2, dir, coefficient) for coefficient * t^(a1,a2) d_dir.
    WittElement x(2);
    for (const auto& [a1, a2, dir, c] : parts)
        x.add_term(MultiIndex({a1, a2}), dir, c);
    return x;
}

inline WittElement e() { return make({{1, 0, 1, 1}}); }                      // t1 d2
inline WittElement i() { return make({{1, 0, 0, 1}, {0, 1, 1, 1}}); }        // t1 d1 + t2 d2
inline WittElement h() { return make({{1, 0, 0, 1}, {0, 1, 1, -1}}); }       // t1 d1 - t2 d2
inline WittElement f() { return make({{0, 1, 0, 1}}); }                      // t2 d1

inline WittElement p(int k) {
    switch (k) {
        case 0: return make({{2, 0, 1, 1}});                 // t1^2 d2
        case 1: return make({{1, 1, 1, 2}, {2, 0, 0, -1}});  // 2 t1t2 d2 - t1^2 d1
        case 2: return make({{0, 2, 1, 2}, {1, 1, 0, -4}});  // 2 t2^2 d2 - 4 t1t2 d1
        case 3: return make({{0, 2, 0, -6}});                // -6 t2^2 d1
        default: throw RangeError("p index must be 0..3");
    }
}

inline WittElement q(int k) {
    switch (k) {
        case 0: return make({{2, 0, 0, 1}, {1, 1, 1, 1}});   // t1^2 d1 + t1t2 d2
        case 1: return make({{0, 2, 1, 1}, {1, 1, 0, 1}});   // t2^2 d2 + t1t2 d1
        default: throw RangeError("q index must be 0..1");
    }
}

} // namespace w2plus

} // namespace wittsmooth
