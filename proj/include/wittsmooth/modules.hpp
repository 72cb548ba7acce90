#pragma once

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/character.hpp"
#include "wittsmooth/coefficient_space.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/gln.hpp"
#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/weyl.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {

/// Element of a module built over monomials in the lowering operators:
/// a finite sum of d^alpha tensor v with v in the coefficient layer,
/// stored as a map from alpha to a dense component vector.
class ModuleVector {
  public:
    using TermMap = std::map<MultiIndex, QVector, MultiIndexLexLess>;

    ModuleVector(int n, int component_dim) : n_(n), comp_(component_dim) {
        if (n < 1) throw ArityError("module vector needs n >= 1");
        if (component_dim < 1) throw RangeError("component dimension must be positive");
    }

    static ModuleVector monomial(const MultiIndex& alpha, const QVector& v) {
        ModuleVector w(alpha.arity(), static_cast<int>(v.size()));
        w.add_term(alpha, v);
        return w;
    }

    int arity() const { return n_; }
    int component_dim() const { return comp_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& alpha, const QVector& v) {
        if (alpha.arity() != n_) throw ArityError("term arity mismatch");
        if (static_cast<int>(v.size()) != comp_) throw RangeError("component length mismatch");
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            bool nonzero = false;
            for (const auto& c : v)
                if (c != 0) { nonzero = true; break; }
            if (nonzero) terms_.emplace(alpha, v);
            return;
        }
        bool nonzero = false;
        for (std::size_t k = 0; k < v.size(); ++k) {
            it->second[k] += v[k];
            if (it->second[k] != 0) nonzero = true;
        }
        if (!nonzero) terms_.erase(it);
    }

    ModuleVector operator+(const ModuleVector& o) const {
        require_same_shape(o);
        ModuleVector out = *this;
        for (const auto& [alpha, v] : o.terms_) out.add_term(alpha, v);
        return out;
    }

    ModuleVector operator-(const ModuleVector& o) const { return *this + o.scaled(Rational(-1)); }

    ModuleVector scaled(const Rational& c) const {
        ModuleVector out(n_, comp_);
        if (c == 0) return out;
        for (const auto& [alpha, v] : terms_) {
            QVector sv(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) sv[k] = v[k] * c;
            out.terms_.emplace(alpha, std::move(sv));
        }
        return out;
    }

    /// Shift every exponent by one step in direction i.
    ModuleVector shifted(int i) const {
        ModuleVector out(n_, comp_);
        for (const auto& [alpha, v] : terms_)
            out.terms_.emplace(mi_add(alpha, MultiIndex::unit(n_, i)), v);
        return out;
    }

    bool operator==(const ModuleVector& o) const {
        return n_ == o.n_ && comp_ == o.comp_ && terms_ == o.terms_;
    }
    bool operator!=(const ModuleVector& o) const { return !(*this == o); }

    /// Largest exponent size in the support, -1 for the zero vector.
    int height() const {
        int h = -1;
        for (const auto& [alpha, v] : terms_) h = std::max(h, alpha.degree());
        return h;
    }

    /// The part of maximal exponent size.
    ModuleVector top() const {
        const int h = height();
        ModuleVector out(n_, comp_);
        for (const auto& [alpha, v] : terms_)
            if (alpha.degree() == h) out.terms_.emplace(alpha, v);
        return out;
    }

    /// Number of top level terms.
    int top_width() const { return static_cast<int>(top().terms().size()); }

    std::vector<MultiIndex> support() const {
        std::vector<MultiIndex> out;
        for (const auto& [alpha, v] : terms_) out.push_back(alpha);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [alpha, v] : terms_) {
            if (!out.empty()) out += " + ";
            out += "d^" + alpha.to_string() + "*(";
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k > 0) out += ", ";
                out += format_rational(v[k]);
            }
            out += ")";
        }
        return out;
    }

  private:
    void require_same_shape(const ModuleVector& o) const {
        if (n_ != o.n_) throw ArityError("module vector arity mismatch");
        if (comp_ != o.comp_) throw RangeError("component dimension mismatch");
    }

    int n_;
    int comp_;
    TermMap terms_;
};

/// Mixed action on a tensor module over the polynomial quotient: the field
/// acts on the left factor as a differential operator and corrects by its
/// linearized part acting through the matrix module on the right factor.
inline ModuleVector tensor_act(const WittElement& x, const ModuleVector& w, const GlnModule& m) {
    const int n = m.arity();
    if (x.arity() != n || w.arity() != n) throw ArityError("tensor action arity mismatch");
    if (w.component_dim() != m.dim()) throw FamilyError("vector does not live over this module");

    ModuleVector out(n, m.dim());
    for (const auto& [key, c] : x.terms()) {
        WeylElement op = WeylElement::from_witt(WittElement::basis(key.alpha, key.dir));
        for (const auto& [gamma, v] : w.terms()) {
            P0Vector moved = p0_act(op, P0Vector::monomial(gamma, 1));
            for (const auto& [delta, coeff] : moved.terms()) {
                QVector sv(v.size());
                for (std::size_t k = 0; k < v.size(); ++k) sv[k] = v[k] * coeff * c;
                out.add_term(delta, sv);
            }
            for (int i = 0; i < n; ++i) {
                if (key.alpha[i] == 0) continue;
                P0Vector mult = p0_act(WeylElement::t_power(mi_sub(key.alpha, MultiIndex::unit(n, i))),
                                       P0Vector::monomial(gamma, 1));
                QVector ev = m.e(i, key.dir).apply(v);
                for (const auto& [delta, coeff] : mult.terms()) {
                    QVector sv(ev.size());
                    for (std::size_t k = 0; k < ev.size(); ++k)
                        sv[k] = ev[k] * coeff * c * key.alpha[i];
                    out.add_term(delta, sv);
                }
            }
        }
    }
    return out;
}

namespace detail {

inline ModuleVector induced_act_rec(const WittElement& x, const MultiIndex& alpha, const QVector& v,
                                    const CoefficientSpace& e) {
    const int n = e.arity();
    ModuleVector out(n, e.dim());
    if (alpha.degree() == 0) {
        WittElement nonneg(n);
        for (const auto& [key, c] : x.terms()) {
            if (witt_grade(key) == -1)
                out.add_term(MultiIndex::unit(n, key.dir), [&] {
                    QVector sv(v.size());
                    for (std::size_t k = 0; k < v.size(); ++k) sv[k] = v[k] * c;
                    return sv;
                }());
            else
                nonneg.add_term(key.alpha, key.dir, c);
        }
        if (!nonneg.is_zero()) out.add_term(MultiIndex::zero(n), e.act(nonneg, v));
        return out;
    }
    int i = 0;
    while (alpha[i] == 0) ++i;
    const MultiIndex rest = mi_sub(alpha, MultiIndex::unit(n, i));
    out = induced_act_rec(x, rest, v, e).shifted(i);
    WittElement z = bracket(x, WittElement::derivation(n, i));
    if (!z.is_zero()) out = out + induced_act_rec(z, rest, v, e);
    return out;
}

}  // namespace detail

/// Action on an induced module, computed by commuting the field through
/// the lowering operators one at a time: x(d_i u) = d_i(x u) + [x, d_i]u.
/// Each step removes one lowering factor, so the recursion terminates and
/// only ever evaluates the coefficient space on grades >= 0.
inline ModuleVector induced_act(const WittElement& x, const ModuleVector& w,
                                const CoefficientSpace& e) {
    if (x.arity() != e.arity() || w.arity() != e.arity())
        throw ArityError("induced action arity mismatch");
    if (w.component_dim() != e.dim()) throw FamilyError("vector does not live over this space");

    ModuleVector out(e.arity(), e.dim());
    for (const auto& [alpha, v] : w.terms())
        out = out + detail::induced_act_rec(x, alpha, v, e);
    return out;
}

/// Handle for one of the module families. Tensor modules carry a matrix
/// module for the correction term, induced modules carry a coefficient
/// space, and the trivial family is the one dimensional module with zero
/// action. Construction of an induced handle certifies that the grades at
/// and just above the declared nilpotency level really annihilate the
/// coefficient space.
class SmoothModule {
  public:
    enum class Family { tensor, induced, trivial };

    static SmoothModule tensor(GlnModule m) {
        SmoothModule h(Family::tensor, m.arity());
        h.gln_ = std::make_shared<GlnModule>(std::move(m));
        return h;
    }

    static SmoothModule induced(std::shared_ptr<const CoefficientSpace> e) {
        if (!e) throw ValidationError("missing coefficient space");
        SmoothModule h(Family::induced, e->arity());
        const int ell = e->nilpotency_level();
        for (int k = ell; k <= ell + 1; ++k)
            for (const WittElement& y : basis_of_grade(e->arity(), k))
                for (int s = 0; s < e->dim(); ++s) {
                    QVector unit(static_cast<std::size_t>(e->dim()), Rational(0));
                    unit[static_cast<std::size_t>(s)] = 1;
                    for (const Rational& c : e->act(y, unit))
                        if (c != 0) throw ValidationError("coefficient space is not nilpotent at its declared level");
                }
        h.coeff_ = std::move(e);
        return h;
    }

    static SmoothModule trivial_module(int n) { return SmoothModule(Family::trivial, n); }

    Family family() const { return family_; }
    int arity() const { return n_; }

    int component_dim() const {
        switch (family_) {
            case Family::tensor: return gln_->dim();
            case Family::induced: return coeff_->dim();
            case Family::trivial: return 1;
        }
        throw Error("unreachable");
    }

    /// Degree growth bound of the action: a grade k field sends filtration
    /// level r into level r - k + ell() - 1.
    int ell() const {
        switch (family_) {
            case Family::tensor: return 1;
            case Family::induced: return coeff_->nilpotency_level();
            case Family::trivial: return 0;
        }
        throw Error("unreachable");
    }

    std::string family_name() const {
        switch (family_) {
            case Family::tensor: return "tensor";
            case Family::induced: return "induced";
            case Family::trivial: return "trivial";
        }
        throw Error("unreachable");
    }

    const GlnModule& gln() const {
        if (family_ != Family::tensor) throw FamilyError("handle has no matrix module");
        return *gln_;
    }

    const CoefficientSpace& coefficients() const {
        if (family_ != Family::induced) throw FamilyError("handle has no coefficient space");
        return *coeff_;
    }

    std::shared_ptr<const CoefficientSpace> coefficients_ptr() const {
        if (family_ != Family::induced) throw FamilyError("handle has no coefficient space");
        return coeff_;
    }

    ModuleVector zero() const { return ModuleVector(n_, component_dim()); }

    ModuleVector act(const WittElement& x, const ModuleVector& w) const {
        switch (family_) {
            case Family::tensor: return tensor_act(x, w, *gln_);
            case Family::induced: return induced_act(x, w, *coeff_);
            case Family::trivial:
                if (x.arity() != n_ || w.arity() != n_) throw ArityError("action arity mismatch");
                return zero();
        }
        throw Error("unreachable");
    }

    /// Basis of the degree m slice, exponents lex ascending with the
    /// component index inner. For induced handles an internal degree cap
    /// on the coefficient basis restricts the slice.
    std::vector<ModuleVector> graded_basis(int m, int component_degree_cap =
                                                      std::numeric_limits<int>::max()) const {
        std::vector<ModuleVector> out;
        if (m < 0) return out;
        if (family_ == Family::trivial) {
            if (m == 0) {
                out.push_back(ModuleVector::monomial(MultiIndex::zero(n_), {Rational(1)}));
            }
            return out;
        }
        const CoefficientSpace* e = family_ == Family::induced ? coeff_.get() : nullptr;
        const int dim = component_dim();
        for (const auto& alpha : multi_indexes_of_degree(n_, m))
            for (int k = 0; k < dim; ++k) {
                if (e != nullptr && e->basis_degree(k) > component_degree_cap) continue;
                QVector unit(static_cast<std::size_t>(dim), Rational(0));
                unit[static_cast<std::size_t>(k)] = 1;
                out.push_back(ModuleVector::monomial(alpha, unit));
            }
        return out;
    }

  private:
    SmoothModule(Family f, int n) : family_(f), n_(n) {
        if (n < 1) throw ArityError("module needs n >= 1");
    }

    Family family_;
    int n_;
    std::shared_ptr<const GlnModule> gln_;
    std::shared_ptr<const CoefficientSpace> coeff_;
};

/// Action result with a hard height cap: exceeding it raises CapExceeded
/// so closure computations never work with silently shortened vectors.
inline ModuleVector act_capped(const SmoothModule& handle, const WittElement& x,
                               const ModuleVector& w, int height_cap) {
    ModuleVector out = handle.act(x, w);
    if (out.height() > height_cap) throw CapExceeded("action result left the degree window");
    return out;
}

/// Induced module whose coefficient line carries the Euler character: the
/// diagonal fields act by lambda / n on the generator and the rest of the
/// nonnegative part acts by zero.
inline SmoothModule make_w_phi(int n, const Rational& lambda) {
    return SmoothModule::induced(std::make_shared<GlnCoefficientSpace>(one_dim_module(n, lambda)));
}

/// Truncated universal module for a degree one character, exposed as a
/// coefficient space over the nonnegative part.
inline std::shared_ptr<const WhittakerCoefficientSpace> make_whittaker(const WhittakerCharacter& phi,
                                                                       int cap) {
    return std::make_shared<WhittakerCoefficientSpace>(phi, cap);
}

/// Module induced from the truncated universal module above.
inline SmoothModule make_whittaker_induced(const WhittakerCharacter& phi, int cap) {
    return SmoothModule::induced(make_whittaker(phi, cap));
}

/// Spanning vectors of the distinguished submodule of the tensor module
/// over the r-th wedge power: sums over k of (d_k p) tensor (eps_k wedge
/// the chosen tail), with p running over exponent monomials up to the
/// degree bound and tails over all index tuples.
inline std::vector<ModuleVector> l_n_generators(int n, int r, int degree_bound) {
    if (r < 0 || r > n) throw RangeError("wedge index out of range");
    if (r == 0) return {};
    GlnModule wedge = exterior_power(n, r);
    const auto tuples = detail::increasing_tuples(n, r);
    std::map<std::vector<int>, int> index_of;
    for (std::size_t s = 0; s < tuples.size(); ++s) index_of[tuples[s]] = static_cast<int>(s);

    std::vector<std::vector<int>> tails{{}};
    for (int pos = 1; pos < r; ++pos) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tails)
            for (int idx = 0; idx < n; ++idx) {
                auto grown = t;
                grown.push_back(idx);
                next.push_back(std::move(grown));
            }
        tails = std::move(next);
    }

    std::vector<ModuleVector> out;
    for (int deg = 0; deg <= degree_bound; ++deg)
        for (const auto& alpha : multi_indexes_of_degree(n, deg))
            for (const auto& tail : tails) {
                ModuleVector gen(n, wedge.dim());
                for (int k = 0; k < n; ++k) {
                    std::vector<int> word{k};
                    word.insert(word.end(), tail.begin(), tail.end());
                    const int sign = detail::sort_sign(word);
                    if (sign == 0) continue;
                    QVector comp(static_cast<std::size_t>(wedge.dim()), Rational(0));
                    comp[static_cast<std::size_t>(index_of.at(word))] = sign;
                    gen.add_term(mi_add(alpha, MultiIndex::unit(n, k)), comp);
                }
                if (!gen.is_zero()) out.push_back(std::move(gen));
            }
    return out;
}

/// Least N with the guarantee that every grade at or above N kills the
/// vector, read off the filtration bound of the family.
inline int smoothness_bound(const SmoothModule& handle, const ModuleVector& w) {
    if (w.is_zero() || handle.family() == SmoothModule::Family::trivial) return 0;
    const int h = w.height();
    return handle.family() == SmoothModule::Family::tensor ? h + 1 : h + handle.ell();
}

/// Action of a truncated power series field, a single element with terms
/// in any grades. Smoothness makes this finite: grades at or above the
/// bound for w contribute nothing, which the test grid verifies.
inline ModuleVector continuous_act(const WittElement& x, const ModuleVector& w,
                                   const SmoothModule& handle) {
    return handle.act(x, w);
}

}  // namespace wittsmooth
