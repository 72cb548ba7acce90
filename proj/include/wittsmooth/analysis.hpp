#pragma once

#include <array>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/character.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/modules.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {

/// Finite shadow of an infinite module: the vectors of exponent size at
/// most degree_bound, acted on by generators of grades -1 through
/// grade_bound. Closure style analyses demand grade_bound to be at least
/// degree_bound plus the nilpotency shift; that makes every constraint
/// beyond the window automatic, so in-window answers are exact.
///
/// An optional component cap restricts the enumerated basis to coefficient
/// vectors of low internal degree. Action results may still leave that
/// sub-basis, so coordinates always run over the full component range.
class TruncationWindow {
  public:
    TruncationWindow(SmoothModule mod, int degree_bound, int grade_bound,
                     int component_degree_cap = std::numeric_limits<int>::max())
        : mod_(std::move(mod)),
          degree_(degree_bound),
          grade_(grade_bound),
          comp_cap_(component_degree_cap) {
        if (degree_ < 0) throw RangeError("window degree bound must be nonnegative");
        if (grade_ < -1) throw RangeError("window grade bound must be at least -1");
        alphas_ = multi_indexes_up_to_degree(mod_.arity(), degree_);
        for (std::size_t s = 0; s < alphas_.size(); ++s)
            slot_[alphas_[s]] = static_cast<int>(s);
        for (int d = 0; d <= degree_; ++d)
            for (ModuleVector& b : mod_.graded_basis(d, comp_cap_))
                basis_.push_back(std::move(b));
    }

    const SmoothModule& module() const { return mod_; }
    int degree_bound() const { return degree_; }
    int grade_bound() const { return grade_; }
    int component_degree_cap() const { return comp_cap_; }

    /// Enumerated basis of the sub-window, degree ascending.
    const std::vector<ModuleVector>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    int ambient_dim() const {
        return static_cast<int>(slot_.size()) * mod_.component_dim();
    }

    /// Dense coordinates over all exponents of size <= degree_bound and the
    /// full component range.
    QVector flatten(const ModuleVector& w) const {
        if (w.arity() != mod_.arity() || w.component_dim() != mod_.component_dim())
            throw ArityError("vector does not live in this window's module");
        QVector out(static_cast<std::size_t>(ambient_dim()), Rational(0));
        const std::size_t comp = static_cast<std::size_t>(mod_.component_dim());
        for (const auto& [alpha, v] : w.terms()) {
            auto it = slot_.find(alpha);
            if (it == slot_.end()) throw RangeError("vector exceeds the window degree bound");
            for (std::size_t k = 0; k < v.size(); ++k)
                out[static_cast<std::size_t>(it->second) * comp + k] = v[k];
        }
        return out;
    }

    /// Inverse of flatten over the ambient coordinates.
    ModuleVector unflatten(const QVector& coords) const {
        if (static_cast<int>(coords.size()) != ambient_dim())
            throw RangeError("coordinate length mismatch");
        const std::size_t comp = static_cast<std::size_t>(mod_.component_dim());
        ModuleVector out = mod_.zero();
        for (std::size_t s = 0; s < alphas_.size(); ++s) {
            QVector v(comp);
            bool nonzero = false;
            for (std::size_t k = 0; k < comp; ++k) {
                v[k] = coords[s * comp + k];
                if (v[k] != 0) nonzero = true;
            }
            if (nonzero) out.add_term(alphas_[s], v);
        }
        return out;
    }

    void require_complete() const {
        if (grade_ < degree_ + mod_.ell())
            throw WindowError("grade bound too small for a complete closure in this window");
    }

  private:
    SmoothModule mod_;
    int degree_;
    int grade_;
    int comp_cap_;
    std::vector<ModuleVector> basis_;
    std::vector<MultiIndex> alphas_;
    std::map<MultiIndex, int, MultiIndexLexLess> slot_;
};

namespace detail {

/// Expands the kernel coordinates of the constraint system back into
/// module vectors over the window basis.
inline std::vector<ModuleVector> combos_from_kernel(const TruncationWindow& win,
                                                    const std::vector<QVector>& kernel) {
    std::vector<ModuleVector> out;
    for (const QVector& coords : kernel) {
        ModuleVector v = win.module().zero();
        for (std::size_t j = 0; j < coords.size(); ++j)
            if (coords[j] != 0) v = v + win.basis()[j].scaled(coords[j]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Basis of the vectors in the window killed by every grade from r up to
/// the window's grade bound. With a complete window this is exactly the
/// intersection of the annihilator subspace with the window, because
/// grades beyond the bound kill everything here for height reasons.
/// Constraint rows accumulate incrementally and the scan stops early once
/// they reach full rank.
inline std::vector<ModuleVector> annihilator_space(const TruncationWindow& win, int r) {
    if (r < 0) throw RangeError("annihilator grade must be nonnegative");
    win.require_complete();
    const int b = win.dim();
    const int n = win.module().arity();
    RowSpan constraints(b);
    for (int k = r; k <= win.grade_bound(); ++k) {
        for (const WittElement& x : basis_of_grade(n, k)) {
            std::vector<QVector> images;
            images.reserve(static_cast<std::size_t>(b));
            for (int j = 0; j < b; ++j)
                images.push_back(win.flatten(win.module().act(x, win.basis()[static_cast<std::size_t>(j)])));
            for (int a = 0; a < win.ambient_dim(); ++a) {
                QVector row(static_cast<std::size_t>(b));
                bool nonzero = false;
                for (int j = 0; j < b; ++j) {
                    row[static_cast<std::size_t>(j)] = images[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
                    if (row[static_cast<std::size_t>(j)] != 0) nonzero = true;
                }
                if (nonzero) constraints.insert(std::move(row));
            }
            if (constraints.rank() == b) return {};
        }
    }
    const auto rows = constraints.basis();
    QMatrix m(static_cast<int>(rows.size()), b);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < b; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    return detail::combos_from_kernel(win, nullspace(m));
}

/// Least r with a nonzero annihilator inside the window, or nothing when
/// every r up to the grade bound comes back empty. No extrapolation: a
/// missing value means "beyond this window", not a statement about the
/// module.
inline std::optional<int> height(const TruncationWindow& win) {
    for (int r = 0; r <= win.grade_bound(); ++r)
        if (!annihilator_space(win, r).empty()) return r;
    return std::nullopt;
}

/// Result of a closure run from one vector: the subspace reached inside
/// the window and whether it covers the full slice of degrees up to
/// checked_degree. Moves whose result leaves the window are skipped, which
/// can only shrink the reached span, so a positive certificate is sound.
struct ClosureResult {
    bool certificate = false;
    int checked_degree = 0;
    int reached_rank = 0;
    int slice_dim = 0;
    std::vector<ModuleVector> reached;
};

inline ClosureResult cyclicity_certificate(const TruncationWindow& win, const ModuleVector& v,
                                           int check_degree) {
    win.require_complete();
    if (check_degree < 0 || check_degree > win.degree_bound())
        throw WindowError("checked degree outside the window");

    const int n = win.module().arity();
    RowSpan span(win.ambient_dim());
    std::deque<ModuleVector> queue;
    if (!v.is_zero() && span.insert(win.flatten(v))) queue.push_back(v);
    while (!queue.empty()) {
        ModuleVector w = std::move(queue.front());
        queue.pop_front();
        for (int k = -1; k <= win.grade_bound(); ++k)
            for (const WittElement& x : basis_of_grade(n, k)) {
                ModuleVector y = win.module().act(x, w);
                if (y.is_zero() || y.height() > win.degree_bound()) continue;
                if (span.insert(win.flatten(y))) queue.push_back(y);
            }
    }

    ClosureResult out;
    out.checked_degree = check_degree;
    out.reached_rank = span.rank();
    out.certificate = true;
    for (int d = 0; d <= check_degree; ++d)
        for (const ModuleVector& b : win.module().graded_basis(d, win.component_degree_cap())) {
            ++out.slice_dim;
            if (!span.contains(win.flatten(b))) out.certificate = false;
        }
    for (const QVector& row : span.basis()) out.reached.push_back(win.unflatten(row));
    return out;
}

/// Dimensions, per degree 0..degree_bound, of the window slices modulo the
/// submodule generated by the given vectors. Restricted to families whose
/// nonnegative part never raises the exponent degree and to homogeneous
/// generators; then the generated submodule is graded and two passes give
/// its exact intersection with the window: close under grades 0..K first,
/// then fill downward with the lowering operators.
inline std::vector<int> quotient_graded_dims(const TruncationWindow& win,
                                             const std::vector<ModuleVector>& generators) {
    win.require_complete();
    if (win.module().ell() > 1)
        throw FamilyError("graded quotient needs a family with degree nonraising nonnegative part");
    for (const ModuleVector& g : generators)
        if (!g.is_zero() && static_cast<int>(g.support().size()) != g.top_width())
            throw ValidationError("quotient generators must be homogeneous");

    const int n = win.module().arity();
    // Every vector met below is homogeneous: the generators are, actions
    // of graded fields keep it that way for these families, and so does
    // applying a lowering operator. One row space per degree then tracks
    // the graded pieces of the generated submodule exactly.
    std::map<int, RowSpan> graded;
    auto insert_homogeneous = [&](const ModuleVector& v) {
        if (static_cast<int>(v.support().size()) != v.top_width())
            throw Error("closure produced an inhomogeneous vector");
        const int d = v.height();
        auto it = graded.find(d);
        if (it == graded.end()) it = graded.emplace(d, RowSpan(win.ambient_dim())).first;
        return it->second.insert(win.flatten(v));
    };

    std::deque<ModuleVector> queue;
    for (const ModuleVector& g : generators) {
        if (g.is_zero()) continue;
        if (g.height() > win.degree_bound()) throw RangeError("generator exceeds the window");
        if (insert_homogeneous(g)) queue.push_back(g);
    }

    std::vector<ModuleVector> closed;
    while (!queue.empty()) {
        ModuleVector w = std::move(queue.front());
        queue.pop_front();
        closed.push_back(w);
        for (int k = 0; k <= win.grade_bound(); ++k)
            for (const WittElement& x : basis_of_grade(n, k)) {
                ModuleVector y = win.module().act(x, w);
                if (y.is_zero()) continue;
                if (insert_homogeneous(y)) queue.push_back(y);
            }
    }

    for (const ModuleVector& w : closed) queue.push_back(w);
    while (!queue.empty()) {
        ModuleVector w = std::move(queue.front());
        queue.pop_front();
        if (w.height() >= win.degree_bound()) continue;
        for (int i = 0; i < n; ++i) {
            ModuleVector y = win.module().act(WittElement::derivation(n, i), w);
            if (y.is_zero()) continue;
            if (insert_homogeneous(y)) queue.push_back(y);
        }
    }

    std::vector<int> per_degree(static_cast<std::size_t>(win.degree_bound()) + 1, 0);
    for (int d = 0; d <= win.degree_bound(); ++d) {
        const int full = static_cast<int>(win.module().graded_basis(d, win.component_degree_cap()).size());
        const auto it = graded.find(d);
        const int covered = it == graded.end() ? 0 : it->second.rank();
        per_degree[static_cast<std::size_t>(d)] = full - covered;
    }
    return per_degree;
}

/// Dimension of the orbit span of v under repeated application of
/// t_i^(k+1) d_i. The first linear dependence closes the orbit, so the
/// returned dimension is exact. Escaping the degree window raises
/// CapExceeded, signalling that k was too small for this family.
inline int local_finiteness_orbit(const TruncationWindow& win, int i, int k,
                                  const ModuleVector& v) {
    const int n = win.module().arity();
    if (i < 0 || i >= n) throw RangeError("direction out of range");
    if (k < -1) throw RangeError("orbit grade out of range");
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    exps[static_cast<std::size_t>(i)] = k + 1;
    WittElement x = WittElement::basis(MultiIndex{std::move(exps)}, i);

    RowSpan span(win.ambient_dim());
    ModuleVector w = v;
    int dim = 0;
    while (!w.is_zero()) {
        if (w.height() > win.degree_bound()) throw CapExceeded("orbit left the degree window");
        if (!span.insert(win.flatten(w))) break;
        ++dim;
        if (dim > win.ambient_dim() + 1) throw Error("orbit failed to stabilize");
        w = win.module().act(x, w);
    }
    return dim;
}

/// Least grade from which everything kills the basis vectors with exponent
/// alpha in an induced module, found by scanning upward. Grades at or
/// beyond |alpha| plus the nilpotency level are dead by the filtration
/// bound, so the scan is finite and the returned value respects it.
inline int smoothness_bound_check(const TruncationWindow& win, const MultiIndex& alpha) {
    if (win.module().family() != SmoothModule::Family::induced)
        throw FamilyError("smoothness scan expects an induced module");
    const auto& e = win.module().coefficients();
    const int n = win.module().arity();
    const int limit = alpha.degree() + win.module().ell();
    int last_alive = -1;
    for (int k = 0; k < limit; ++k) {
        bool alive = false;
        for (const WittElement& x : basis_of_grade(n, k)) {
            for (int s = 0; s < e.dim() && !alive; ++s) {
                if (e.basis_degree(s) > win.component_degree_cap()) continue;
                QVector unit(static_cast<std::size_t>(e.dim()), Rational(0));
                unit[static_cast<std::size_t>(s)] = 1;
                if (!win.module().act(x, ModuleVector::monomial(alpha, unit)).is_zero()) alive = true;
            }
            if (alive) break;
        }
        if (alive) last_alive = k;
    }
    return last_alive + 1;
}

/// The four by four criterion matrix of the planar quasi-Whittaker theory,
/// written out entry by entry in terms of the character values on the
/// spin three frame.
inline QMatrix aphi_matrix(const WhittakerCharacter& phi) {
    const Rational p0 = phi.p(0);
    const Rational p1 = phi.p(1);
    const Rational p2 = phi.p(2);
    const Rational p3 = phi.p(3);
    QMatrix a(4, 4);
    a.at(0, 0) = 0;       a.at(0, 1) = -p0;     a.at(0, 2) = p0 * -3; a.at(0, 3) = -p1;
    a.at(1, 0) = p0 * -3; a.at(1, 1) = -p1;     a.at(1, 2) = -p1;     a.at(1, 3) = -p2;
    a.at(2, 0) = p1 * -4; a.at(2, 1) = -p2;     a.at(2, 2) = p2;      a.at(2, 3) = -p3;
    a.at(3, 0) = p2 * -3; a.at(3, 1) = -p3;     a.at(3, 2) = p3 * 3;  a.at(3, 3) = 0;
    return a;
}

inline Rational aphi_det(const WhittakerCharacter& phi) {
    if (!phi.q_vanishes())
        throw HypothesisError("criterion matrix requires vanishing q values");
    return det(aphi_matrix(phi));
}

/// Solves for the degree one vectors of the universal quasi-Whittaker
/// module on which the positive part acts back through the character:
/// coefficients (a1..a4) over the letters e, i, h, f applied to the
/// generator. The conditions are linear and the kernel must agree with
/// the kernel of the criterion matrix.
inline std::vector<QVector> quasi_whittaker_vectors_deg1(const WhittakerCharacter& phi) {
    if (!phi.q_vanishes())
        throw HypothesisError("degree one solve requires vanishing q values");
    WhittakerCoefficientSpace space(phi, 3);
    const std::array<WittElement, 4> letters{w2plus::e(), w2plus::i(), w2plus::h(), w2plus::f()};

    QVector generator(static_cast<std::size_t>(space.dim()), Rational(0));
    generator[0] = 1;
    std::vector<QVector> letter_vectors;
    for (const WittElement& l : letters) letter_vectors.push_back(space.act(l, generator));

    std::vector<QVector> rows;
    for (const WittElement& y : basis_of_grade(2, 1)) {
        const Rational target = space.character().value(y);
        std::vector<QVector> cols;
        for (const QVector& lv : letter_vectors) {
            QVector moved = space.act(y, lv);
            for (std::size_t s = 0; s < moved.size(); ++s) moved[s] -= target * lv[s];
            cols.push_back(std::move(moved));
        }
        for (int s = 0; s < space.dim(); ++s) {
            QVector row(4);
            bool nonzero = false;
            for (int j = 0; j < 4; ++j) {
                row[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
                if (row[static_cast<std::size_t>(j)] != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    QMatrix m(static_cast<int>(rows.size()), 4);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < 4; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    return nullspace(m);
}

/// Outcome of an equivariance check for a candidate map between modules,
/// determined by where the degree zero basis goes and extended to the
/// window by commuting with the lowering operators.
struct IntertwinerReport {
    bool certificate = false;
    std::string violation;
};

inline IntertwinerReport intertwiner_check(const TruncationWindow& source,
                                           const TruncationWindow& target,
                                           const std::vector<ModuleVector>& degree_zero_images) {
    const SmoothModule& a = source.module();
    const SmoothModule& b = target.module();
    if (a.family() != SmoothModule::Family::induced)
        throw FamilyError("equivariant extension starts from an induced module");
    if (a.arity() != b.arity()) throw ArityError("modules live over different algebras");
    if (static_cast<int>(degree_zero_images.size()) != a.component_dim())
        throw RangeError("need one image per coefficient basis vector");
    if (target.degree_bound() < source.degree_bound())
        throw WindowError("target window too small for the source");

    const int n = a.arity();
    std::map<MultiIndex, std::vector<ModuleVector>, MultiIndexLexLess> images;
    images[MultiIndex::zero(n)] = degree_zero_images;
    for (int d = 1; d <= source.degree_bound(); ++d)
        for (const auto& alpha : multi_indexes_of_degree(n, d)) {
            int i = 0;
            while (alpha[i] == 0) ++i;
            const auto& lower = images.at(mi_sub(alpha, MultiIndex::unit(n, i)));
            std::vector<ModuleVector> here;
            here.reserve(lower.size());
            for (const ModuleVector& img : lower)
                here.push_back(b.act(WittElement::derivation(n, i), img));
            images[alpha] = std::move(here);
        }

    auto apply_map = [&](const ModuleVector& w) {
        ModuleVector out = b.zero();
        for (const auto& [alpha, v] : w.terms()) {
            const auto& here = images.at(alpha);
            for (std::size_t s = 0; s < v.size(); ++s)
                if (v[s] != 0) out = out + here[s].scaled(v[s]);
        }
        return out;
    };

    IntertwinerReport report;
    for (int k = -1; k <= source.grade_bound(); ++k)
        for (const WittElement& x : basis_of_grade(n, k))
            for (const ModuleVector& v : source.basis()) {
                ModuleVector moved = a.act(x, v);
                if (moved.height() > source.degree_bound()) continue;
                ModuleVector lhs = apply_map(moved);
                ModuleVector rhs = b.act(x, apply_map(v));
                if (lhs != rhs) {
                    report.violation = "map fails to commute with " + x.to_string() + " at " +
                                       v.to_string();
                    return report;
                }
            }

    for (int d = 0; d < source.degree_bound(); ++d) {
        RowSpan image_span(target.ambient_dim());
        int source_dim = 0;
        for (const ModuleVector& v : source.basis()) {
            if (v.height() != d) continue;
            ++source_dim;
            image_span.insert(target.flatten(apply_map(v)));
        }
        const int target_dim = static_cast<int>(b.graded_basis(d).size());
        if (image_span.rank() != source_dim || source_dim != target_dim) {
            report.violation = "graded piece " + std::to_string(d) + " is not matched bijectively";
            return report;
        }
    }

    report.certificate = true;
    return report;
}

}  // namespace wittsmooth
