#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wittsmooth/analysis.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/gln.hpp"
#include "wittsmooth/modules.hpp"
#include "wittsmooth/random_gen.hpp"
#include "wittsmooth/weyl.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {
namespace suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// One named verification run. Checks are sorted by name before the report
/// leaves the library, so assembly order never shows, and everything except
/// the wall time is a pure function of suite name and seed.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string window;
    std::vector<CheckResult> checks;
    long long wall_time_ms = 0;

    bool passed() const {
        if (checks.empty()) return false;
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline nlohmann::json suite_report_to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"status", c.pass ? "pass" : "fail"},
                          {"witness", c.witness}});
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"window", r.window},
            {"checks", std::move(checks)},
            {"passed", r.passed()},
            {"wall_time_ms", r.wall_time_ms}};
}

namespace detail {

/// Counts instances of one property and keeps the first counterexample.
class Tally {
  public:
    void require(bool ok, const std::string& context) {
        ++total_;
        if (!ok) {
            ++bad_;
            if (first_bad_.empty()) first_bad_ = context;
        }
    }

    CheckResult result(std::string name) const {
        CheckResult r;
        r.name = std::move(name);
        r.pass = total_ > 0 && bad_ == 0;
        if (total_ == 0)
            r.witness = "no instances generated";
        else if (bad_ == 0)
            r.witness = std::to_string(total_) + " instances verified exactly";
        else
            r.witness = std::to_string(bad_) + " of " + std::to_string(total_) +
                        " failed; first: " + first_bad_;
        return r;
    }

  private:
    int total_ = 0;
    int bad_ = 0;
    std::string first_bad_;
};

inline WittElement random_field(RandomGen& rng, int n, int max_deg, int max_terms = 3) {
    WittElement x(n);
    const int terms = rng.int_in(1, max_terms);
    for (int k = 0; k < terms; ++k)
        x.add_term(rng.multi_index(n, max_deg), rng.int_in(0, n - 1), rng.rational(7, 4));
    return x;
}

inline WeylElement random_weyl(RandomGen& rng, int n, int max_deg, int max_terms = 3) {
    WeylElement x(n);
    const int terms = rng.int_in(1, max_terms);
    for (int k = 0; k < terms; ++k)
        x.add_term(rng.multi_index(n, max_deg), rng.multi_index(n, max_deg), rng.rational(7, 4));
    return x;
}

inline QVector unit_vector(int dim, int k) {
    QVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

inline ModuleVector random_vector(RandomGen& rng, int n, int dim, int max_height,
                                  int comp_limit, int max_terms = 3) {
    ModuleVector w(n, dim);
    const int terms = rng.int_in(1, max_terms);
    for (int k = 0; k < terms; ++k) {
        QVector v(static_cast<std::size_t>(dim), Rational(0));
        v[static_cast<std::size_t>(rng.int_in(0, comp_limit))] = rng.rational(5, 3);
        w.add_term(rng.multi_index(n, max_height), v);
    }
    return w;
}

inline bool bracket_axiom_holds(const SmoothModule& mod, const WittElement& x,
                                const WittElement& y, const ModuleVector& v) {
    ModuleVector lhs = mod.act(bracket(x, y), v);
    ModuleVector rhs = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
    return lhs == rhs;
}

/// Dense two dimensional gl_2 module: a random change of basis applied to
/// a direct sum of two scalar modules. Exactly the kind of user supplied
/// table the library accepts after certification.
inline GlnModule conjugated_plane_module(RandomGen& rng, const Rational& b1,
                                         const Rational& b2) {
    QMatrix p(2, 2);
    do {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) p.at(r, c) = rng.int_in(-3, 3);
    } while (det(p) == 0);
    QMatrix pinv(2, 2);
    for (int c = 0; c < 2; ++c) {
        auto col = solve_linear(p, unit_vector(2, c));
        if (!col) throw Error("inverse of an invertible matrix failed");
        for (int r = 0; r < 2; ++r) pinv.at(r, c) = (*col)[static_cast<std::size_t>(r)];
    }
    std::vector<std::vector<QMatrix>> action(2, std::vector<QMatrix>(2, QMatrix(2, 2)));
    QMatrix diag(2, 2);
    diag.at(0, 0) = b1 / 2;
    diag.at(1, 1) = b2 / 2;
    for (int i = 0; i < 2; ++i)
        action[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = p * diag * pinv;
    return GlnModule(2, 2, std::move(action));
}

inline WittElement low_grades(const WittElement& x, int cap) {
    WittElement out(x.arity());
    for (const auto& [grade, part] : grade_split(x))
        if (grade <= cap) out = out + part;
    return out;
}

inline WhittakerCharacter ones_character() {
    return WhittakerCharacter({1, 1, 1, 1}, {0, 0});
}

inline std::string dims_text(const std::vector<int>& dims) {
    std::string s = "(";
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(dims[k]);
    }
    return s + ")";
}

inline CheckResult intertwiner_result(std::string name, const TruncationWindow& src,
                                      const TruncationWindow& tgt,
                                      const std::vector<ModuleVector>& images) {
    IntertwinerReport rep = intertwiner_check(src, tgt, images);
    CheckResult r;
    r.name = std::move(name);
    r.pass = rep.certificate;
    r.witness = rep.certificate
                    ? "equivariance and graded bijectivity verified up to degree " +
                          std::to_string(src.degree_bound())
                    : rep.violation;
    return r;
}

}  // namespace detail

inline SuiteReport run_jacobi(std::uint64_t seed) {
    SuiteReport out;
    out.window = "n in 1..4, exponent degree <= 5";
    RandomGen rng(seed);
    detail::Tally anti, jacobi;
    for (int t = 0; t < 1000; ++t) {
        const int n = rng.int_in(1, 4);
        WittElement x = detail::random_field(rng, n, 5);
        WittElement y = detail::random_field(rng, n, 5);
        WittElement z = detail::random_field(rng, n, 5);
        anti.require((bracket(x, y) + bracket(y, x)).is_zero(),
                     "x=" + x.to_string() + " y=" + y.to_string());
        WittElement cyc = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                          bracket(bracket(z, x), y);
        jacobi.require(cyc.is_zero(),
                       "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string());
    }
    out.checks.push_back(anti.result("antisymmetry"));
    out.checks.push_back(jacobi.result("jacobi-identity"));
    return out;
}

inline SuiteReport run_weyl(std::uint64_t seed) {
    SuiteReport out;
    out.window = "n in 1..3, term degree <= 4";
    RandomGen rng(seed);
    detail::Tally assoc;
    for (int t = 0; t < 500; ++t) {
        const int n = rng.int_in(1, 3);
        WeylElement x = detail::random_weyl(rng, n, 2);
        WeylElement y = detail::random_weyl(rng, n, 2);
        WeylElement z = detail::random_weyl(rng, n, 2);
        assoc.require(weyl_multiply(weyl_multiply(x, y), z) ==
                          weyl_multiply(x, weyl_multiply(y, z)),
                      "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string());
    }
    out.checks.push_back(assoc.result("associativity"));

    detail::Tally rel;
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 1; m <= 5; ++m) {
                    std::vector<int> pv(static_cast<std::size_t>(n), 0);
                    pv[static_cast<std::size_t>(j)] = m;
                    MultiIndex mpow(std::move(pv));
                    WeylElement normal = WeylElement::basis(MultiIndex::unit(n, i), mpow);
                    WeylElement product = weyl_multiply(WeylElement::d_power(mpow),
                                                        WeylElement::t_power(MultiIndex::unit(n, i)));
                    if (i == j) {
                        std::vector<int> lv(static_cast<std::size_t>(n), 0);
                        lv[static_cast<std::size_t>(j)] = m - 1;
                        product = product -
                                  WeylElement::d_power(MultiIndex(std::move(lv))).scaled(m);
                    }
                    rel.require(normal == product,
                                "n=" + std::to_string(n) + " i=" + std::to_string(i + 1) +
                                    " j=" + std::to_string(j + 1) + " m=" + std::to_string(m));
                }
    out.checks.push_back(rel.result("lowering-relation"));
    return out;
}

inline SuiteReport run_p0(std::uint64_t seed) {
    SuiteReport out;
    out.window = "n in 1..3, support degree <= 6";
    RandomGen rng(seed);
    detail::Tally cross;
    for (int t = 0; t < 500; ++t) {
        const int n = rng.int_in(1, 3);
        WeylElement a = detail::random_weyl(rng, n, 2);
        WeylElement u = detail::random_weyl(rng, n, 2);
        cross.require(p0_act(a, projection_phi(u)) == projection_phi(weyl_multiply(a, u)),
                      "a=" + a.to_string() + " u=" + u.to_string());
    }
    out.checks.push_back(cross.result("action-crosscheck"));

    detail::Tally reach;
    for (int t = 0; t < 200; ++t) {
        const int n = rng.int_in(1, 3);
        P0Vector v(n);
        const int terms = rng.int_in(1, 4);
        for (int k = 0; k < terms; ++k) v.add_term(rng.multi_index(n, 6), rng.rational(7, 4));
        if (v.is_zero()) v.add_term(MultiIndex::zero(n), 1);
        ReachOne r = p0_reach_one(v);
        P0Vector applied = p0_act(WeylElement::t_power(r.beta), v);
        reach.require(r.c != 0 && applied == P0Vector::one(n).scaled(r.c),
                      "v=" + v.to_string());
    }
    out.checks.push_back(reach.result("reach-one"));
    return out;
}

inline SuiteReport run_tensor(std::uint64_t seed) {
    SuiteReport out;
    out.window = "exterior powers with n <= 3, field degree <= 3";
    RandomGen rng(seed);
    std::vector<SmoothModule> handles;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) handles.push_back(SmoothModule::tensor(exterior_power(n, k)));

    detail::Tally axiom;
    for (int t = 0; t < 500; ++t) {
        const SmoothModule& mod = handles[static_cast<std::size_t>(
            rng.int_in(0, static_cast<int>(handles.size()) - 1))];
        const int n = mod.arity();
        WittElement x = detail::random_field(rng, n, 3);
        WittElement y = detail::random_field(rng, n, 3);
        ModuleVector v =
            detail::random_vector(rng, n, mod.component_dim(), 2, mod.component_dim() - 1);
        axiom.require(detail::bracket_axiom_holds(mod, x, y, v),
                      "x=" + x.to_string() + " y=" + y.to_string() + " v=" + v.to_string());
    }
    out.checks.push_back(axiom.result("bracket-axiom"));

    detail::Tally kill, eig;
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n; ++r) {
            SmoothModule mod = SmoothModule::tensor(exterior_power(n, r));
            ModuleVector top =
                ModuleVector::monomial(MultiIndex::zero(n), detail::unit_vector(mod.component_dim(), 0));
            for (int d = 2; d <= 4; ++d)
                for (const MultiIndex& alpha : multi_indexes_of_degree(n, d))
                    for (int i = 0; i < n; ++i)
                        kill.require(mod.act(WittElement::basis(alpha, i), top).is_zero(),
                                     "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                         " alpha=" + alpha.to_string());
            for (int i = 0; i < n; ++i) {
                const Rational expected = i < r ? 0 : -1;
                ModuleVector moved =
                    mod.act(WittElement::basis(MultiIndex::unit(n, i), i), top);
                eig.require(moved == top.scaled(expected),
                            "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                " i=" + std::to_string(i + 1));
            }
        }
    out.checks.push_back(kill.result("highest-weight-kill"));
    out.checks.push_back(eig.result("highest-weight-eigenvalues"));
    return out;
}

inline SuiteReport run_induced(std::uint64_t seed) {
    SuiteReport out;
    out.window = "n = 2, height <= 4, acting grades <= 6";
    RandomGen rng(seed);

    std::vector<SmoothModule> scalars;
    scalars.push_back(make_w_phi(2, 1));
    scalars.push_back(make_w_phi(2, Rational(-2)));
    scalars.push_back(make_w_phi(2, Rational(1, 3)));
    detail::Tally scalar_axiom;
    for (int t = 0; t < 200; ++t) {
        const SmoothModule& mod = scalars[static_cast<std::size_t>(t % 3)];
        WittElement x = detail::random_field(rng, 2, 3);
        WittElement y = detail::random_field(rng, 2, 3);
        ModuleVector v = detail::random_vector(rng, 2, 1, 3, 0);
        scalar_axiom.require(detail::bracket_axiom_holds(mod, x, y, v),
                             "x=" + x.to_string() + " y=" + y.to_string() +
                                 " v=" + v.to_string());
    }
    out.checks.push_back(scalar_axiom.result("bracket-axiom-scalar"));

    SmoothModule whit = make_whittaker_induced(detail::ones_character(), 6);
    detail::Tally whit_axiom;
    for (int t = 0; t < 100; ++t) {
        WittElement x = detail::random_field(rng, 2, 3, 2);
        WittElement y = detail::random_field(rng, 2, 3, 2);
        ModuleVector v = detail::random_vector(rng, 2, whit.component_dim(), 2, 4, 2);
        whit_axiom.require(detail::bracket_axiom_holds(whit, x, y, v),
                           "x=" + x.to_string() + " y=" + y.to_string() + " v=" + v.to_string());
    }
    out.checks.push_back(whit_axiom.result("bracket-axiom-whittaker"));

    detail::Tally grading;
    for (int which = 0; which < 2; ++which) {
        const SmoothModule& mod = which == 0 ? scalars[0] : whit;
        const int ell = mod.ell();
        const int comp_limit = which == 0 ? 0 : 4;
        for (int k = ell - 1; k <= 6; ++k)
            for (const WittElement& x : basis_of_grade(2, k))
                for (int r = 0; r <= 4; ++r)
                    for (const MultiIndex& alpha : multi_indexes_of_degree(2, r))
                        for (int c = 0; c <= comp_limit; ++c) {
                            ModuleVector v = ModuleVector::monomial(
                                alpha, detail::unit_vector(mod.component_dim(), c));
                            ModuleVector moved = mod.act(x, v);
                            const int allowed = r - k + ell - 1;
                            const bool ok = allowed < 0 ? moved.is_zero()
                                                        : moved.height() <= allowed;
                            grading.require(ok, "x=" + x.to_string() + " alpha=" +
                                                    alpha.to_string() +
                                                    " comp=" + std::to_string(c + 1));
                        }
    }
    out.checks.push_back(grading.result("grading-inclusion"));
    return out;
}

inline SuiteReport run_iso(std::uint64_t seed) {
    SuiteReport out;
    out.window = "degree bound 4, acting grades <= 5";
    RandomGen rng(seed);

    {
        GlnModule m = exterior_power(2, 1);
        SmoothModule src =
            SmoothModule::induced(std::make_shared<const GlnCoefficientSpace>(m));
        SmoothModule tgt = SmoothModule::tensor(tau_twist(m));
        TruncationWindow swin(src, 4, 5), twin(tgt, 4, 5);
        std::vector<ModuleVector> images;
        for (int k = 0; k < 2; ++k)
            images.push_back(ModuleVector::monomial(MultiIndex::zero(2), detail::unit_vector(2, k)));
        out.checks.push_back(detail::intertwiner_result("psi-standard-plane", swin, twin, images));
    }

    {
        GlnModule m = detail::conjugated_plane_module(rng, rng.rational(4, 2), rng.rational(4, 2));
        SmoothModule src =
            SmoothModule::induced(std::make_shared<const GlnCoefficientSpace>(m));
        SmoothModule tgt = SmoothModule::tensor(tau_twist(m));
        TruncationWindow swin(src, 4, 5), twin(tgt, 4, 5);
        std::vector<ModuleVector> images;
        for (int k = 0; k < 2; ++k)
            images.push_back(ModuleVector::monomial(MultiIndex::zero(2), detail::unit_vector(2, k)));
        out.checks.push_back(detail::intertwiner_result("psi-user-module", swin, twin, images));
    }

    struct ScalarCase {
        int n;
        Rational lambda;
        const char* name;
    };
    const ScalarCase cases[] = {{2, Rational(1), "phi-n2-lambda1"},
                                {2, Rational(2), "phi-n2-lambda2"},
                                {3, Rational(1), "phi-n3-lambda1"}};
    for (const ScalarCase& c : cases) {
        SmoothModule src = make_w_phi(c.n, c.lambda);
        SmoothModule tgt = SmoothModule::tensor(one_dim_module(c.n, c.lambda + c.n));
        TruncationWindow swin(src, 4, 5), twin(tgt, 4, 5);
        std::vector<ModuleVector> images{
            ModuleVector::monomial(MultiIndex::zero(c.n), detail::unit_vector(1, 0))};
        out.checks.push_back(detail::intertwiner_result(c.name, swin, twin, images));
    }
    return out;
}

inline SuiteReport run_wphi(std::uint64_t seed) {
    SuiteReport out;
    out.window = "quotients at degree bound 4 and 3, cyclicity checked to degree 2";
    (void)seed;

    {
        SmoothModule mod = make_w_phi(2, 0);
        TruncationWindow win(mod, 4, 5);
        std::vector<ModuleVector> gens;
        for (int i = 0; i < 2; ++i)
            gens.push_back(ModuleVector::monomial(MultiIndex::unit(2, i), detail::unit_vector(1, 0)));
        std::vector<int> dims = quotient_graded_dims(win, gens);
        CheckResult r;
        r.name = "maximal-submodule-quotient";
        r.pass = dims == std::vector<int>{1, 0, 0, 0, 0};
        r.witness = "graded dimensions " + detail::dims_text(dims);
        out.checks.push_back(std::move(r));
    }

    const struct {
        Rational lambda;
        const char* name;
    } cyc_cases[] = {{Rational(1), "cyclicity-lambda-1"},
                     {Rational(-2), "cyclicity-lambda-minus2"},
                     {Rational(1, 3), "cyclicity-lambda-third"}};
    for (const auto& c : cyc_cases) {
        SmoothModule mod = make_w_phi(2, c.lambda);
        TruncationWindow win(mod, 3, 4);
        ModuleVector v = ModuleVector::monomial(MultiIndex::unit(2, 0), detail::unit_vector(1, 0));
        ClosureResult res = cyclicity_certificate(win, v, 2);
        CheckResult r;
        r.name = c.name;
        r.pass = res.certificate;
        r.witness = "closure from a degree one vector reached " +
                    std::to_string(res.reached_rank) + " dimensions, slice requires " +
                    std::to_string(res.slice_dim);
        out.checks.push_back(std::move(r));
    }

    for (int n = 2; n <= 3; ++n) {
        SmoothModule mod = SmoothModule::tensor(exterior_power(n, n));
        TruncationWindow win(mod, 3, 4);
        std::vector<int> dims = quotient_graded_dims(win, l_n_generators(n, n, 2));
        CheckResult r;
        r.name = "top-form-quotient-n" + std::to_string(n);
        r.pass = dims == std::vector<int>{1, 0, 0, 0};
        r.witness = "graded dimensions " + detail::dims_text(dims);
        out.checks.push_back(std::move(r));
    }
    return out;
}

inline SuiteReport run_whittaker(std::uint64_t seed) {
    SuiteReport out;
    out.window = "induced height window: degree 3, grades <= 5, coefficient degree <= 1";
    RandomGen rng(seed);

    {
        Rational d = aphi_det(detail::ones_character());
        CheckResult r;
        r.name = "criterion-determinant";
        r.pass = d == Rational(-4);
        r.witness = "det = " + format_rational(d);
        out.checks.push_back(std::move(r));
    }

    detail::Tally kernel;
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> ps;
        for (int k = 0; k < 4; ++k) ps.push_back(rng.rational_or_zero(5, 3));
        WhittakerCharacter phi(ps, {0, 0});
        auto direct = quasi_whittaker_vectors_deg1(phi);
        auto via_matrix = nullspace(aphi_matrix(phi));
        kernel.require(direct.size() == via_matrix.size() &&
                           same_span(direct, via_matrix, 4),
                       "p = (" + format_rational(ps[0]) + "," + format_rational(ps[1]) + "," +
                           format_rational(ps[2]) + "," + format_rational(ps[3]) + ")");
    }
    out.checks.push_back(kernel.result("kernel-dimension-match"));

    {
        SmoothModule mod = make_whittaker_induced(detail::ones_character(), 2);
        TruncationWindow win(mod, 3, 5, 1);
        auto h = height(win);
        CheckResult r;
        r.name = "induced-height";
        r.pass = h.has_value() && *h == 2;
        r.witness = h ? "height " + std::to_string(*h) : "no annihilator found in the window";
        out.checks.push_back(std::move(r));
    }
    return out;
}

inline SuiteReport run_smoothness(std::uint64_t seed) {
    SuiteReport out;
    out.window = "heights at degree 2, orbits and bounds on exponents of degree <= 4";
    (void)seed;

    for (int n = 2; n <= 3; ++n) {
        TruncationWindow win(SmoothModule::tensor(exterior_power(n, 1)), 2, 3);
        auto h = height(win);
        CheckResult r;
        r.name = "tensor-height-n" + std::to_string(n);
        r.pass = h.has_value() && *h == 1;
        r.witness = h ? "height " + std::to_string(*h) : "no annihilator found in the window";
        out.checks.push_back(std::move(r));
    }

    {
        TruncationWindow win(SmoothModule::trivial_module(2), 2, 2);
        auto h = height(win);
        CheckResult r;
        r.name = "trivial-height";
        r.pass = h.has_value() && *h == 0;
        r.witness = h ? "height " + std::to_string(*h) : "no annihilator found in the window";
        out.checks.push_back(std::move(r));
    }

    SmoothModule scalar = make_w_phi(2, Rational(1, 3));
    TruncationWindow scalar_win(scalar, 4, 6);
    SmoothModule whit = make_whittaker_induced(detail::ones_character(), 2);
    TruncationWindow whit_win(whit, 4, 6, 0);

    detail::Tally orbit;
    for (int which = 0; which < 2; ++which) {
        const TruncationWindow& win = which == 0 ? scalar_win : whit_win;
        const int ell = win.module().ell();
        for (const MultiIndex& alpha : multi_indexes_up_to_degree(2, 4))
            for (int i = 0; i < 2; ++i) {
                ModuleVector v = ModuleVector::monomial(
                    alpha, detail::unit_vector(win.module().component_dim(), 0));
                const int dim = local_finiteness_orbit(win, i, ell, v);
                orbit.require(dim >= 1 && dim <= alpha.degree() + 1,
                              "alpha=" + alpha.to_string() + " i=" + std::to_string(i + 1) +
                                  " dim=" + std::to_string(dim));
            }
    }
    out.checks.push_back(orbit.result("orbit-stabilization"));

    detail::Tally bound;
    for (int which = 0; which < 2; ++which) {
        const TruncationWindow& win = which == 0 ? scalar_win : whit_win;
        const int ell = win.module().ell();
        for (const MultiIndex& alpha : multi_indexes_up_to_degree(2, 4)) {
            const int cutoff = smoothness_bound_check(win, alpha);
            bound.require(cutoff <= alpha.degree() + ell,
                          "alpha=" + alpha.to_string() + " cutoff=" + std::to_string(cutoff));
        }
    }
    out.checks.push_back(bound.result("smoothness-bound-grid"));
    return out;
}

inline SuiteReport run_continuous(std::uint64_t seed) {
    SuiteReport out;
    out.window = "series grades -1..6 acting on heights <= 3";
    RandomGen rng(seed);
    SmoothModule mod = SmoothModule::tensor(exterior_power(2, 1));

    detail::Tally indep, compat;
    for (int t = 0; t < 100; ++t) {
        WittElement x = detail::random_field(rng, 2, 7, 4);
        WittElement y = detail::random_field(rng, 2, 7, 4);
        ModuleVector v = detail::random_vector(rng, 2, 2, 3, 1);
        const int h = v.is_zero() ? 0 : v.height();
        indep.require(continuous_act(x, v, mod) == continuous_act(detail::low_grades(x, h), v, mod),
                      "x=" + x.to_string() + " v=" + v.to_string());
        ModuleVector lhs = continuous_act(bracket(x, y), v, mod);
        ModuleVector rhs = continuous_act(x, continuous_act(y, v, mod), mod) -
                           continuous_act(y, continuous_act(x, v, mod), mod);
        compat.require(lhs == rhs, "x=" + x.to_string() + " y=" + y.to_string() +
                                       " v=" + v.to_string());
    }
    out.checks.push_back(indep.result("truncation-independence"));
    out.checks.push_back(compat.result("bracket-compatibility"));
    return out;
}

inline std::vector<std::string> suite_names() {
    return {"jacobi", "weyl", "p0", "tensor", "induced",
            "iso",    "wphi", "smoothness", "whittaker", "continuous"};
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    if (name == "jacobi") report = run_jacobi(seed);
    else if (name == "weyl") report = run_weyl(seed);
    else if (name == "p0") report = run_p0(seed);
    else if (name == "tensor") report = run_tensor(seed);
    else if (name == "induced") report = run_induced(seed);
    else if (name == "iso") report = run_iso(seed);
    else if (name == "wphi") report = run_wphi(seed);
    else if (name == "whittaker") report = run_whittaker(seed);
    else if (name == "smoothness") report = run_smoothness(seed);
    else if (name == "continuous") report = run_continuous(seed);
    else throw UsageError("unknown suite \"" + name + "\"");
    report.suite = name;
    report.seed = seed;
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

}  // namespace suites
}  // namespace wittsmooth
