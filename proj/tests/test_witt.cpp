#include <catch2/catch_amalgamated.hpp>

#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/random_gen.hpp"
#include "wittsmooth/witt.hpp"

using namespace wittsmooth;

namespace {

WittElement random_witt(RandomGen& rng, int n, int max_deg, int max_terms = 3) {
    WittElement x(n);
    int terms = rng.int_in(1, max_terms);
    for (int k = 0; k < terms; ++k)
        x.add_term(rng.multi_index(n, max_deg), rng.int_in(0, n - 1), rng.rational(6, 3));
    return x;
}

Polynomial random_poly(RandomGen& rng, int n, int max_deg, int max_terms = 3) {
    Polynomial f(n);
    int terms = rng.int_in(1, max_terms);
    for (int k = 0; k < terms; ++k)
        f.add_term(rng.multi_index(n, max_deg), rng.rational(6, 3));
    return f;
}

/// Coordinates of a homogeneous degree-k element over basis_of_grade(n, k).
QVector grade_coords(const WittElement& x, int n, int k) {
    auto basis = basis_of_grade(n, k);
    QVector out(basis.size(), Rational(0));
    for (const auto& [key, c] : x.terms()) {
        REQUIRE(witt_grade(key) == k);
        bool placed = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto& bk = basis[b].terms().begin()->first;
            if (bk.alpha == key.alpha && bk.dir == key.dir) {
                out[b] = c;
                placed = true;
                break;
            }
        }
        REQUIRE(placed);
    }
    return out;
}

} // namespace

TEST_CASE("bracket on standard generators") {
    const int n = 2;
    auto d1 = WittElement::derivation(n, 0);
    auto t1d1 = WittElement::basis(MultiIndex({1, 0}), 0);
    CHECK(bracket(d1, t1d1) == d1);
    CHECK(bracket(t1d1, d1) == d1.scaled(-1));

    // [e, f] = h in the degree-0 copy of gl_2.
    CHECK(bracket(w2plus::e(), w2plus::f()) == w2plus::h());
    // i is central in degree 0.
    CHECK(bracket(w2plus::i(), w2plus::e()).is_zero());
    CHECK(bracket(w2plus::i(), w2plus::h()).is_zero());
    CHECK(bracket(w2plus::i(), w2plus::f()).is_zero());
    // [h, e] = 2e and [h, f] = -2f.
    CHECK(bracket(w2plus::h(), w2plus::e()) == w2plus::e().scaled(2));
    CHECK(bracket(w2plus::h(), w2plus::f()) == w2plus::f().scaled(-2));

    auto t1sq_d1 = WittElement::basis(MultiIndex({2, 0}), 0);
    CHECK(bracket(t1sq_d1, t1d1) == t1sq_d1.scaled(-1));
}

TEST_CASE("bracket against the derivation composition oracle") {
    RandomGen rng(201);
    for (int trial = 0; trial < 150; ++trial) {
        int n = rng.int_in(1, 4);
        WittElement x = random_witt(rng, n, 4);
        WittElement y = random_witt(rng, n, 4);
        Polynomial f = random_poly(rng, n, 4);
        Polynomial lhs = apply_to_polynomial(bracket(x, y), f);
        Polynomial rhs = apply_to_polynomial(x, apply_to_polynomial(y, f)) -
                         apply_to_polynomial(y, apply_to_polynomial(x, f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
    RandomGen rng(202);
    for (int trial = 0; trial < 150; ++trial) {
        int n = rng.int_in(1, 4);
        WittElement x = random_witt(rng, n, 5);
        WittElement y = random_witt(rng, n, 5);
        WittElement z = random_witt(rng, n, 5);
        CHECK((bracket(x, y) + bracket(y, x)).is_zero());
        WittElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                          bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("gradation is respected by the bracket") {
    RandomGen rng(203);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.int_in(1, 3);
        int k = rng.int_in(-1, 3);
        int l = rng.int_in(-1, 3);
        // Draw homogeneous elements of the stated degrees.
        WittElement x(n), y(n);
        x.add_term(rng.multi_index_of_degree(n, k + 1), rng.int_in(0, n - 1), rng.rational(5, 2));
        y.add_term(rng.multi_index_of_degree(n, l + 1), rng.int_in(0, n - 1), rng.rational(5, 2));
        WittElement b = bracket(x, y);
        if (!b.is_zero()) {
            CHECK(grade_component(b, k + l) == b);
        }
    }
}

TEST_CASE("grade split and components reassemble the element") {
    RandomGen rng(204);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.int_in(1, 3);
        WittElement x = random_witt(rng, n, 5, 5);
        WittElement sum(n);
        for (const auto& [k, part] : grade_split(x)) {
            CHECK(grade_component(x, k) == part);
            CHECK(!part.is_zero());
            sum = sum + part;
        }
        CHECK(sum == x);
    }
    CHECK(grade_component(w2plus::e(), 1).is_zero());
    CHECK(max_grade(w2plus::p(0)) == 1);
    CHECK_THROWS_AS(max_grade(WittElement(2)), ZeroVectorError);
}

TEST_CASE("graded pieces have the predicted dimensions") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = -1; k <= 4; ++k) {
            auto basis = basis_of_grade(n, k);
            CHECK(Integer(static_cast<long>(basis.size())) == dim_of_grade(n, k));
            for (const auto& b : basis) {
                REQUIRE(b.terms().size() == 1);
                CHECK(witt_grade(b.terms().begin()->first) == k);
            }
        }
    }
    CHECK(basis_of_grade(2, 1).size() == 6);
    CHECK(basis_of_grade(3, 0).size() == 9);
    CHECK(dim_of_grade(2, -5) == 0);
    CHECK_THROWS_AS(basis_of_grade(2, -2), RangeError);
}

TEST_CASE("euler element generates the grading") {
    RandomGen rng(205);
    WittElement omega2 = euler_element(2);
    CHECK(omega2 == w2plus::i());
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.int_in(1, 4);
        int k = rng.int_in(-1, 4);
        WittElement x(n);
        x.add_term(rng.multi_index_of_degree(n, k + 1), rng.int_in(0, n - 1), rng.rational(5, 2));
        CHECK(bracket(euler_element(n), x) == x.scaled(k));
    }
}

TEST_CASE("degree-one frames of W_2^+ behave as sl_2 strings") {
    using namespace w2plus;
    // Highest-weight conditions.
    CHECK(bracket(e(), p(0)).is_zero());
    CHECK(bracket(e(), q(0)).is_zero());
    // Lowering chains walk down the frames and terminate.
    CHECK(bracket(f(), p(0)) == p(1));
    CHECK(bracket(f(), p(1)) == p(2));
    CHECK(bracket(f(), p(2)) == p(3));
    CHECK(bracket(f(), p(3)).is_zero());
    CHECK(bracket(f(), q(0)) == q(1));
    CHECK(bracket(f(), q(1)).is_zero());
    // Weights under h.
    CHECK(bracket(h(), p(0)) == p(0).scaled(3));
    CHECK(bracket(h(), p(3)) == p(3).scaled(-3));
    CHECK(bracket(h(), q(0)) == q(0));
    CHECK(bracket(h(), q(1)) == q(1).scaled(-1));
    // Everything lives in degree 1 and i acts there by 1.
    for (int k = 0; k < 4; ++k) CHECK(grade_component(p(k), 1) == p(k));
    for (int k = 0; k < 2; ++k) CHECK(bracket(i(), q(k)) == q(k));
    CHECK(bracket(i(), p(2)) == p(2));
}

TEST_CASE("degree-one frames span invariant subspaces and fill the grade") {
    using namespace w2plus;
    RowSpan pspan(6), qspan(6), all(6);
    for (int k = 0; k < 4; ++k) pspan.insert(grade_coords(p(k), 2, 1));
    for (int k = 0; k < 2; ++k) qspan.insert(grade_coords(q(k), 2, 1));
    CHECK(pspan.rank() == 4);
    CHECK(qspan.rank() == 2);

    for (const auto& g0 : {e(), i(), h(), f()}) {
        for (int k = 0; k < 4; ++k) {
            WittElement b = bracket(g0, p(k));
            if (!b.is_zero()) CHECK(pspan.contains(grade_coords(b, 2, 1)));
        }
        for (int k = 0; k < 2; ++k) {
            WittElement b = bracket(g0, q(k));
            if (!b.is_zero()) CHECK(qspan.contains(grade_coords(b, 2, 1)));
        }
    }

    // Together the two frames exhaust the degree-1 piece.
    for (int k = 0; k < 4; ++k) all.insert(grade_coords(p(k), 2, 1));
    for (int k = 0; k < 2; ++k) all.insert(grade_coords(q(k), 2, 1));
    CHECK(all.rank() == 6);
}

TEST_CASE("apply_to_polynomial acts as a derivation") {
    RandomGen rng(206);
    for (int trial = 0; trial < 80; ++trial) {
        int n = rng.int_in(1, 3);
        WittElement x = random_witt(rng, n, 3);
        Polynomial f = random_poly(rng, n, 3);
        Polynomial g = random_poly(rng, n, 3);
        CHECK(apply_to_polynomial(x, f * g) ==
              apply_to_polynomial(x, f) * g + f * apply_to_polynomial(x, g));
    }
    // Leibniz plus a pinned value.
    Polynomial t1t2 = Polynomial::monomial(MultiIndex({1, 1}), 1);
    Polynomial expected = Polynomial::monomial(MultiIndex({2, 0}), 1);
    CHECK(apply_to_polynomial(w2plus::e(), t1t2) == expected);
}

TEST_CASE("witt element term order and rendering are canonical") {
    WittElement x(2);
    x.add_term(MultiIndex({0, 1}), 1, make_rational(1, 2));
    x.add_term(MultiIndex({1, 0}), 0, 3);
    x.add_term(MultiIndex({0, 1}), 0, 1);
    CHECK(x.to_string() == "1*t^(0,1)d1 + 1/2*t^(0,1)d2 + 3*t^(1,0)d1");
    x.add_term(MultiIndex({1, 0}), 0, -3);
    CHECK(x.terms().size() == 2);
    CHECK_THROWS_AS(x.add_term(MultiIndex({1, 0, 0}), 0, 1), ArityError);
    CHECK_THROWS_AS(x.add_term(MultiIndex({1, 0}), 2, 1), RangeError);
    CHECK_THROWS_AS(bracket(x, WittElement(3)), ArityError);
}
