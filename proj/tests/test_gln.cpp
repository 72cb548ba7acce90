#include <catch2/catch_amalgamated.hpp>

#include "wittsmooth/gln.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/witt.hpp"

using namespace wittsmooth;

namespace {

QVector unit_vec(int dim, int pos) {
    QVector v(dim, Rational(0));
    v[static_cast<std::size_t>(pos)] = 1;
    return v;
}

// Coordinates of a homogeneous element in the canonical basis of its grade.
QVector grade_coords(const WittElement& x, int k) {
    const auto basis = basis_of_grade(x.arity(), k);
    QVector coords(basis.size(), Rational(0));
    for (const auto& [key, c] : x.terms()) {
        bool found = false;
        for (std::size_t s = 0; s < basis.size(); ++s) {
            const auto& [bkey, bc] = *basis[s].terms().begin();
            if (bkey.alpha == key.alpha && bkey.dir == key.dir) {
                coords[s] = c / bc;
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    return coords;
}

}  // namespace

TEST_CASE("exterior power dimensions and range checks") {
    CHECK(exterior_power(4, 2).dim() == 6);
    CHECK(exterior_power(3, 0).dim() == 1);
    CHECK(exterior_power(3, 3).dim() == 1);
    CHECK(exterior_power(5, 1).dim() == 5);
    CHECK(exterior_power(1, 1).dim() == 1);
    CHECK_THROWS_AS(exterior_power(3, -1), RangeError);
    CHECK_THROWS_AS(exterior_power(3, 4), RangeError);
    CHECK_THROWS_AS(exterior_power(0, 0), ArityError);
}

TEST_CASE("wedge action matches hand computed values") {
    // Basis of L^2(C^3) in lex order: e1^e2, e1^e3, e2^e3.
    GlnModule m = exterior_power(3, 2);
    REQUIRE(m.labels() == std::vector<std::string>{"e1^e2", "e1^e3", "e2^e3"});

    CHECK(m.e(0, 0).apply(unit_vec(3, 0)) == unit_vec(3, 0));
    CHECK(m.e(2, 2).apply(unit_vec(3, 0)) == QVector(3, Rational(0)));

    // E_21 (e1^e3) = e2^e3, E_12 (e2^e3) = e1^e3, both already sorted.
    CHECK(m.e(1, 0).apply(unit_vec(3, 1)) == unit_vec(3, 2));
    CHECK(m.e(0, 1).apply(unit_vec(3, 2)) == unit_vec(3, 1));

    // E_31 (e1^e2) = e3^e2 = -(e2^e3): one transposition.
    QVector got = m.e(2, 0).apply(unit_vec(3, 0));
    QVector want(3, Rational(0));
    want[2] = -1;
    CHECK(got == want);

    // Replacing e1 by e2 inside e1^e2 collapses the wedge.
    CHECK(m.e(1, 0).apply(unit_vec(3, 0)) == QVector(3, Rational(0)));
}

TEST_CASE("identity of gl_n acts by k on the k-th wedge power") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            GlnModule m = exterior_power(n, k);
            CHECK(m.identity_action() == QMatrix::identity(m.dim()).scaled(Rational(k)));
        }
}

TEST_CASE("top wedge power has every diagonal generator acting by one") {
    for (int n = 1; n <= 4; ++n) {
        GlnModule m = exterior_power(n, n);
        REQUIRE(m.dim() == 1);
        for (int i = 0; i < n; ++i) CHECK(m.e(i, i) == QMatrix::identity(1));
        CHECK(m.identity_action().at(0, 0) == n);
    }
}

TEST_CASE("factory outputs satisfy the commutation relations") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(!check_gln_relations(exterior_power(n, k)).has_value());
    CHECK(!check_gln_relations(one_dim_module(3, make_rational(5, 2))).has_value());
    CHECK(!check_gln_relations(tau_twist(exterior_power(3, 2))).has_value());
    CHECK(!check_gln_relations(tau_twist(one_dim_module(2, Rational(-4)))).has_value());
}

TEST_CASE("relation check pinpoints the first broken commutator") {
    // dim 1 with both off-diagonal generators acting by 1: every commutator
    // of scalars vanishes, so the pair relation [E_12, E_21] = E_11 - E_22
    // happens to hold (both sides zero). The first failure in scan order is
    // [E_11, E_12] = E_12, whose right side is 1 while the left is 0.
    QMatrix one(1, 1), zero(1, 1);
    one.at(0, 0) = 1;
    GlnModule bad(2, 1, {{zero, one}, {one, zero}});

    QMatrix comm = bad.e(0, 1) * bad.e(1, 0) - bad.e(1, 0) * bad.e(0, 1);
    CHECK(comm == bad.e(0, 0) - bad.e(1, 1));

    auto v = check_gln_relations(bad);
    REQUIRE(v.has_value());
    CHECK(*v == GlnViolation{0, 0, 0, 1});
}

TEST_CASE("all-zero matrices certify the trivial module") {
    QMatrix zero(2, 2);
    GlnModule m(3, 2, std::vector<std::vector<QMatrix>>(3, std::vector<QMatrix>(3, zero)));
    CHECK(!check_gln_relations(m).has_value());
}

TEST_CASE("one dimensional module splits the scalar across the diagonal") {
    GlnModule m = one_dim_module(3, Rational(5));
    CHECK(m.dim() == 1);
    for (int i = 0; i < 3; ++i) CHECK(m.e(i, i).at(0, 0) == make_rational(5, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(m.e(i, j).is_zero());
    CHECK(m.identity_action().at(0, 0) == 5);
    CHECK((m.e(0, 0) - m.e(1, 1)).is_zero());

    GlnModule trivial = one_dim_module(4, Rational(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(trivial.e(i, j).is_zero());
}

TEST_CASE("tau twist shifts the diagonal by the identity") {
    GlnModule m = exterior_power(3, 2);
    GlnModule tw = tau_twist(m);
    CHECK(tw.dim() == m.dim());
    const QMatrix id = QMatrix::identity(m.dim());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(tw.e(i, j) == m.e(i, j) + id);
            else
                CHECK(tw.e(i, j) == m.e(i, j));
        }
    CHECK(tw.identity_action() == m.identity_action() + id.scaled(Rational(3)));

    // Undoing the shift recovers the original table.
    GlnModule back = tau_twist(tw);
    for (int i = 0; i < 3; ++i)
        CHECK(back.e(i, i) == m.e(i, i) + id.scaled(Rational(2)));
}

TEST_CASE("tau twist of a scalar module is the shifted scalar module") {
    for (int n = 2; n <= 4; ++n) {
        Rational lam = make_rational(-7, 3);
        CHECK(tau_twist(one_dim_module(n, lam)) == one_dim_module(n, lam + n));
    }
}

TEST_CASE("joint eigenvectors recover weight spaces") {
    GlnModule nat = exterior_power(2, 1);
    auto span = joint_eigenvectors(nat, {Rational(1), Rational(0)});
    REQUIRE(span.size() == 1);
    CHECK(span[0] == unit_vec(2, 0));
    CHECK(joint_eigenvectors(nat, {Rational(5), Rational(5)}).empty());

    Rational b = make_rational(7, 2);
    GlnModule scalar = one_dim_module(2, b);
    auto whole = joint_eigenvectors(scalar, {b / 2, b / 2});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == unit_vec(1, 0));

    GlnModule wedge = exterior_power(3, 2);
    auto top = joint_eigenvectors(wedge, {Rational(1), Rational(1), Rational(0)});
    REQUIRE(top.size() == 1);
    CHECK(top[0] == unit_vec(3, 0));

    // The three wedge weights partition the space into lines.
    auto mid = joint_eigenvectors(wedge, {Rational(1), Rational(0), Rational(1)});
    auto low = joint_eigenvectors(wedge, {Rational(0), Rational(1), Rational(1)});
    CHECK(mid.size() == 1);
    CHECK(low.size() == 1);

    CHECK_THROWS_AS(joint_eigenvectors(nat, {Rational(1)}), ArityError);
}

TEST_CASE("degree one part of the planar algebra carries a gl_2 action") {
    // Transport the adjoint action of the degree zero part through the
    // identification t_i d_j <-> E_ij and certify the relations, then find
    // the highest weight lines of the two irreducible summands.
    const int n = 2;
    const auto basis = basis_of_grade(n, 1);
    const int dim = static_cast<int>(basis.size());
    REQUIRE(dim == 6);

    std::vector<std::vector<QMatrix>> action(n, std::vector<QMatrix>(n, QMatrix(dim, dim)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            WittElement gen = WittElement::basis(MultiIndex::unit(n, i), j);
            for (int col = 0; col < dim; ++col) {
                QVector image = grade_coords(bracket(gen, basis[static_cast<std::size_t>(col)]), 1);
                for (int r = 0; r < dim; ++r) action[i][j].at(r, col) = image[static_cast<std::size_t>(r)];
            }
        }
    GlnModule ad(n, dim, action);
    CHECK(!check_gln_relations(ad).has_value());

    // Weight (2, -1) is the top of the four dimensional summand.
    auto top4 = joint_eigenvectors(ad, {Rational(2), Rational(-1)});
    REQUIRE(top4.size() == 1);
    QVector p0 = grade_coords(w2plus::p(0), 1);
    QMatrix pair = QMatrix::from_rows({top4[0], p0});
    CHECK(rank(pair) == 1);

    // Weight (1, 0) is shared by the two summands; the raising kernel inside
    // it is the highest weight line of the two dimensional one.
    auto mid = joint_eigenvectors(ad, {Rational(1), Rational(0)});
    CHECK(mid.size() == 2);
    QVector q0 = grade_coords(w2plus::q(0), 1);
    CHECK(ad.e(0, 1).apply(q0) == QVector(dim, Rational(0)));
    CHECK(ad.e(0, 1).apply(p0) == QVector(dim, Rational(0)));
}
