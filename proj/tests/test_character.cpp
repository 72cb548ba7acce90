#include <catch2/catch_amalgamated.hpp>

#include "wittsmooth/character.hpp"
#include "wittsmooth/random_gen.hpp"
#include "wittsmooth/witt.hpp"

using namespace wittsmooth;

TEST_CASE("euler character values on the degree zero basis") {
    EulerCharacter phi(3, make_rational(7, 2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            WittElement x = WittElement::basis(MultiIndex::unit(3, i), j);
            CHECK(phi.value(x) == (i == j ? make_rational(7, 6) : Rational(0)));
        }
    CHECK(phi.value(euler_element(3)) == make_rational(7, 2));
}

TEST_CASE("euler character kills higher grades and rejects the lowering part") {
    EulerCharacter phi(2, Rational(5));
    CHECK(phi.value(w2plus::p(1)) == 0);
    CHECK(phi.value(w2plus::q(0)) == 0);
    CHECK(phi.value(WittElement::basis(MultiIndex({2, 1}), 0)) == 0);
    CHECK_THROWS_AS(phi.value(WittElement::derivation(2, 0)), RangeError);
    CHECK_THROWS_AS(phi.value(WittElement::basis(MultiIndex::unit(3, 0), 0)), ArityError);
}

TEST_CASE("euler character vanishes on brackets of the nonnegative part") {
    RandomGen rng(401);
    EulerCharacter phi(2, make_rational(-3, 4));
    for (int trial = 0; trial < 100; ++trial) {
        WittElement x(2), y(2);
        for (int t = 0; t < 2; ++t) {
            x = x + WittElement::basis(rng.multi_index_of_degree(2, rng.int_in(1, 3)),
                                       rng.int_in(0, 1)).scaled(rng.rational(5, 3));
            y = y + WittElement::basis(rng.multi_index_of_degree(2, rng.int_in(1, 3)),
                                       rng.int_in(0, 1)).scaled(rng.rational(5, 3));
        }
        WittElement b = bracket(x, y);
        if (b.is_zero()) continue;
        CHECK(phi.value(b) == 0);
    }
}

TEST_CASE("whittaker character reads the frame coefficients") {
    WhittakerCharacter phi({Rational(1), Rational(2), Rational(3), Rational(4)},
                           {Rational(5), Rational(6)});
    for (int k = 0; k <= 3; ++k) CHECK(phi.value(w2plus::p(k)) == k + 1);
    for (int k = 0; k <= 1; ++k) CHECK(phi.value(w2plus::q(k)) == k + 5);
    CHECK(!phi.q_vanishes());
    CHECK(WhittakerCharacter({Rational(1), Rational(0), Rational(0), Rational(0)},
                             {Rational(0), Rational(0)})
              .q_vanishes());

    WittElement combo = w2plus::p(0).scaled(make_rational(1, 2)) + w2plus::q(1).scaled(Rational(-3));
    CHECK(phi.value(combo) == make_rational(1, 2) - 18);
}

TEST_CASE("whittaker character is linear and kills degree two and beyond") {
    RandomGen rng(402);
    WhittakerCharacter phi({rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3),
                            rng.rational(5, 3)},
                           {rng.rational(5, 3), rng.rational(5, 3)});
    for (int trial = 0; trial < 50; ++trial) {
        WittElement x(2), y(2);
        for (int t = 0; t < 2; ++t) {
            x = x + WittElement::basis(rng.multi_index_of_degree(2, 2), rng.int_in(0, 1))
                        .scaled(rng.rational(5, 3));
            y = y + WittElement::basis(rng.multi_index_of_degree(2, rng.int_in(3, 5)),
                                       rng.int_in(0, 1)).scaled(rng.rational(5, 3));
        }
        Rational a = rng.rational(4, 2);
        CHECK(phi.value(x.scaled(a) + y) == a * phi.value(x) + phi.value(y));
        if (!y.is_zero()) CHECK(phi.value(y) == 0);
    }
}

TEST_CASE("whittaker character rejects arity and grade misuse") {
    WhittakerCharacter phi({Rational(1), Rational(1), Rational(1), Rational(1)},
                           {Rational(0), Rational(0)});
    CHECK_THROWS_AS(phi.value(w2plus::e()), RangeError);
    CHECK_THROWS_AS(phi.value(WittElement::basis(MultiIndex({2, 0, 0}), 1)), ArityError);
    CHECK_THROWS_AS(WhittakerCharacter({Rational(1)}, {Rational(0), Rational(0)}), ArityError);
}

TEST_CASE("frame coordinates invert the frame") {
    RandomGen rng(403);
    for (int trial = 0; trial < 60; ++trial) {
        QVector want(6);
        for (auto& c : want) c = rng.rational_or_zero(5, 3);
        WittElement x(2);
        for (int k = 0; k <= 3; ++k) x = x + w2plus::p(k).scaled(want[static_cast<std::size_t>(k)]);
        for (int k = 0; k <= 1; ++k) x = x + w2plus::q(k).scaled(want[static_cast<std::size_t>(4 + k)]);
        CHECK(WhittakerCharacter::frame_coordinates(x) == want);
    }
}
