#include <catch2/catch_amalgamated.hpp>

#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/rational.hpp"

#include "wittsmooth/random_gen.hpp"

using namespace wittsmooth;

TEST_CASE("rational parsing and formatting round-trip") {
    CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
    CHECK(format_rational(parse_rational("5")) == "5");
    CHECK(format_rational(parse_rational("+7/1")) == "7");
    CHECK(parse_rational("0/9") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZeroError);
    CHECK_THROWS_AS(parse_rational("a/2"), UsageError);
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), UsageError);

    RandomGen rng(11);
    for (int k = 0; k < 200; ++k) {
        Rational r = rng.rational(50, 20);
        CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("rational division guards") {
    CHECK(rational_div(make_rational(3), make_rational(-6)) == make_rational(-1, 2));
    CHECK_THROWS_AS(rational_div(make_rational(1), Rational(0)), DivisionByZeroError);
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZeroError);
}

TEST_CASE("integer combinatorics helpers") {
    CHECK(integer_factorial(0) == 1);
    CHECK(integer_factorial(5) == 120);
    CHECK(integer_binomial(5, 2) == 10);
    CHECK(integer_binomial(2, 5) == 0);
    CHECK(integer_binomial(0, 0) == 1);
    CHECK_THROWS_AS(integer_factorial(-1), RangeError);
    // Pascal relation on a small grid.
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(integer_binomial(n, k) ==
                  integer_binomial(n - 1, k) + integer_binomial(n - 1, k - 1));
}

TEST_CASE("multi-index construction and accessors") {
    MultiIndex a({2, 0, 1});
    CHECK(a.arity() == 3);
    CHECK(a.degree() == 3);
    CHECK(a[0] == 2);
    CHECK(a.to_string() == "(2,0,1)");
    CHECK(MultiIndex::zero(2).to_string() == "(0,0)");
    CHECK(MultiIndex::unit(3, 1).to_string() == "(0,1,0)");
    CHECK_THROWS_AS(MultiIndex({1, -1}), RangeError);
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), RangeError);
    CHECK_THROWS_AS(MultiIndex::unit(2, 2), RangeError);
}

TEST_CASE("multi-index arithmetic") {
    MultiIndex a({2, 1}), b({1, 1});
    CHECK(mi_add(a, b) == MultiIndex({3, 2}));
    CHECK(mi_sub(a, b) == MultiIndex({1, 0}));
    CHECK_THROWS_AS(mi_sub(b, a), RangeError);
    CHECK(!mi_sub_checked(b, a).has_value());
    CHECK(mi_sub_checked(a, b).value() == MultiIndex({1, 0}));
    CHECK_THROWS_AS(mi_add(a, MultiIndex({1, 1, 1})), ArityError);

    CHECK(mi_binomial(MultiIndex({3, 2}), MultiIndex({1, 2})) == 3);
    CHECK(mi_binomial(MultiIndex({1, 2}), MultiIndex({2, 0})) == 0);
    CHECK(mi_factorial(MultiIndex({3, 2})) == 12);
    CHECK(mi_factorial(MultiIndex::zero(4)) == 1);
    CHECK(mi_divides(b, a));
    CHECK(!mi_divides(a, b));
}

TEST_CASE("multi-index binomial matches quotient of factorials") {
    RandomGen rng(23);
    for (int k = 0; k < 200; ++k) {
        int n = rng.int_in(1, 4);
        MultiIndex a = rng.multi_index(n, 6);
        MultiIndex b = rng.multi_index(n, 6);
        Rational lhs = mi_binomial(a, b);
        if (mi_divides(b, a)) {
            Rational rhs = rational_div(
                mi_factorial(a), mi_factorial(b) * mi_factorial(mi_sub(a, b)));
            CHECK(lhs == rhs);
        } else {
            CHECK(lhs == 0);
        }
    }
}

TEST_CASE("lex order is total and matches first-difference rule") {
    CHECK(lex_compare(MultiIndex({2, 0}), MultiIndex({1, 5})) == std::strong_ordering::greater);
    CHECK(lex_compare(MultiIndex({1, 1}), MultiIndex({1, 2})) == std::strong_ordering::less);
    CHECK(lex_compare(MultiIndex({1, 2}), MultiIndex({1, 2})) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_compare(MultiIndex({1}), MultiIndex({1, 0})), ArityError);

    RandomGen rng(31);
    for (int k = 0; k < 300; ++k) {
        int n = rng.int_in(1, 4);
        MultiIndex a = rng.multi_index(n, 5);
        MultiIndex b = rng.multi_index(n, 5);
        MultiIndex c = rng.multi_index(n, 5);
        // Antisymmetry.
        auto ab = lex_compare(a, b), ba = lex_compare(b, a);
        if (ab == std::strong_ordering::equal) {
            CHECK(ba == std::strong_ordering::equal);
            CHECK(a == b);
        } else if (ab == std::strong_ordering::less) {
            CHECK(ba == std::strong_ordering::greater);
        } else {
            CHECK(ba == std::strong_ordering::less);
        }
        // Transitivity.
        if (lex_compare(a, b) != std::strong_ordering::greater &&
            lex_compare(b, c) != std::strong_ordering::greater)
            CHECK(lex_compare(a, c) != std::strong_ordering::greater);
    }
}

TEST_CASE("degree enumeration is complete, duplicate free, lex ascending") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 5; ++d) {
            auto layer = multi_indexes_of_degree(n, d);
            CHECK(Integer(static_cast<long>(layer.size())) ==
                  integer_binomial(d + n - 1, n - 1));
            for (std::size_t k = 0; k < layer.size(); ++k) {
                CHECK(layer[k].degree() == d);
                if (k + 1 < layer.size())
                    CHECK(lex_compare(layer[k], layer[k + 1]) == std::strong_ordering::less);
            }
        }
        auto box = multi_indexes_up_to_degree(n, 3);
        CHECK(Integer(static_cast<long>(box.size())) == integer_binomial(3 + n, n));
    }
}
