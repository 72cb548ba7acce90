#pragma once

#include <gmpxx.h>

#include <string>

#include "wittsmooth/errors.hpp"

namespace wittsmooth {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator, zero stored as 0/1. All arithmetic in the library
/// goes through this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", or "p/q" with optional sign on p. Throws UsageError on
/// malformed text and DivisionByZeroError on a zero denominator.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t k = start; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw UsageError("malformed rational literal: " + text);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer n(num), d(den);
    return make_rational(n, d);
}

/// Renders canonically: "p" when the denominator is 1, otherwise "p/q".
inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZeroError("division by zero");
    return a / b;
}

inline Integer integer_factorial(int k) {
    if (k < 0) throw RangeError("factorial of negative integer");
    Integer acc = 1;
    for (int j = 2; j <= k; ++j) acc *= j;
    return acc;
}

/// Binomial coefficient with the usual convention C(n, k) = 0 for k > n.
inline Integer integer_binomial(int n, int k) {
    if (n < 0 || k < 0) throw RangeError("binomial with negative argument");
    if (k > n) return 0;
    Integer acc = 1;
    for (int j = 1; j <= k; ++j) {
        acc *= (n - k + j);
        acc /= j;
    }
    return acc;
}

} // namespace wittsmooth
