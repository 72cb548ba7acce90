#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

/// Deterministic source of random test data. Every randomized check in the
/// library takes its draws from one of these, seeded explicitly, so reports
/// and failures reproduce exactly.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : engine_(seed) {}

    int int_in(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(engine_);
    }

    /// Nonzero numerator in [-num_bound, num_bound], denominator in [1, den_bound].
    Rational rational(int num_bound, int den_bound) {
        int num = 0;
        while (num == 0) num = int_in(-num_bound, num_bound);
        return make_rational(num, int_in(1, den_bound));
    }

    /// Rational that may be zero.
    Rational rational_or_zero(int num_bound, int den_bound) {
        return make_rational(int_in(-num_bound, num_bound), int_in(1, den_bound));
    }

    /// Multi-index of arity n with total degree <= max_degree, drawn by
    /// choosing a degree uniformly and then distributing it.
    MultiIndex multi_index(int n, int max_degree) {
        return multi_index_of_degree(n, int_in(0, max_degree));
    }

    MultiIndex multi_index_of_degree(int n, int degree) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < degree; ++k)
            v[static_cast<std::size_t>(int_in(0, n - 1))] += 1;
        return MultiIndex(std::move(v));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace wittsmooth
