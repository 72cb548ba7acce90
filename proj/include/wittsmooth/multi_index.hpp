#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wittsmooth/errors.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

/// Exponent vector of a monomial in n commuting variables. Entries are
/// non-negative and the arity n >= 1 is fixed at construction. Values are
/// immutable once built; all operations return fresh objects.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty()) throw RangeError("multi-index needs arity >= 1");
        for (int e : exps_)
            if (e < 0) throw RangeError("multi-index with negative exponent");
    }

    static MultiIndex zero(int n) {
        if (n < 1) throw RangeError("multi-index needs arity >= 1");
        return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
    }

    /// Standard unit vector e_i (0-based direction).
    static MultiIndex unit(int n, int i) {
        if (n < 1) throw RangeError("multi-index needs arity >= 1");
        if (i < 0 || i >= n) throw RangeError("unit direction out of range");
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        return MultiIndex(std::move(v));
    }

    int arity() const { return static_cast<int>(exps_.size()); }

    /// Total degree |alpha|.
    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    int operator[](int i) const {
        if (i < 0 || i >= arity()) throw RangeError("multi-index entry out of range");
        return exps_[static_cast<std::size_t>(i)];
    }

    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const MultiIndex& o) const { return exps_ == o.exps_; }
    bool operator!=(const MultiIndex& o) const { return exps_ != o.exps_; }

    /// Canonical text form "(a1,...,an)".
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < exps_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(exps_[k]);
        }
        s += ")";
        return s;
    }

private:
    std::vector<int> exps_;
};

inline void require_same_arity(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity())
        throw ArityError("multi-index arity mismatch: " + std::to_string(a.arity()) +
                         " vs " + std::to_string(b.arity()));
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    require_same_arity(a, b);
    std::vector<int> v(a.exponents());
    for (int i = 0; i < b.arity(); ++i) v[static_cast<std::size_t>(i)] += b[i];
    return MultiIndex(std::move(v));
}

/// Componentwise difference; throws RangeError if any entry would go negative.
inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
    require_same_arity(a, b);
    std::vector<int> v(a.exponents());
    for (int i = 0; i < b.arity(); ++i) {
        v[static_cast<std::size_t>(i)] -= b[i];
        if (v[static_cast<std::size_t>(i)] < 0)
            throw RangeError("multi-index difference has negative entry");
    }
    return MultiIndex(std::move(v));
}

/// Componentwise difference, or nullopt when it would leave the cone.
inline std::optional<MultiIndex> mi_sub_checked(const MultiIndex& a, const MultiIndex& b) {
    require_same_arity(a, b);
    std::vector<int> v(a.exponents());
    for (int i = 0; i < b.arity(); ++i) {
        v[static_cast<std::size_t>(i)] -= b[i];
        if (v[static_cast<std::size_t>(i)] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(v));
}

/// True when b <= a componentwise.
inline bool mi_divides(const MultiIndex& b, const MultiIndex& a) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

/// Product of componentwise binomials; 0 when b does not divide a.
inline Rational mi_binomial(const MultiIndex& a, const MultiIndex& b) {
    require_same_arity(a, b);
    Integer acc = 1;
    for (int i = 0; i < a.arity(); ++i) {
        acc *= integer_binomial(a[i], b[i]);
        if (acc == 0) break;
    }
    return Rational(acc);
}

/// Product of componentwise factorials, as a scalar.
inline Rational mi_factorial(const MultiIndex& a) {
    Integer acc = 1;
    for (int i = 0; i < a.arity(); ++i) acc *= integer_factorial(a[i]);
    return Rational(acc);
}

/// Lexicographic comparison: the first differing coordinate decides.
inline std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

/// Strict-less functor for ordered containers keyed by multi-indexes.
struct MultiIndexLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return lex_compare(a, b) == std::strong_ordering::less;
    }
};

/// All multi-indexes of arity n with total degree d, in ascending lex order.
inline std::vector<MultiIndex> multi_indexes_of_degree(int n, int d) {
    if (n < 1) throw RangeError("multi-index needs arity >= 1");
    if (d < 0) throw RangeError("negative degree");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Recursive enumeration; positions are filled left to right with
    // ascending values, which yields ascending lex order overall.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// All multi-indexes of arity n with total degree <= d, degree-major
/// (degree 0 first), lex ascending within each degree.
inline std::vector<MultiIndex> multi_indexes_up_to_degree(int n, int d) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= d; ++m) {
        auto layer = multi_indexes_of_degree(n, m);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace wittsmooth
