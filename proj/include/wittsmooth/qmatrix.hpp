#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "wittsmooth/errors.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

using QVector = std::vector<Rational>;

/// Dense matrix over the exact rationals, row-major.
class QMatrix {
public:
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw RangeError("negative matrix shape");
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static QMatrix from_rows(const std::vector<QVector>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw RangeError("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[index(r, c)]; }
    const Rational& at(int r, int c) const { return data_[index(r, c)]; }

    QMatrix operator+(const QMatrix& o) const {
        require_same_shape(o);
        QMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
        return m;
    }

    QMatrix operator-(const QMatrix& o) const {
        require_same_shape(o);
        QMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
        return m;
    }

    QMatrix scaled(const Rational& c) const {
        QMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
        return m;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw RangeError("matrix product shape mismatch");
        QMatrix m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rational& b = o.at(k, j);
                    if (b == 0) continue;
                    m.at(i, j) += a * b;
                }
            }
        return m;
    }

    QVector apply(const QVector& v) const {
        if (static_cast<int>(v.size()) != cols_) throw RangeError("matrix apply shape mismatch");
        QVector out(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            Rational acc = 0;
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j) == 0 || v[static_cast<std::size_t>(j)] == 0) continue;
                acc += at(i, j) * v[static_cast<std::size_t>(j)];
            }
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    }

    QMatrix transposed() const {
        QMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw RangeError("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    void require_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw RangeError("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> data_;
};

namespace detail {

inline Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct BareissForm {
    std::vector<std::vector<Integer>> rows;  // echelon, fraction-free
    std::vector<int> pivot_cols;             // ascending
    int sign = 1;                            // parity of row swaps
    Integer row_scale_product = 1;           // product of denominator-clearing factors
};

/// Fraction-free forward elimination (Bareiss). Row content is first made
/// integral by clearing denominators rowwise; row operations then stay in
/// Z throughout, with exact divisions by the previous pivot.
inline BareissForm bareiss_eliminate(const QMatrix& a) {
    const int m = a.rows(), n = a.cols();
    BareissForm out;
    std::vector<std::vector<Integer>> w(static_cast<std::size_t>(m),
                                        std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
        out.row_scale_product *= l;
        for (int j = 0; j < n; ++j) {
            Rational scaled = a.at(i, j) * Rational(l);
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.get_num();
        }
    }

    Integer prev = 1;
    int pivot_row = 0;
    for (int c = 0; c < n && pivot_row < m; ++c) {
        int r = pivot_row;
        while (r < m && w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0) ++r;
        if (r == m) continue;
        if (r != pivot_row) {
            std::swap(w[static_cast<std::size_t>(r)], w[static_cast<std::size_t>(pivot_row)]);
            out.sign = -out.sign;
        }
        const auto& prow = w[static_cast<std::size_t>(pivot_row)];
        for (int i = pivot_row + 1; i < m; ++i) {
            auto& row = w[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(c)] == 0) {
                // Still rescale trailing entries to keep the Bareiss invariant.
                for (int j = c + 1; j < n; ++j)
                    row[static_cast<std::size_t>(j)] =
                        exact_div(prow[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)], prev);
                continue;
            }
            for (int j = c + 1; j < n; ++j)
                row[static_cast<std::size_t>(j)] =
                    exact_div(prow[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                                  row[static_cast<std::size_t>(c)] * prow[static_cast<std::size_t>(j)],
                              prev);
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = prow[static_cast<std::size_t>(c)];
        out.pivot_cols.push_back(c);
        ++pivot_row;
    }
    w.resize(static_cast<std::size_t>(pivot_row));
    out.rows = std::move(w);
    return out;
}

} // namespace detail

inline int rank(const QMatrix& a) {
    return static_cast<int>(detail::bareiss_eliminate(a).pivot_cols.size());
}

/// Determinant of a square matrix via fraction-free elimination.
inline Rational det(const QMatrix& a) {
    if (a.rows() != a.cols()) throw RangeError("determinant of non-square matrix");
    if (a.rows() == 0) return 1;
    auto f = detail::bareiss_eliminate(a);
    if (static_cast<int>(f.pivot_cols.size()) < a.rows()) return 0;
    Integer last = f.rows.back().back();
    // With full rank every pivot sits on the diagonal, and the final Bareiss
    // pivot equals the determinant of the integer matrix.
    Rational d = make_rational(last, f.row_scale_product);
    return f.sign > 0 ? d : -d;
}

/// Normalizes a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. Keeps kernel bases deterministic.
inline QVector normalize_primitive(QVector v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Integer g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g == 0) return v;
    int lead_sign = 0;
    for (const auto& x : v) {
        if (x != 0) {
            lead_sign = sgn(x) > 0 ? 1 : -1;
            break;
        }
    }
    Rational scale = make_rational(Integer(lead_sign), g);
    for (auto& x : v) x *= scale;
    return v;
}

/// Basis of the right kernel {x : A x = 0}, one primitive vector per free
/// column, in ascending free-column order.
inline std::vector<QVector> nullspace(const QMatrix& a) {
    const int n = a.cols();
    auto f = detail::bareiss_eliminate(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : f.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVector x(static_cast<std::size_t>(n), Rational(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (int k = static_cast<int>(f.pivot_cols.size()) - 1; k >= 0; --k) {
            const int pc = f.pivot_cols[static_cast<std::size_t>(k)];
            const auto& row = f.rows[static_cast<std::size_t>(k)];
            Rational acc = 0;
            for (int j = pc + 1; j < n; ++j) {
                if (row[static_cast<std::size_t>(j)] == 0 || x[static_cast<std::size_t>(j)] == 0) continue;
                acc += Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(pc)] = -acc / Rational(row[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(normalize_primitive(std::move(x)));
    }
    return basis;
}

/// One exact solution of A x = b, or nothing when the system is
/// inconsistent. Found through the kernel of the augmented matrix [A | b]:
/// any kernel vector with a nonzero last entry rescales to a solution.
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw RangeError("rhs length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
    }
    for (const QVector& k : nullspace(aug)) {
        const Rational& t = k[static_cast<std::size_t>(a.cols())];
        if (t == 0) continue;
        QVector x(static_cast<std::size_t>(a.cols()));
        for (int c = 0; c < a.cols(); ++c) x[static_cast<std::size_t>(c)] = -k[static_cast<std::size_t>(c)] / t;
        return x;
    }
    return std::nullopt;
}

/// Incrementally maintained row space in reduced echelon form over the
/// rationals. Used by closure loops, where rows arrive one at a time.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {
        if (cols < 0) throw RangeError("negative row length");
    }

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the current basis. Returns the remainder.
    QVector reduce(QVector v) const {
        if (static_cast<int>(v.size()) != cols_) throw RangeError("row length mismatch");
        for (const auto& [pc, row] : rows_) {
            const Rational& c = v[static_cast<std::size_t>(pc)];
            if (c == 0) continue;
            Rational factor = c;  // rows are normalized with pivot 1
            for (int j = pc; j < cols_; ++j) {
                if (row[static_cast<std::size_t>(j)] == 0) continue;
                v[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
            }
        }
        return v;
    }

    bool contains(const QVector& v) const {
        QVector r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
    }

    /// Inserts v if independent of the current span. Returns true when the
    /// rank grew.
    bool insert(QVector v) {
        v = reduce(std::move(v));
        int pc = -1;
        for (int j = 0; j < cols_; ++j) {
            if (v[static_cast<std::size_t>(j)] != 0) {
                pc = j;
                break;
            }
        }
        if (pc < 0) return false;
        Rational inv = v[static_cast<std::size_t>(pc)];
        for (auto& x : v) x /= inv;
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), pc,
                                    [](const auto& row, int col) { return row.first < col; });
        rows_.insert(pos, {pc, std::move(v)});
        return true;
    }

    /// Basis rows in ascending pivot order.
    std::vector<QVector> basis() const {
        std::vector<QVector> out;
        out.reserve(rows_.size());
        for (const auto& [pc, row] : rows_) {
            (void)pc;
            out.push_back(row);
        }
        return out;
    }

private:
    int cols_;
    std::vector<std::pair<int, QVector>> rows_;
};

/// True when the two lists of vectors span the same subspace.
inline bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, int cols) {
    RowSpan sa(cols), sb(cols);
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& v : a)
        if (!sb.contains(v)) return false;
    return true;
}

} // namespace wittsmooth
