#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/errors.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/rational.hpp"

namespace wittsmooth {

namespace detail {

// Sorts idx ascending by adjacent swaps. Returns the parity of the
// permutation used, or 0 if two entries coincide.
inline int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a)
        for (std::size_t b = a; b > 0 && idx[b] < idx[b - 1]; --b) {
            std::swap(idx[b], idx[b - 1]);
            sign = -sign;
        }
    for (std::size_t a = 1; a < idx.size(); ++a)
        if (idx[a] == idx[a - 1]) return 0;
    return sign;
}

inline void increasing_tuples_rec(int n, int k, int start, std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        increasing_tuples_rec(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

// All strictly increasing k-tuples over {0,...,n-1} in lex order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    increasing_tuples_rec(n, k, 0, cur, out);
    return out;
}

}  // namespace detail

/// A finite dimensional representation of gl_n given by one matrix per
/// elementary generator. Position (i, j) holds the matrix acting for E_ij,
/// with both indices zero based. The constructor checks shapes only; use
/// check_gln_relations to certify the commutation relations, so that
/// deliberately broken tables can still be built and inspected.
class GlnModule {
  public:
    GlnModule(int n, int dim, std::vector<std::vector<QMatrix>> action,
              std::vector<std::string> labels = {})
        : n_(n), dim_(dim), action_(std::move(action)), labels_(std::move(labels)) {
        if (n_ < 1) throw ArityError("GlnModule needs n >= 1");
        if (dim_ < 1) throw ValidationError("GlnModule needs dim >= 1");
        if (static_cast<int>(action_.size()) != n_)
            throw ValidationError("action table must have n rows");
        for (const auto& row : action_) {
            if (static_cast<int>(row.size()) != n_)
                throw ValidationError("action table must have n columns");
            for (const auto& m : row)
                if (m.rows() != dim_ || m.cols() != dim_)
                    throw ValidationError("action matrices must be dim x dim");
        }
        if (!labels_.empty() && static_cast<int>(labels_.size()) != dim_)
            throw ValidationError("labels must match dim");
    }

    int arity() const { return n_; }
    int dim() const { return dim_; }

    const QMatrix& e(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw RangeError("generator index out of range");
        return action_[i][j];
    }

    /// Matrix of the identity element of gl_n, the sum of all E_ii.
    QMatrix identity_action() const {
        QMatrix m(dim_, dim_);
        for (int i = 0; i < n_; ++i) m = m + action_[i][i];
        return m;
    }

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const GlnModule& o) const {
        return n_ == o.n_ && dim_ == o.dim_ && action_ == o.action_;
    }
    bool operator!=(const GlnModule& o) const { return !(*this == o); }

  private:
    int n_;
    int dim_;
    std::vector<std::vector<QMatrix>> action_;
    std::vector<std::string> labels_;
};

/// The wedge power of the natural module, on the basis of strictly
/// increasing index tuples in lex order. E_ij sends basis vector e_m to
/// e_i when m = j, so on a wedge it replaces each factor e_j by e_i and
/// reorders, tracking the sign.
inline GlnModule exterior_power(int n, int k) {
    if (n < 1) throw ArityError("exterior_power needs n >= 1");
    if (k < 0 || k > n) throw RangeError("exterior_power needs 0 <= k <= n");
    const auto tuples = detail::increasing_tuples(n, k);
    const int dim = static_cast<int>(tuples.size());

    std::map<std::vector<int>, int> index_of;
    for (int s = 0; s < dim; ++s) index_of[tuples[s]] = s;

    std::vector<std::string> labels;
    for (const auto& tup : tuples) {
        if (tup.empty()) {
            labels.push_back("1");
            continue;
        }
        std::string lab;
        for (std::size_t p = 0; p < tup.size(); ++p) {
            if (p > 0) lab += "^";
            lab += "e" + std::to_string(tup[p] + 1);
        }
        labels.push_back(lab);
    }

    std::vector<std::vector<QMatrix>> action(n, std::vector<QMatrix>(n, QMatrix(dim, dim)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QMatrix& m = action[i][j];
            for (int col = 0; col < dim; ++col)
                for (std::size_t p = 0; p < tuples[col].size(); ++p) {
                    if (tuples[col][p] != j) continue;
                    std::vector<int> replaced = tuples[col];
                    replaced[p] = i;
                    int sign = detail::sort_sign(replaced);
                    if (sign == 0) continue;
                    m.at(index_of.at(replaced), col) += sign;
                }
        }
    return GlnModule(n, dim, std::move(action), std::move(labels));
}

/// One dimensional module where sl_n acts by zero and the identity matrix
/// acts by b, so each E_ii contributes b/n.
inline GlnModule one_dim_module(int n, const Rational& b) {
    if (n < 1) throw ArityError("one_dim_module needs n >= 1");
    std::vector<std::vector<QMatrix>> action(n, std::vector<QMatrix>(n, QMatrix(1, 1)));
    for (int i = 0; i < n; ++i) action[i][i].at(0, 0) = b / n;
    return GlnModule(n, 1, std::move(action), {"v"});
}

/// Twist by the automorphism fixing sl_n and shifting each E_ii by 1:
/// the diagonal matrices gain the identity, everything else is unchanged.
inline GlnModule tau_twist(const GlnModule& m) {
    const int n = m.arity();
    std::vector<std::vector<QMatrix>> action;
    action.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<QMatrix> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) row.push_back(m.e(i, j));
        action.push_back(std::move(row));
    }
    const QMatrix id = QMatrix::identity(m.dim());
    for (int i = 0; i < n; ++i) action[i][i] = action[i][i] + id;
    return GlnModule(n, m.dim(), std::move(action), m.labels());
}

/// First relation [E_ij, E_kl] = d_jk E_il - d_li E_kj that fails, scanning
/// (i, j, k, l) in lex order, zero based.
struct GlnViolation {
    int i = 0;
    int j = 0;
    int k = 0;
    int l = 0;

    bool operator==(const GlnViolation& o) const {
        return i == o.i && j == o.j && k == o.k && l == o.l;
    }
};

/// Verifies every commutation relation of the table exactly. Empty result
/// is a certificate that the matrices define a gl_n representation.
inline std::optional<GlnViolation> check_gln_relations(const GlnModule& m) {
    const int n = m.arity();
    const int dim = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    QMatrix lhs = m.e(i, j) * m.e(k, l) - m.e(k, l) * m.e(i, j);
                    QMatrix rhs(dim, dim);
                    if (j == k) rhs = rhs + m.e(i, l);
                    if (l == i) rhs = rhs - m.e(k, j);
                    if (!(lhs == rhs)) return GlnViolation{i, j, k, l};
                }
    return std::nullopt;
}

/// Basis of the simultaneous eigenspace { v : E_ii v = lambda_i v for all i },
/// computed as the exact null space of the stacked shifted diagonal matrices.
inline std::vector<QVector> joint_eigenvectors(const GlnModule& m,
                                               const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != m.arity())
        throw ArityError("need one eigenvalue per diagonal generator");
    const int dim = m.dim();
    QMatrix stacked(m.arity() * dim, dim);
    for (int i = 0; i < m.arity(); ++i) {
        QMatrix shifted = m.e(i, i) - QMatrix::identity(dim).scaled(lambda[i]);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) stacked.at(i * dim + r, c) = shifted.at(r, c);
    }
    return nullspace(stacked);
}

}  // namespace wittsmooth
