#pragma once

#include <vector>

#include "wittsmooth/errors.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/rational.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {

/// Character of the nonnegative part determined by a single scalar, the
/// value on the Euler field. Everything in the derived subalgebra maps to
/// zero, which covers the traceless degree zero part and all higher grades,
/// so only the diagonal fields t_i d_i pick up lambda / n.
class EulerCharacter {
  public:
    EulerCharacter(int n, Rational lambda) : n_(n), lambda_(std::move(lambda)) {
        if (n < 1) throw ArityError("character needs n >= 1");
    }

    int arity() const { return n_; }
    const Rational& lambda() const { return lambda_; }

    Rational value(const WittElement& x) const {
        if (x.arity() != n_) throw ArityError("character arity mismatch");
        Rational out(0);
        for (const auto& [key, c] : x.terms()) {
            const int grade = witt_grade(key);
            if (grade < 0) throw RangeError("character is defined on grades >= 0");
            if (grade == 0 && key.alpha == MultiIndex::unit(n_, key.dir))
                out += c * lambda_ / n_;
        }
        return out;
    }

  private:
    int n_;
    Rational lambda_;
};

/// Character of the strictly positive part of the two variable algebra.
/// It is free on the degree one piece, written in the p, q frame, and
/// vanishes identically from degree two on. Values on arbitrary degree one
/// elements come from an exact change of basis into that frame.
class WhittakerCharacter {
  public:
    WhittakerCharacter(std::vector<Rational> p_values, std::vector<Rational> q_values)
        : p_(std::move(p_values)), q_(std::move(q_values)) {
        if (p_.size() != 4 || q_.size() != 2)
            throw ArityError("need four p values and two q values");
    }

    int arity() const { return 2; }
    const Rational& p(int k) const {
        if (k < 0 || k > 3) throw RangeError("p index out of range");
        return p_[static_cast<std::size_t>(k)];
    }
    const Rational& q(int k) const {
        if (k < 0 || k > 1) throw RangeError("q index out of range");
        return q_[static_cast<std::size_t>(k)];
    }
    bool q_vanishes() const { return q_[0] == 0 && q_[1] == 0; }

    Rational value(const WittElement& x) const {
        if (x.arity() != 2) throw ArityError("character is specific to n = 2");
        Rational out(0);
        for (const auto& [grade, part] : grade_split(x)) {
            if (grade < 1) throw RangeError("character is defined on grades >= 1");
            if (grade > 1) continue;
            QVector coords = frame_coordinates(part);
            for (int k = 0; k < 4; ++k) out += coords[static_cast<std::size_t>(k)] * p_[static_cast<std::size_t>(k)];
            for (int k = 0; k < 2; ++k) out += coords[static_cast<std::size_t>(4 + k)] * q_[static_cast<std::size_t>(k)];
        }
        return out;
    }

    /// Coordinates of a degree one element in the frame p0..p3, q0, q1.
    static QVector frame_coordinates(const WittElement& x) {
        auto sol = solve_linear(frame_matrix(), grade_coordinates(x, 1));
        if (!sol) throw RangeError("element is outside the degree one frame");
        return *sol;
    }

  private:
    static const QMatrix& frame_matrix() {
        static const QMatrix m = [] {
            std::vector<WittElement> frame;
            for (int k = 0; k <= 3; ++k) frame.push_back(w2plus::p(k));
            for (int k = 0; k <= 1; ++k) frame.push_back(w2plus::q(k));
            QMatrix cols(6, 6);
            for (int j = 0; j < 6; ++j) {
                QVector col = grade_coordinates(frame[static_cast<std::size_t>(j)], 1);
                for (int r = 0; r < 6; ++r) cols.at(r, j) = col[static_cast<std::size_t>(r)];
            }
            return cols;
        }();
        return m;
    }

    std::vector<Rational> p_;
    std::vector<Rational> q_;
};

}  // namespace wittsmooth
