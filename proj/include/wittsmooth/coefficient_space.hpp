#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wittsmooth/character.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/gln.hpp"
#include "wittsmooth/qmatrix.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {

/// Finite dimensional module over the nonnegative part of the algebra,
/// used as the bottom layer of an induced module. Implementations promise
/// that every grade at or above nilpotency_level() acts by zero.
class CoefficientSpace {
  public:
    virtual ~CoefficientSpace() = default;

    virtual int arity() const = 0;
    virtual int dim() const = 0;
    virtual int nilpotency_level() const = 0;

    /// Action of an element with all terms in grades >= 0.
    virtual QVector act(const WittElement& x, const QVector& v) const = 0;

    /// Internal degree of the k-th basis vector, zero unless the space
    /// carries its own filtration.
    virtual int basis_degree(int k) const {
        if (k < 0 || k >= dim()) throw RangeError("basis index out of range");
        return 0;
    }

    virtual std::string family_name() const = 0;
};

/// Coefficient space built from a gl_n representation: the degree zero
/// fields t_i d_j act through the matching elementary matrices and every
/// positive grade acts by zero.
class GlnCoefficientSpace : public CoefficientSpace {
  public:
    explicit GlnCoefficientSpace(GlnModule m) : module_(std::move(m)) {}

    int arity() const override { return module_.arity(); }
    int dim() const override { return module_.dim(); }
    int nilpotency_level() const override { return 1; }
    std::string family_name() const override { return "gln"; }

    const GlnModule& module() const { return module_; }

    QVector act(const WittElement& x, const QVector& v) const override {
        if (x.arity() != module_.arity()) throw ArityError("action arity mismatch");
        if (static_cast<int>(v.size()) != module_.dim()) throw RangeError("vector length mismatch");
        QVector out(v.size(), Rational(0));
        for (const auto& [key, c] : x.terms()) {
            const int grade = witt_grade(key);
            if (grade < 0) throw RangeError("coefficient space only sees grades >= 0");
            if (grade > 0) continue;
            int i = 0;
            while (key.alpha[i] == 0) ++i;
            QVector img = module_.e(i, key.dir).apply(v);
            for (std::size_t r = 0; r < out.size(); ++r) out[r] += c * img[r];
        }
        return out;
    }

  private:
    GlnModule module_;
};

/// Truncation of the universal module generated by a single vector on
/// which the degree one fields act through a fixed character and higher
/// degrees act by zero. The basis consists of ordered monomials
/// e^a i^b h^c f^d applied to the generator, listed degree first and then
/// lex on the exponents, up to total degree cap.
///
/// Degree zero fields multiply on the left and are straightened back into
/// ordered form with bracket data computed from the algebra itself; results
/// that would leave the truncation raise CapExceeded instead of being cut.
/// Positive fields commute through the word letter by letter, ending in a
/// character evaluation, which never raises the degree.
class WhittakerCoefficientSpace : public CoefficientSpace {
  public:
    WhittakerCoefficientSpace(WhittakerCharacter phi, int cap)
        : phi_(std::move(phi)), cap_(cap) {
        if (cap_ < 1) throw RangeError("truncation cap must be at least 1");
        letters_ = {w2plus::e(), w2plus::i(), w2plus::h(), w2plus::f()};

        for (int d = 0; d <= cap_; ++d) {
            std::vector<Exponents> level;
            for (int a = 0; a <= d; ++a)
                for (int b = 0; a + b <= d; ++b)
                    for (int c = 0; a + b + c <= d; ++c)
                        level.push_back(Exponents{a, b, c, d - a - b - c});
            std::sort(level.begin(), level.end());
            for (const auto& m : level) monomials_.push_back(m);
        }
        for (std::size_t s = 0; s < monomials_.size(); ++s)
            index_of_[monomials_[s]] = static_cast<int>(s);

        QMatrix frame(4, 4);
        for (int j = 0; j < 4; ++j) {
            QVector col = grade_coordinates(letters_[static_cast<std::size_t>(j)], 0);
            for (int r = 0; r < 4; ++r) frame.at(r, j) = col[static_cast<std::size_t>(r)];
        }
        frame_ = std::make_unique<QMatrix>(frame);

        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                WittElement b = bracket(letters_[static_cast<std::size_t>(x)],
                                        letters_[static_cast<std::size_t>(y)]);
                QVector coords(4, Rational(0));
                if (!b.is_zero()) {
                    auto sol = solve_linear(*frame_, grade_coordinates(b, 0));
                    if (!sol) throw Error("letter bracket left the degree zero frame");
                    coords = *sol;
                }
                // Straightening termination leans on brackets staying inside
                // the letter interval of the pair; certify that up front.
                const int lo = std::min(x, y), hi = std::max(x, y);
                for (int k = 0; k < 4; ++k)
                    if (coords[static_cast<std::size_t>(k)] != 0 && (k < lo || k > hi))
                        throw Error("letter bracket escaped its interval");
                letter_bracket_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = coords;
            }
    }

    int arity() const override { return 2; }
    int dim() const override { return static_cast<int>(monomials_.size()); }
    int nilpotency_level() const override { return 2; }
    std::string family_name() const override { return "whittaker"; }

    const WhittakerCharacter& character() const { return phi_; }
    int degree_cap() const { return cap_; }

    using Exponents = std::array<int, 4>;
    const std::vector<Exponents>& basis_exponents() const { return monomials_; }

    int basis_degree(int k) const override {
        if (k < 0 || k >= dim()) throw RangeError("basis index out of range");
        const Exponents& m = monomials_[static_cast<std::size_t>(k)];
        return m[0] + m[1] + m[2] + m[3];
    }

    int dim_up_to_degree(int d) const {
        int count = 0;
        for (int k = 0; k < dim(); ++k)
            if (basis_degree(k) <= d) ++count;
        return count;
    }

    QVector act(const WittElement& x, const QVector& v) const override {
        if (x.arity() != 2) throw ArityError("action arity mismatch");
        if (static_cast<int>(v.size()) != dim()) throw RangeError("vector length mismatch");

        WittElement zero_part(2), positive_part(2);
        for (const auto& [grade, part] : grade_split(x)) {
            if (grade < 0) throw RangeError("coefficient space only sees grades >= 0");
            if (grade == 0)
                zero_part = part;
            else
                positive_part = positive_part + part;
        }

        Combo out;
        for (int k = 0; k < dim(); ++k) {
            const Rational& c = v[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!zero_part.is_zero()) add_scaled(out, mult_degree_zero(zero_part, monomials_[static_cast<std::size_t>(k)]), c);
            if (!positive_part.is_zero()) add_scaled(out, act_positive(positive_part, monomials_[static_cast<std::size_t>(k)]), c);
        }

        QVector result(static_cast<std::size_t>(dim()), Rational(0));
        for (const auto& [m, c] : out) result[static_cast<std::size_t>(index_of_.at(m))] = c;
        return result;
    }

    /// Matrix of the action with columns restricted to basis monomials of
    /// degree at most source_degree. Rows run over the whole truncation.
    QMatrix action_matrix(const WittElement& x, int source_degree) const {
        std::vector<int> sources;
        for (int k = 0; k < dim(); ++k)
            if (basis_degree(k) <= source_degree) sources.push_back(k);
        QMatrix m(dim(), static_cast<int>(sources.size()));
        for (std::size_t col = 0; col < sources.size(); ++col) {
            QVector unit(static_cast<std::size_t>(dim()), Rational(0));
            unit[static_cast<std::size_t>(sources[col])] = 1;
            QVector img = act(x, unit);
            for (int r = 0; r < dim(); ++r) m.at(r, static_cast<int>(col)) = img[static_cast<std::size_t>(r)];
        }
        return m;
    }

  private:
    using Combo = std::map<Exponents, Rational>;

    static void add_into(Combo& combo, const Exponents& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = combo.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) combo.erase(it);
        }
    }

    static void add_scaled(Combo& into, const Combo& from, const Rational& c) {
        for (const auto& [m, v] : from) add_into(into, m, v * c);
    }

    static int first_letter(const Exponents& m) {
        for (int s = 0; s < 4; ++s)
            if (m[static_cast<std::size_t>(s)] > 0) return s;
        return -1;
    }

    Combo mult_letter(int letter, Exponents mono) const {
        const int s = first_letter(mono);
        if (s < 0 || letter <= s) {
            ++mono[static_cast<std::size_t>(letter)];
            if (mono[0] + mono[1] + mono[2] + mono[3] > cap_)
                throw CapExceeded("monomial degree left the truncation");
            Combo out;
            out.emplace(mono, Rational(1));
            return out;
        }
        --mono[static_cast<std::size_t>(s)];
        Combo pushed = mult_letter(letter, mono);
        Combo out;
        for (const auto& [m, c] : pushed) add_scaled(out, mult_letter(s, m), c);
        const QVector& coords = letter_bracket_[static_cast<std::size_t>(letter)][static_cast<std::size_t>(s)];
        for (int k = 0; k < 4; ++k)
            if (coords[static_cast<std::size_t>(k)] != 0)
                add_scaled(out, mult_letter(k, mono), coords[static_cast<std::size_t>(k)]);
        return out;
    }

    Combo mult_degree_zero(const WittElement& x, const Exponents& mono) const {
        auto sol = solve_linear(*frame_, grade_coordinates(x, 0));
        if (!sol) throw Error("degree zero element left the letter frame");
        Combo out;
        for (int letter = 0; letter < 4; ++letter) {
            const Rational& c = (*sol)[static_cast<std::size_t>(letter)];
            if (c != 0) add_scaled(out, mult_letter(letter, mono), c);
        }
        return out;
    }

    Combo act_positive(const WittElement& y, const Exponents& mono) const {
        const int s = first_letter(mono);
        Combo out;
        if (s < 0) {
            add_into(out, mono, phi_.value(y));
            return out;
        }
        Exponents rest = mono;
        --rest[static_cast<std::size_t>(s)];
        Combo inner = act_positive(y, rest);
        for (const auto& [m, c] : inner) add_scaled(out, mult_letter(s, m), c);
        WittElement z = bracket(y, letters_[static_cast<std::size_t>(s)]);
        if (!z.is_zero()) add_scaled(out, act_positive(z, rest), Rational(1));
        return out;
    }

    WhittakerCharacter phi_;
    int cap_;
    std::array<WittElement, 4> letters_{WittElement(2), WittElement(2), WittElement(2), WittElement(2)};
    std::vector<Exponents> monomials_;
    std::map<Exponents, int> index_of_;
    std::unique_ptr<QMatrix> frame_;
    std::array<std::array<QVector, 4>, 4> letter_bracket_;
};

}  // namespace wittsmooth
