#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wittsmooth/character.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/gln.hpp"
#include "wittsmooth/modules.hpp"
#include "wittsmooth/multi_index.hpp"
#include "wittsmooth/rational.hpp"
#include "wittsmooth/weyl.hpp"
#include "wittsmooth/witt.hpp"

namespace wittsmooth {
namespace jsonio {

using nlohmann::json;

// Readers validate shape and types up front and translate every schema
// problem into UsageError, so callers can map it to the usage exit code.
// Directions are one based on the wire and zero based in memory.

inline const json& expect_object(const json& j, const char* what) {
    if (!j.is_object()) throw UsageError(std::string(what) + " must be a JSON object");
    return j;
}

inline const json& expect_field(const json& j, const char* key, const char* what) {
    expect_object(j, what);
    auto it = j.find(key);
    if (it == j.end())
        throw UsageError(std::string(what) + " is missing the \"" + key + "\" field");
    return *it;
}

inline int expect_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw UsageError(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline int int_field(const json& j, const char* key, const char* what) {
    return expect_int(expect_field(j, key, what), what);
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<int>());
    if (!j.is_string())
        throw UsageError("rationals must be strings like \"p/q\" (or plain integers)");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw UsageError(std::string("bad rational: ") + e.what());
    }
}

inline json rational_to_json(const Rational& r) { return json(format_rational(r)); }

inline MultiIndex multi_index_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw UsageError("a multi-index must be a nonempty array of integers");
    std::vector<int> v;
    v.reserve(j.size());
    for (const json& entry : j) v.push_back(expect_int(entry, "multi-index entry"));
    try {
        return MultiIndex(std::move(v));
    } catch (const Error& e) {
        throw UsageError(std::string("bad multi-index: ") + e.what());
    }
}

inline json multi_index_to_json(const MultiIndex& a) {
    json out = json::array();
    for (int i = 0; i < a.arity(); ++i) out.push_back(a[i]);
    return out;
}

inline QVector qvector_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("a coefficient vector must be an array");
    QVector v;
    v.reserve(j.size());
    for (const json& entry : j) v.push_back(rational_from_json(entry));
    return v;
}

inline json qvector_to_json(const QVector& v) {
    json out = json::array();
    for (const Rational& c : v) out.push_back(rational_to_json(c));
    return out;
}

inline WittElement witt_from_json(const json& j) {
    const int n = int_field(j, "n", "a vector field");
    if (n < 1) throw UsageError("a vector field needs n >= 1");
    WittElement x(n);
    const json& terms = expect_field(j, "terms", "a vector field");
    if (!terms.is_array()) throw UsageError("\"terms\" must be an array");
    for (const json& t : terms) {
        MultiIndex alpha = multi_index_from_json(expect_field(t, "alpha", "a field term"));
        const int dir = int_field(t, "i", "a field term");
        if (dir < 1 || dir > n) throw UsageError("term direction must be in 1..n");
        Rational c = rational_from_json(expect_field(t, "c", "a field term"));
        try {
            x.add_term(alpha, dir - 1, c);
        } catch (const Error& e) {
            throw UsageError(std::string("bad field term: ") + e.what());
        }
    }
    return x;
}

inline json witt_to_json(const WittElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms())
        terms.push_back(json{{"alpha", multi_index_to_json(key.alpha)},
                             {"i", key.dir + 1},
                             {"c", rational_to_json(c)}});
    return json{{"n", x.arity()}, {"terms", std::move(terms)}};
}

inline WeylElement weyl_from_json(const json& j) {
    const int n = int_field(j, "n", "a Weyl element");
    if (n < 1) throw UsageError("a Weyl element needs n >= 1");
    WeylElement x(n);
    const json& terms = expect_field(j, "terms", "a Weyl element");
    if (!terms.is_array()) throw UsageError("\"terms\" must be an array");
    for (const json& t : terms) {
        MultiIndex beta = multi_index_from_json(expect_field(t, "beta", "a Weyl term"));
        MultiIndex gamma = multi_index_from_json(expect_field(t, "gamma", "a Weyl term"));
        Rational c = rational_from_json(expect_field(t, "c", "a Weyl term"));
        try {
            x.add_term(beta, gamma, c);
        } catch (const Error& e) {
            throw UsageError(std::string("bad Weyl term: ") + e.what());
        }
    }
    return x;
}

inline json weyl_to_json(const WeylElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms())
        terms.push_back(json{{"beta", multi_index_to_json(key.beta)},
                             {"gamma", multi_index_to_json(key.gamma)},
                             {"c", rational_to_json(c)}});
    return json{{"n", x.arity()}, {"terms", std::move(terms)}};
}

inline P0Vector p0_from_json(const json& j) {
    const int n = int_field(j, "n", "a P0 vector");
    if (n < 1) throw UsageError("a P0 vector needs n >= 1");
    P0Vector v(n);
    const json& terms = expect_field(j, "terms", "a P0 vector");
    if (!terms.is_array()) throw UsageError("\"terms\" must be an array");
    for (const json& t : terms) {
        MultiIndex gamma = multi_index_from_json(expect_field(t, "gamma", "a P0 term"));
        Rational c = rational_from_json(expect_field(t, "c", "a P0 term"));
        try {
            v.add_term(gamma, c);
        } catch (const Error& e) {
            throw UsageError(std::string("bad P0 term: ") + e.what());
        }
    }
    return v;
}

inline json p0_to_json(const P0Vector& v) {
    json terms = json::array();
    for (const auto& [gamma, c] : v.terms())
        terms.push_back(json{{"gamma", multi_index_to_json(gamma)},
                             {"c", rational_to_json(c)}});
    return json{{"n", v.arity()}, {"terms", std::move(terms)}};
}

inline GlnModule gln_from_json(const json& j) {
    const int n = int_field(j, "n", "a gl_n module");
    const int dim = int_field(j, "dim", "a gl_n module");
    if (n < 1 || dim < 1) throw UsageError("a gl_n module needs n >= 1 and dim >= 1");
    const json& table = expect_field(j, "E", "a gl_n module");
    if (!table.is_array() || static_cast<int>(table.size()) != n)
        throw UsageError("\"E\" must be an n by n table of matrices");
    std::vector<std::vector<QMatrix>> action;
    for (const json& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw UsageError("\"E\" must be an n by n table of matrices");
        std::vector<QMatrix> mats;
        for (const json& mj : row) {
            if (!mj.is_array() || static_cast<int>(mj.size()) != dim)
                throw UsageError("each action matrix must have dim rows");
            QMatrix m(dim, dim);
            for (int r = 0; r < dim; ++r) {
                const json& rowj = mj[static_cast<std::size_t>(r)];
                if (!rowj.is_array() || static_cast<int>(rowj.size()) != dim)
                    throw UsageError("each action matrix must have dim columns");
                for (int c = 0; c < dim; ++c)
                    m.at(r, c) = rational_from_json(rowj[static_cast<std::size_t>(c)]);
            }
            mats.push_back(std::move(m));
        }
        action.push_back(std::move(mats));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& lj = j.at("labels");
        if (!lj.is_array()) throw UsageError("\"labels\" must be an array of strings");
        for (const json& l : lj) {
            if (!l.is_string()) throw UsageError("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    try {
        return GlnModule(n, dim, std::move(action), std::move(labels));
    } catch (const Error& e) {
        throw UsageError(std::string("bad gl_n module: ") + e.what());
    }
}

inline json gln_to_json(const GlnModule& m) {
    json table = json::array();
    for (int i = 0; i < m.arity(); ++i) {
        json row = json::array();
        for (int jx = 0; jx < m.arity(); ++jx) {
            const QMatrix& mat = m.e(i, jx);
            json mj = json::array();
            for (int r = 0; r < mat.rows(); ++r) {
                json rowj = json::array();
                for (int c = 0; c < mat.cols(); ++c)
                    rowj.push_back(rational_to_json(mat.at(r, c)));
                mj.push_back(std::move(rowj));
            }
            row.push_back(std::move(mj));
        }
        table.push_back(std::move(row));
    }
    json out{{"n", m.arity()}, {"dim", m.dim()}, {"E", std::move(table)}};
    if (!m.labels().empty()) out["labels"] = m.labels();
    return out;
}

inline ModuleVector module_vector_from_json(const json& j) {
    const int n = int_field(j, "n", "a module vector");
    const int dim = int_field(j, "dim", "a module vector");
    if (n < 1 || dim < 1) throw UsageError("a module vector needs n >= 1 and dim >= 1");
    ModuleVector w(n, dim);
    const json& terms = expect_field(j, "terms", "a module vector");
    if (!terms.is_array()) throw UsageError("\"terms\" must be an array");
    for (const json& t : terms) {
        MultiIndex alpha = multi_index_from_json(expect_field(t, "alpha", "a module term"));
        QVector v = qvector_from_json(expect_field(t, "v", "a module term"));
        if (static_cast<int>(v.size()) != dim)
            throw UsageError("module term component length must equal dim");
        try {
            w.add_term(alpha, v);
        } catch (const Error& e) {
            throw UsageError(std::string("bad module term: ") + e.what());
        }
    }
    return w;
}

inline json module_vector_to_json(const ModuleVector& w) {
    json terms = json::array();
    for (const auto& [alpha, v] : w.terms())
        terms.push_back(json{{"alpha", multi_index_to_json(alpha)},
                             {"v", qvector_to_json(v)}});
    return json{{"n", w.arity()}, {"dim", w.component_dim()}, {"terms", std::move(terms)}};
}

inline WhittakerCharacter whittaker_character_from_json(const json& j) {
    const json& pj = expect_field(j, "p", "a character");
    const json& qj = expect_field(j, "q", "a character");
    QVector ps = qvector_from_json(pj);
    QVector qs = qvector_from_json(qj);
    if (ps.size() != 4 || qs.size() != 2)
        throw UsageError("a character needs four \"p\" values and two \"q\" values");
    return WhittakerCharacter(std::move(ps), std::move(qs));
}

/// Builds a module handle from a descriptor {"family", "n", "data"}.
/// User supplied gl_n tables are certified before use, so a descriptor
/// never silently produces a non-representation.
inline SmoothModule module_from_json(const json& j) {
    const json& fam = expect_field(j, "family", "a module descriptor");
    if (!fam.is_string()) throw UsageError("\"family\" must be a string");
    const std::string family = fam.get<std::string>();
    const int n = int_field(j, "n", "a module descriptor");
    if (n < 1) throw UsageError("a module descriptor needs n >= 1");

    if (family == "trivial") return SmoothModule::trivial_module(n);

    const json& data = expect_field(j, "data", "a module descriptor");
    if (family == "tensor" || family == "induced") {
        expect_object(data, "gl_n data");
        GlnModule m = [&]() {
            if (data.contains("E")) return gln_from_json(data);
            if (data.contains("exterior")) {
                const int k = int_field(data, "exterior", "gl_n data");
                if (k < 0 || k > n) throw UsageError("exterior power degree must lie in 0..n");
                return exterior_power(n, k);
            }
            if (data.contains("one_dim"))
                return one_dim_module(n, rational_from_json(data.at("one_dim")));
            throw UsageError("gl_n data needs \"E\", \"exterior\", or \"one_dim\"");
        }();
        if (data.contains("twist")) {
            if (!data.at("twist").is_boolean()) throw UsageError("\"twist\" must be a boolean");
            if (data.at("twist").get<bool>()) m = tau_twist(m);
        }
        if (m.arity() != n) throw UsageError("descriptor arity disagrees with the gl_n table");
        if (auto bad = check_gln_relations(m))
            throw ValidationError("action table fails a bracket relation at E_" +
                                  std::to_string(bad->i + 1) + std::to_string(bad->j + 1) +
                                  ", E_" + std::to_string(bad->k + 1) +
                                  std::to_string(bad->l + 1));
        if (family == "tensor") return SmoothModule::tensor(std::move(m));
        return SmoothModule::induced(std::make_shared<const GlnCoefficientSpace>(std::move(m)));
    }
    if (family == "whittaker") {
        if (n != 2) throw UsageError("the whittaker family lives over n = 2");
        const int cap = int_field(data, "cap", "whittaker data");
        if (cap < 1) throw UsageError("whittaker truncation cap must be >= 1");
        return make_whittaker_induced(whittaker_character_from_json(data), cap);
    }
    if (family == "wphi") {
        Rational lambda = rational_from_json(expect_field(data, "lambda", "wphi data"));
        return make_w_phi(n, lambda);
    }
    throw UsageError("unknown module family \"" + family + "\"");
}

}  // namespace jsonio
}  // namespace wittsmooth
