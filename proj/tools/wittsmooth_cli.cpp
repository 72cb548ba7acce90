#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittsmooth/analysis.hpp"
#include "wittsmooth/errors.hpp"
#include "wittsmooth/json_io.hpp"
#include "wittsmooth/modules.hpp"
#include "wittsmooth/suites.hpp"
#include "wittsmooth/weyl.hpp"
#include "wittsmooth/witt.hpp"

namespace {

using namespace wittsmooth;
using nlohmann::json;

struct Flags {
    std::optional<int> n;
    std::optional<int> degree;
    std::optional<int> grade_cap;
};

/// Outcome of one subcommand: the JSON document for stdout plus whether the
/// run counts as a passed check. Computations always pass; certificate style
/// commands report their verdict here so the exit code can follow it.
struct RunResult {
    json out;
    bool ok = true;
};

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open input file \"" + path + "\"");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

void guard_arity(const Flags& flags, int arity, const char* what) {
    if (flags.n && *flags.n != arity)
        throw UsageError(std::string(what) + " has arity " + std::to_string(arity) +
                         " but --n " + std::to_string(*flags.n) + " was given");
}

int optional_int(const json& in, const char* key, int fallback) {
    if (!in.is_object() || !in.contains(key)) return fallback;
    return jsonio::int_field(in, key, "request");
}

TruncationWindow resolve_window(SmoothModule mod, const json& in, const Flags& flags,
                                int default_degree, int default_grade) {
    const int degree = flags.degree ? *flags.degree : optional_int(in, "degree", default_degree);
    const int grade = flags.grade_cap ? *flags.grade_cap : optional_int(in, "grade_cap", default_grade);
    const int cap = optional_int(in, "component_degree_cap", std::numeric_limits<int>::max());
    return TruncationWindow(std::move(mod), degree, grade, cap);
}

json window_to_json(const TruncationWindow& win) {
    json w = {{"degree_bound", win.degree_bound()},
              {"grade_bound", win.grade_bound()},
              {"dim", win.dim()},
              {"ambient_dim", win.ambient_dim()}};
    const int cap = win.component_degree_cap();
    w["component_degree_cap"] = cap == std::numeric_limits<int>::max() ? json(nullptr) : json(cap);
    return w;
}

json basis_to_json(const std::vector<ModuleVector>& basis) {
    json out = json::array();
    for (const ModuleVector& b : basis) out.push_back(jsonio::module_vector_to_json(b));
    return out;
}

SmoothModule module_field(const json& in, const Flags& flags) {
    const json& desc = in.contains("module") ? in.at("module") : in;
    SmoothModule mod = jsonio::module_from_json(desc);
    guard_arity(flags, mod.arity(), "module");
    return mod;
}

RunResult do_bracket(const json& in, const Flags& flags) {
    WittElement x = jsonio::witt_from_json(jsonio::expect_field(in, "x", "bracket request"));
    WittElement y = jsonio::witt_from_json(jsonio::expect_field(in, "y", "bracket request"));
    guard_arity(flags, x.arity(), "operand x");
    guard_arity(flags, y.arity(), "operand y");
    return {jsonio::witt_to_json(bracket(x, y)), true};
}

RunResult do_weyl_mul(const json& in, const Flags& flags) {
    WeylElement x = jsonio::weyl_from_json(jsonio::expect_field(in, "x", "weyl-mul request"));
    WeylElement y = jsonio::weyl_from_json(jsonio::expect_field(in, "y", "weyl-mul request"));
    guard_arity(flags, x.arity(), "operand x");
    guard_arity(flags, y.arity(), "operand y");
    return {jsonio::weyl_to_json(weyl_multiply(x, y)), true};
}

RunResult do_p0_act(const json& in, const Flags& flags) {
    WeylElement a = jsonio::weyl_from_json(jsonio::expect_field(in, "a", "p0-act request"));
    P0Vector v = jsonio::p0_from_json(jsonio::expect_field(in, "v", "p0-act request"));
    guard_arity(flags, a.arity(), "operator a");
    guard_arity(flags, v.arity(), "vector v");
    return {jsonio::p0_to_json(p0_act(a, v)), true};
}

RunResult do_gln_check(const json& in, const Flags& flags) {
    GlnModule m = jsonio::gln_from_json(in);
    guard_arity(flags, m.arity(), "module table");
    auto violation = check_gln_relations(m);
    json out = {{"n", m.arity()}, {"dim", m.dim()}, {"ok", !violation.has_value()}};
    if (violation)
        out["violation"] = {{"i", violation->i + 1},
                            {"j", violation->j + 1},
                            {"k", violation->k + 1},
                            {"l", violation->l + 1}};
    return {std::move(out), !violation.has_value()};
}

RunResult do_act(const json& in, const Flags& flags) {
    SmoothModule mod = module_field(in, flags);
    WittElement x = jsonio::witt_from_json(jsonio::expect_field(in, "x", "act request"));
    ModuleVector v = jsonio::module_vector_from_json(jsonio::expect_field(in, "v", "act request"));
    return {jsonio::module_vector_to_json(mod.act(x, v)), true};
}

RunResult do_induce(const json& in, const Flags& flags) {
    SmoothModule mod = module_field(in, flags);
    const int degree = flags.degree ? *flags.degree : optional_int(in, "degree", 3);
    if (degree < 0) throw UsageError("--degree must be >= 0");
    json dims = json::array();
    for (int d = 0; d <= degree; ++d)
        dims.push_back(static_cast<int>(mod.graded_basis(d).size()));
    return {json{{"family", mod.family_name()},
                 {"n", mod.arity()},
                 {"component_dim", mod.component_dim()},
                 {"ell", mod.ell()},
                 {"degree", degree},
                 {"graded_dims", std::move(dims)}},
            true};
}

RunResult do_quotient_dims(const json& in, const Flags& flags) {
    TruncationWindow win = resolve_window(module_field(in, flags), in, flags, 4, 5);
    std::vector<ModuleVector> gens;
    const json& raw = jsonio::expect_field(in, "generators", "quotient request");
    if (!raw.is_array()) throw UsageError("\"generators\" must be an array");
    for (const json& g : raw) gens.push_back(jsonio::module_vector_from_json(g));
    std::vector<int> dims = quotient_graded_dims(win, gens);
    return {json{{"window", window_to_json(win)}, {"dims", dims}}, true};
}

RunResult do_height(const json& in, const Flags& flags) {
    TruncationWindow win = resolve_window(module_field(in, flags), in, flags, 3, 5);
    std::optional<int> h = height(win);
    json out = {{"window", window_to_json(win)}};
    if (h) {
        out["height"] = *h;
        out["annihilator_basis"] = basis_to_json(annihilator_space(win, *h));
    } else {
        out["height"] = nullptr;
        out["annihilator_basis"] = json::array();
    }
    return {std::move(out), true};
}

RunResult do_annihilator(const json& in, const Flags& flags) {
    TruncationWindow win = resolve_window(module_field(in, flags), in, flags, 3, 5);
    const int r = jsonio::int_field(in, "r", "annihilator request");
    std::vector<ModuleVector> basis = annihilator_space(win, r);
    return {json{{"window", window_to_json(win)},
                 {"r", r},
                 {"dim", static_cast<int>(basis.size())},
                 {"basis", basis_to_json(basis)}},
            true};
}

RunResult do_cyclicity(const json& in, const Flags& flags) {
    TruncationWindow win = resolve_window(module_field(in, flags), in, flags, 3, 4);
    ModuleVector v =
        jsonio::module_vector_from_json(jsonio::expect_field(in, "v", "cyclicity request"));
    const int check_degree = jsonio::int_field(in, "check_degree", "cyclicity request");
    ClosureResult res = cyclicity_certificate(win, v, check_degree);
    return {json{{"window", window_to_json(win)},
                 {"check_degree", res.checked_degree},
                 {"certificate", res.certificate},
                 {"reached_rank", res.reached_rank},
                 {"slice_dim", res.slice_dim},
                 {"reached_basis", basis_to_json(res.reached)}},
            res.certificate};
}

RunResult do_orbit(const json& in, const Flags& flags) {
    SmoothModule mod = module_field(in, flags);
    const int n = mod.arity();
    TruncationWindow win = resolve_window(std::move(mod), in, flags, 4, 6);
    const int direction = jsonio::int_field(in, "direction", "orbit request");
    const int grade = jsonio::int_field(in, "grade", "orbit request");
    if (direction < 1 || direction > n)
        throw UsageError("direction must lie in 1.." + std::to_string(n));
    ModuleVector v =
        jsonio::module_vector_from_json(jsonio::expect_field(in, "v", "orbit request"));
    const int dim = local_finiteness_orbit(win, direction - 1, grade, v);
    return {json{{"window", window_to_json(win)},
                 {"direction", direction},
                 {"grade", grade},
                 {"dim", dim}},
            true};
}

RunResult do_smoothness_bound(const json& in, const Flags& flags) {
    TruncationWindow win = resolve_window(module_field(in, flags), in, flags, 4, 6);
    MultiIndex alpha =
        jsonio::multi_index_from_json(jsonio::expect_field(in, "alpha", "smoothness request"));
    const int cutoff = smoothness_bound_check(win, alpha);
    return {json{{"window", window_to_json(win)},
                 {"alpha", jsonio::multi_index_to_json(alpha)},
                 {"cutoff", cutoff}},
            true};
}

RunResult do_aphi_det(const json& in, const Flags& flags) {
    (void)flags;
    WhittakerCharacter phi = jsonio::whittaker_character_from_json(in);
    QMatrix a = aphi_matrix(phi);
    Rational d = aphi_det(phi);
    json matrix = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(jsonio::rational_to_json(a.at(r, c)));
        matrix.push_back(std::move(row));
    }
    json kernel = json::array();
    for (const QVector& v : quasi_whittaker_vectors_deg1(phi))
        kernel.push_back(jsonio::qvector_to_json(v));
    return {json{{"matrix", std::move(matrix)},
                 {"det", jsonio::rational_to_json(d)},
                 {"kernel_deg1", std::move(kernel)}},
            true};
}

RunResult do_intertwine(const json& in, const Flags& flags) {
    SmoothModule src = jsonio::module_from_json(jsonio::expect_field(in, "source", "intertwine request"));
    SmoothModule tgt = jsonio::module_from_json(jsonio::expect_field(in, "target", "intertwine request"));
    guard_arity(flags, src.arity(), "source module");
    guard_arity(flags, tgt.arity(), "target module");
    const json& raw = jsonio::expect_field(in, "images", "intertwine request");
    if (!raw.is_array()) throw UsageError("\"images\" must be an array");
    std::vector<ModuleVector> images;
    for (const json& g : raw) images.push_back(jsonio::module_vector_from_json(g));
    TruncationWindow swin = resolve_window(std::move(src), in, flags, 4, 5);
    TruncationWindow twin(std::move(tgt), swin.degree_bound(), swin.grade_bound());
    IntertwinerReport rep = intertwiner_check(swin, twin, images);
    json out = {{"source_window", window_to_json(swin)},
                {"target_window", window_to_json(twin)},
                {"certificate", rep.certificate}};
    out["violation"] = rep.certificate ? json(nullptr) : json(rep.violation);
    return {std::move(out), rep.certificate};
}

const std::map<std::string, RunResult (*)(const json&, const Flags&)>& eval_ops() {
    static const std::map<std::string, RunResult (*)(const json&, const Flags&)> ops = {
        {"bracket", do_bracket},
        {"weyl-mul", do_weyl_mul},
        {"p0-act", do_p0_act},
        {"gln-check", do_gln_check},
        {"act", do_act},
        {"induce", do_induce},
        {"quotient-dims", do_quotient_dims},
        {"height", do_height},
        {"annihilator", do_annihilator},
        {"cyclicity", do_cyclicity},
        {"orbit", do_orbit},
        {"smoothness-bound", do_smoothness_bound},
        {"aphi-det", do_aphi_det},
        {"intertwine", do_intertwine},
    };
    return ops;
}

RunResult do_eval(const json& in, const Flags& flags) {
    const json& op = jsonio::expect_field(in, "op", "eval request");
    if (!op.is_string()) throw UsageError("\"op\" must be a string");
    const auto it = eval_ops().find(op.get<std::string>());
    if (it == eval_ops().end())
        throw UsageError("unknown operation \"" + op.get<std::string>() + "\"");
    return it->second(in, flags);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for polynomial vector fields and their smooth modules"};
    app.require_subcommand(1);

    bool pretty = false;
    app.add_flag("--json", pretty, "pretty-print the JSON output");
    std::uint64_t seed = 20240817u;
    app.add_option("--seed", seed, "seed for randomized suites")->envname("WITT_SMOOTH_SEED");

    Flags flags;
    std::string in_path = "-";
    std::string suite_name;
    int arg_r = 0;
    int arg_check_degree = 0;
    int arg_direction = 1;
    int arg_grade = 1;

    struct Command {
        const char* name;
        const char* help;
        RunResult (*handler)(const json&, const Flags&);
        bool window;
    };
    const std::vector<Command> commands = {
        {"bracket", "Lie bracket of two vector fields", do_bracket, false},
        {"weyl-mul", "product of two Weyl algebra elements", do_weyl_mul, false},
        {"gln-check", "certify a matrix action table as a gl_n module", do_gln_check, false},
        {"act", "apply a vector field to a module vector", do_act, false},
        {"induce", "realize a module descriptor and list graded dimensions", do_induce, true},
        {"quotient-dims", "graded dimensions of a quotient by generated submodule", do_quotient_dims, true},
        {"height", "least grade with a nonzero annihilator space", do_height, true},
        {"annihilator", "basis of the annihilator space at grade r", do_annihilator, true},
        {"cyclicity", "closure certificate for a cyclic vector", do_cyclicity, true},
        {"orbit", "dimension of a one generator orbit", do_orbit, true},
        {"aphi-det", "criterion matrix, determinant and degree one kernel", do_aphi_det, false},
        {"intertwine", "certify degree zero images as an intertwiner", do_intertwine, true},
        {"eval", "evaluate one JSON request naming an operation", do_eval, true},
    };

    std::map<std::string, const Command*> handlers;
    std::map<std::string, CLI::App*> subs;
    for (const Command& s : commands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("--n", flags.n, "expected arity of every parsed object");
        if (s.window) {
            sub->add_option("--degree", flags.degree, "degree bound of the truncation window");
            sub->add_option("--grade-cap", flags.grade_cap, "largest acting grade of the window");
        }
        handlers[s.name] = &s;
        subs[s.name] = sub;
    }
    subs["annihilator"]->add_option("r", arg_r, "annihilator grade")->required();
    subs["cyclicity"]->add_option("check_degree", arg_check_degree, "degree of the slice to reach")
        ->required();
    subs["orbit"]->add_option("direction", arg_direction, "derivation direction, 1-based")->required();
    subs["orbit"]->add_option("grade", arg_grade, "grade of the acting field")->required();
    for (const Command& s : commands)
        subs[s.name]->add_option("input", in_path, "JSON input file, - for stdin");

    CLI::App* suite = app.add_subcommand("suite", "run one named verification suite");
    suite->fallthrough();
    suite->add_option("name", suite_name, "suite name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        RunResult result;
        if (app.got_subcommand(suite)) {
            suites::SuiteReport rep = suites::run_suite(suite_name, seed);
            result = {suites::suite_report_to_json(rep), rep.passed()};
        } else {
            json in = read_input(in_path);
            const std::string name = app.get_subcommands().front()->get_name();
            if (name == "annihilator") in["r"] = arg_r;
            if (name == "cyclicity") in["check_degree"] = arg_check_degree;
            if (name == "orbit") {
                in["direction"] = arg_direction;
                in["grade"] = arg_grade;
            }
            result = handlers.at(name)->handler(in, flags);
        }
        std::cout << (pretty ? result.out.dump(2) : result.out.dump()) << "\n";
        return result.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
