#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latang/json_io.hpp"
#include "latang/latang_lib.hpp"

// Command-line surface. Every subcommand reads exact integers/rationals and
// writes a stable JSON envelope to stdout:
//   {"status":"ok","version":"1","result":{...}}
//   {"status":"error","version":"1","error":{"code":...,"message":...}}
// Exit codes: 0 success (not_found included), 1 internal violation
// (failed verify), 2 parse or validation error.

namespace latang {
namespace cli {

inline constexpr const char* schema_version = "1";

// Strict integer syntax: optional sign, digits. Floats are rejected with a
// pointed message since every value in the pipeline is exact.
inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    if (s.find_first_of(".eE") != std::string::npos)
        throw std::invalid_argument("'" + s + "' looks like a floating-point value; only exact integers or fractions like 7/4 are accepted");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("'" + s + "' is not an integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("'" + s + "' is not an integer");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(n) / Rational(d);
}

inline IntVec parse_vector(const std::string& s) {
    std::vector<Int> comps;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        comps.push_back(parse_int(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return IntVec(std::move(comps));
}

namespace detail {

struct AngleFlags {
    std::string tan2;
    bool obtuse = false;
    std::string degenerate;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tan2", tan2, "exact tan^2 of the angle, as T or Tn/Td");
        cmd->add_flag("--obtuse", obtuse, "pick the obtuse representative");
        cmd->add_option("--degenerate", degenerate, "zero, right, or straight")
            ->check(CLI::IsMember({"zero", "right", "straight"}));
    }

    bool present() const { return !tan2.empty() || !degenerate.empty(); }

    AngleClass parse() const {
        if (!tan2.empty() && !degenerate.empty())
            throw std::invalid_argument("give either --tan2 or --degenerate, not both");
        if (!degenerate.empty()) {
            if (degenerate == "zero") return AngleClass::zero();
            if (degenerate == "right") return AngleClass::right();
            return AngleClass::straight();
        }
        if (tan2.empty()) throw std::invalid_argument("an angle is required: --tan2 or --degenerate");
        Rational t = parse_rational(tan2);
        if (t <= 0) throw std::invalid_argument("--tan2 must be positive");
        return AngleClass::oblique(t, obtuse);
    }
};

inline Int env_box_bound(const Int& fallback) {
    const char* env = std::getenv("LATANG_BOX_BOUND");
    if (!env || !*env) return fallback;
    Int b = parse_int(env);
    if (b < 1) throw std::invalid_argument("LATANG_BOX_BOUND must be >= 1");
    return b;
}

inline Place parse_place(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity();
    return Place::at_prime(parse_int(s));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decisions about angles between integer vectors"};
    app.name("latang");
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");
    app.require_subcommand(0, 1);

    // membership
    auto* mem = app.add_subcommand("membership",
                                   "decide whether an angle is realizable (optionally against a fixed vector)");
    int mem_dim = 0;
    std::string mem_vector;
    detail::AngleFlags mem_angle;
    mem->add_option("--dim", mem_dim, "lattice dimension (>= 2)");
    mem->add_option("--vector", mem_vector, "fixed integer vector, comma-separated");
    mem_angle.attach(mem);

    // witness
    auto* wit = app.add_subcommand("witness", "construct an integer vector forming the angle");
    int wit_dim = 0;
    std::string wit_vector, wit_bound;
    detail::AngleFlags wit_angle;
    wit->add_option("--dim", wit_dim, "lattice dimension (checked against --vector)");
    wit->add_option("--vector", wit_vector, "fixed integer vector, comma-separated")->required();
    wit->add_option("--bound", wit_bound, "search budget (max coordinate / coefficient)");
    wit_angle.attach(wit);

    // exclude
    auto* exc = app.add_subcommand("exclude",
                                   "produce an excluded angle for a vector, or an excluding vector for an angle");
    std::string exc_vector;
    detail::AngleFlags exc_angle;
    exc->add_option("--vector", exc_vector, "three-dimensional integer vector");
    exc_angle.attach(exc);

    // classify
    auto* cls = app.add_subcommand("classify", "closed-form membership plus the criterion cross-check");
    std::string cls_norm2, cls_tan2;
    int cls_theorem = 0;
    cls->add_option("--norm2", cls_norm2, "squared norm of the fixed vector")->required();
    cls->add_option("--tan2", cls_tan2, "exact tan^2 of the angle")->required();
    cls->add_option("--theorem", cls_theorem, "3 (norm-shaped) or 4 (tangent-shaped); default: auto")
        ->check(CLI::IsMember({3, 4}));

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert symbol of two rationals at a place");
    std::string hil_a, hil_b, hil_place;
    hil->add_option("--a", hil_a)->required();
    hil->add_option("--b", hil_b)->required();
    hil->add_option("--place", hil_place, "an odd prime, 2, or inf")->required();

    // inventory
    auto* inv = app.add_subcommand("inventory", "all angle classes realized within a box");
    std::string inv_vector, inv_box;
    inv->add_option("--vector", inv_vector)->required();
    inv->add_option("--box", inv_box, "max-norm bound of the scanned box")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "cross-check decisions against the brute-force oracle");
    int ver_dim = 3;
    std::string ver_vec_bound = "2", ver_height = "10", ver_box = "50";
    ver->add_option("--dim", ver_dim, "dimension in 2..6 (default 3)");
    ver->add_option("--vec-bound", ver_vec_bound, "max-norm of swept base vectors");
    ver->add_option("--tan2-height", ver_height, "largest square-free tangent class");
    ver->add_option("--box", ver_box, "oracle box and construction budget");

    auto emit = [&](const Json& envelope) { out << (pretty ? envelope.dump(2) : envelope.dump()) << "\n"; };
    auto emit_ok = [&](Json result) {
        emit(Json{{"status", "ok"}, {"version", schema_version}, {"result", std::move(result)}});
    };
    auto emit_error = [&](const std::string& code, const std::string& message) {
        err << "latang: " << message << "\n";
        emit(Json{{"status", "error"}, {"version", schema_version},
                  {"error", Json{{"code", code}, {"message", message}}}});
    };

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("latang");
    for (const auto& s : args) argv_storage.push_back(s);
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (mem->parsed()) {
            AngleClass angle = mem_angle.parse();
            if (!mem_vector.empty()) {
                IntVec a = parse_vector(mem_vector);
                if (mem_dim != 0 && mem_dim != a.dim())
                    throw std::invalid_argument("--dim does not match the vector length");
                emit_ok(to_json(theta_n_of_a_contains(a, angle)));
            } else {
                if (mem_dim == 0) throw std::invalid_argument("membership needs --vector or --dim");
                bool member = theta_n_contains(mem_dim, angle);
                emit_ok(Json{{"member", member}, {"method", method_name(Method::closed_form)}});
            }
            return 0;
        }
        if (wit->parsed()) {
            AngleClass angle = wit_angle.parse();
            IntVec a = parse_vector(wit_vector);
            if (wit_dim != 0 && wit_dim != a.dim())
                throw std::invalid_argument("--dim does not match the vector length");
            SearchBudget budget = SearchBudget::default_for_dim(a.dim());
            budget.box_bound = detail::env_box_bound(budget.box_bound);
            if (!wit_bound.empty()) budget.box_bound = parse_int(wit_bound);
            auto w = witness_for_angle(a, angle, budget);
            if (w)
                emit_ok(Json{{"witness", to_json(*w)}});
            else
                emit_ok(Json{{"witness", nullptr}, {"not_found", true}});
            return 0;
        }
        if (exc->parsed()) {
            bool have_vector = !exc_vector.empty();
            if (have_vector == exc_angle.present())
                throw std::invalid_argument("exclude needs exactly one of --vector or an angle");
            if (have_vector) {
                ExcludedAngle ex = excluded_angle(parse_vector(exc_vector));
                emit_ok(Json{{"angle", to_json(ex.angle)}, {"case", std::string(1, ex.case_label)}});
            } else {
                IntVec v = excluded_vector(exc_angle.parse());
                emit_ok(Json{{"vector", to_json(v)}, {"norm2", to_json(norm2(v))}});
            }
            return 0;
        }
        if (cls->parsed()) {
            Int normA2 = parse_int(cls_norm2);
            Rational tan2 = parse_rational(cls_tan2);
            int theorem = cls_theorem;
            if (theorem == 0) {
                Int s = squarefree_part(Rational(normA2));
                theorem = (s == 1 || s == 2 || is_prime(s)) ? 3 : 4;
            }
            bool criterion = symbol_criterion(normA2, tan2).member;
            Json result{{"theorem", theorem}, {"criterion", criterion}};
            if (theorem == 3) {
                bool closed = classify_norm_shaped(normA2, tan2);
                result["closed_form"] = closed;
                result["agree"] = closed == criterion;
            } else {
                bool closed = classify_tangent_shaped(normA2, tan2);
                bool literal = classify_tangent_shaped_literal(normA2, tan2);
                result["closed_form"] = closed;
                result["agree"] = closed == criterion;
                result["literal_reading"] = literal;
                result["literal_diverges"] = literal != closed;
            }
            emit_ok(std::move(result));
            return 0;
        }
        if (hil->parsed()) {
            Rational a = parse_rational(hil_a);
            Rational b = parse_rational(hil_b);
            emit_ok(Json{{"value", hilbert_symbol(a, b, detail::parse_place(hil_place))}});
            return 0;
        }
        if (inv->parsed()) {
            emit_ok(to_json(angle_inventory(parse_vector(inv_vector), parse_int(inv_box))));
            return 0;
        }
        if (ver->parsed()) {
            ConsistencyReport rep = consistency_report(ver_dim, parse_int(ver_vec_bound),
                                                       parse_int(ver_height), parse_int(ver_box));
            emit_ok(to_json(rep));
            return rep.ok() ? 0 : 1;
        }
        out << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("invalid_argument", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace cli
}  // namespace latang
