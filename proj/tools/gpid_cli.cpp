// gpid: exact invariants of finite-dimensional W-algebras.
//
// Subcommands: codim, cocharacter, hilbert, check-identity, capelli, bound,
// verify-paper, envelope-check. Exit codes: 0 success, 1 a verification
// check failed, 2 usage or input error. The environment variable GPI_THREADS
// bounds the number of workers; output is identical for any worker count.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpid/engine.hpp"
#include "gpid/envelope.hpp"
#include "gpid/verify.hpp"
#include "gpid/walg_io.hpp"

namespace {

using namespace gpid;

// Resolves an --algebra argument: a builtin name, "matrix:n", "grassmann:m",
// or a path to an algebra document. "free:d" is handled separately by the
// subcommands that support the free algebra.
WAction resolve_algebra(const std::string& spec) {
    if (spec == "ut2_self") return builtin_ut2_self();
    if (spec == "ut2_D") return builtin_ut2_D();
    if (spec == "ut2_F") return builtin_ut2_F();
    if (spec.rfind("matrix:", 0) == 0) return builtin_matrix(std::stoi(spec.substr(7)));
    if (spec.rfind("grassmann:", 0) == 0) return grassmann_truncated(std::stoi(spec.substr(10)));
    if (std::ifstream(spec).good()) return load_algebra_file(spec);
    throw std::invalid_argument("unknown algebra '" + spec +
                                "' (builtins: ut2_self, ut2_D, ut2_F, matrix:n, grassmann:m, free:d, or a "
                                "JSON algebra document path)");
}

std::optional<int> free_dim(const std::string& spec) {
    if (spec.rfind("free:", 0) == 0) return std::stoi(spec.substr(5));
    return std::nullopt;
}

nlohmann::json expansion_json(const SchurExpansion& exp) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [lambda, c] : exp.coeffs) j[lambda.to_string()] = rat_to_string(c);
    return j;
}

nlohmann::json series_json(const TruncatedSeries& s) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [e, c] : s.poly().terms()) {
        nlohmann::json term;
        term["exponents"] = e;
        term["coefficient"] = rat_to_string(c);
        j.push_back(term);
    }
    return j;
}

void print_expansion(const SchurExpansion& exp) {
    for (const auto& [lambda, c] : exp.coeffs)
        std::cout << "  " << lambda.to_string() << ": " << rat_to_string(c) << '\n';
}

int cmd_codim(const std::string& algebra, int n, bool json) {
    Int gc = free_dim(algebra) ? free_codimension(*free_dim(algebra), n)
                               : codimension(resolve_algebra(algebra), n);
    if (json) {
        nlohmann::json j{{"algebra", algebra}, {"n", n}, {"gc", gc.str()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gc_" << n << " = " << gc << '\n';
    }
    return 0;
}

int cmd_cocharacter(const std::string& algebra, int n, const std::string& pipeline, bool json) {
    WAction act = resolve_algebra(algebra);
    std::optional<CocharacterResult> sn;
    std::optional<SchurExpansion> gl;
    if (pipeline == "sn" || pipeline == "both") sn = cocharacter(act, n);
    if (pipeline == "gl" || pipeline == "both") gl = gl_pipeline_multiplicities(act, n, n);
    bool agree = true;
    if (sn && gl) agree = (sn->multiplicities == *gl);
    if (json) {
        nlohmann::json j{{"algebra", algebra}, {"n", n}, {"pipeline", pipeline}};
        if (sn) {
            j["multiplicities"] = expansion_json(sn->multiplicities);
            j["gc"] = sn->codim.str();
            j["gl"] = sn->colength.str();
        }
        if (gl) j["gl_pipeline_multiplicities"] = expansion_json(*gl);
        if (sn && gl) j["pipelines_agree"] = agree;
        std::cout << j.dump(2) << '\n';
    } else {
        if (sn) {
            std::cout << "cocharacter of " << act.name << " at n=" << n << " (S_n pipeline):\n";
            print_expansion(sn->multiplicities);
            std::cout << "gc_" << n << " = " << sn->codim << "\ngl_" << n << " = " << sn->colength << '\n';
        }
        if (gl) {
            std::cout << "multiplicities via the GL pipeline (k=" << n << "):\n";
            print_expansion(*gl);
        }
        if (sn && gl) std::cout << (agree ? "MATCH" : "MISMATCH") << '\n';
    }
    return agree ? 0 : 1;
}

int cmd_hilbert(const std::string& algebra, int k, int N, const std::string& closed_form, bool json) {
    TruncatedSeries series = free_dim(algebra) ? free_hilbert_truncated(*free_dim(algebra), k, N)
                                               : hilbert_truncated(resolve_algebra(algebra), k, N);
    std::optional<bool> match;
    if (!closed_form.empty()) {
        TruncatedSeries expected = [&] {
            if (closed_form == "ut2") return expand_closed_form(ClosedForm::UT2, k, N);
            if (closed_form == "ut2_D") return expand_closed_form(ClosedForm::UT2_D, k, N);
            if (closed_form == "ut2_F") return expand_closed_form(ClosedForm::UT2_F, k, N);
            if (closed_form == "free") {
                auto d = free_dim(algebra);
                if (!d) throw std::invalid_argument("--closed-form free requires --algebra free:d");
                return expand_closed_form(ClosedForm::FreeAlgebra, k, N, *d);
            }
            throw std::invalid_argument("unknown closed form '" + closed_form +
                                        "' (ut2, ut2_D, ut2_F, free)");
        }();
        match = (series == expected);
    }
    if (json) {
        nlohmann::json j{{"algebra", algebra}, {"k", k}, {"N", N}, {"series", series_json(series)}};
        if (match) j["closed_form_match"] = *match;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << series.to_string();
        if (match) std::cout << (*match ? "MATCH" : "MISMATCH") << '\n';
    }
    return (!match || *match) ? 0 : 1;
}

int cmd_check_identity(const std::string& algebra, const std::string& poly_arg, bool json) {
    WAction act = resolve_algebra(algebra);
    std::string text = poly_arg;
    if (std::ifstream probe(poly_arg); probe.good()) {
        std::ostringstream buf;
        buf << probe.rdbuf();
        text = buf.str();
    }
    GenPoly f = parse_genpoly(text, act.W.dim());
    bool id = is_identity(f, act);
    if (json) {
        nlohmann::json j{{"algebra", algebra}, {"polynomial", f.to_string()}, {"is_identity", id}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (id ? "IDENTITY" : "NOT AN IDENTITY") << '\n';
    }
    return 0;
}

int cmd_capelli(const std::string& algebra, int m, bool generalized, bool json) {
    WAction act = resolve_algebra(algebra);
    bool holds;
    std::string witness;
    if (generalized) {
        CapelliReport rep = capelli_report(act, m);
        holds = rep.holds;
        witness = rep.witness;
    } else {
        holds = is_identity(capelli(m, act.W.dim()), act);
    }
    if (json) {
        nlohmann::json j{{"algebra", algebra}, {"m", m}, {"generalized", generalized}, {"holds", holds}};
        if (!witness.empty()) j["witness"] = witness;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (generalized ? "generalized Capelli set of rank " : "Capelli polynomial of rank ") << m
                  << (holds ? ": HOLDS" : ": FAILS") << '\n';
        if (!witness.empty()) std::cout << witness << '\n';
    }
    return 0;
}

int cmd_bound(const std::string& algebra, int n, bool json) {
    BoundReport rep = multiplicity_bound_check(resolve_algebra(algebra), n); // throws on violation
    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"lambda", row.lambda.to_string()},
                            {"multiplicity", row.multiplicity.str()},
                            {"bound", row.bound.str()}});
        nlohmann::json j{{"algebra", algebra},
                         {"n", n},
                         {"rows", rows},
                         {"ordinary_multiplicities", expansion_json(rep.ordinary)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "multiplicity bound at n=" << n << " (lambda: multiplicity <= bound):\n";
        for (const auto& row : rep.rows)
            std::cout << "  " << row.lambda.to_string() << ": " << row.multiplicity << " <= " << row.bound
                      << '\n';
        std::cout << "BOUND HOLDS\n";
    }
    return 0;
}

int cmd_verify_paper(bool json) {
    AcceptanceReport report = run_acceptance_suite();
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : report.criteria)
            arr.push_back({{"number", c.number}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        nlohmann::json j{{"criteria", arr}, {"all_passed", report.all_passed()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << render_report(report);
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_envelope_check(bool json) {
    std::string detail = envelope_suite_check(); // throws on failure
    if (json) {
        nlohmann::json j{{"passed", true}, {"detail", detail}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "envelope suite passed: " << detail << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized polynomial-identity invariants of finite-dimensional W-algebras"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON instead of text tables");

    std::string algebra = "ut2_self";
    int n = 1, k = 1, N = 4, m = 1;
    std::string pipeline = "sn", closed_form, poly_arg;
    bool generalized = false;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra, "builtin name, matrix:n, grassmann:m, free:d, or JSON file");
    };

    CLI::App* codim = app.add_subcommand("codim", "generalized codimension gc_n");
    add_algebra(codim);
    codim->add_option("-n", n, "degree")->required();

    CLI::App* coch = app.add_subcommand("cocharacter", "cocharacter multiplicities, colength, codimension");
    add_algebra(coch);
    coch->add_option("-n", n, "degree")->required();
    coch->add_option("--pipeline", pipeline, "sn, gl, or both")
        ->check(CLI::IsMember({"sn", "gl", "both"}));

    CLI::App* hilbert = app.add_subcommand("hilbert", "truncated Hilbert series in k variables");
    add_algebra(hilbert);
    hilbert->add_option("-k", k, "number of variables")->required();
    hilbert->add_option("-N", N, "truncation degree")->required();
    hilbert->add_option("--closed-form", closed_form, "compare against: ut2, ut2_D, ut2_F, free");

    CLI::App* check = app.add_subcommand("check-identity", "test a generalized polynomial identity");
    add_algebra(check);
    check->add_option("--poly", poly_arg, "polynomial text or a file containing it")->required();

    CLI::App* capelli_cmd = app.add_subcommand("capelli", "Capelli polynomial / generalized Capelli set");
    add_algebra(capelli_cmd);
    capelli_cmd->add_option("-m", m, "rank")->required();
    capelli_cmd->add_flag("--generalized", generalized, "test the full generalized set");

    CLI::App* bound = app.add_subcommand("bound", "multiplicity bound report");
    add_algebra(bound);
    bound->add_option("-n", n, "degree")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the full acceptance suite");
    CLI::App* env_cmd = app.add_subcommand("envelope-check", "Grassmann envelope and sign-twist suite");

    // Let the global --json flag appear after the subcommand as well.
    for (CLI::App* sub : {codim, coch, hilbert, check, capelli_cmd, bound, verify_cmd, env_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (codim->parsed()) return cmd_codim(algebra, n, json);
        if (coch->parsed()) return cmd_cocharacter(algebra, n, pipeline, json);
        if (hilbert->parsed()) return cmd_hilbert(algebra, k, N, closed_form, json);
        if (check->parsed()) return cmd_check_identity(algebra, poly_arg, json);
        if (capelli_cmd->parsed()) return cmd_capelli(algebra, m, generalized, json);
        if (bound->parsed()) return cmd_bound(algebra, n, json);
        if (verify_cmd->parsed()) return cmd_verify_paper(json);
        if (env_cmd->parsed()) return cmd_envelope_check(json);
    } catch (const gpid::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
