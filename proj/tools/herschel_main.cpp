#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "herschel/errors.hpp"
#include "herschel/format.hpp"
#include "herschel/polylog.hpp"
#include "herschel/selfcheck.hpp"
#include "herschel/sequences.hpp"
#include "herschel/zero_differences.hpp"

namespace {

using herschel::Rational;
using herschel::RationalPolynomial;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitInternal = 70;

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

ordered_json scalar_json(const std::string& command, ordered_json inputs,
                         const std::string& result) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = result;
    return doc;
}

// One row: prefix cells, then the ascending coefficients c_first..c_deg.
void emit_polynomial_csv(const std::string& n_label, std::size_t n,
                         const RationalPolynomial& p, std::size_t first) {
    std::string header = n_label;
    std::string row = std::to_string(n);
    const std::size_t deg = p.is_zero() ? first : p.degree();
    for (std::size_t k = first; k <= deg; ++k) {
        header += ",c" + std::to_string(k);
        row += "," + herschel::rational_to_string(p.coeff(k));
    }
    std::cout << header << "\n" << row << "\n";
}

int emit_polynomial(const std::string& command, std::size_t n, const RationalPolynomial& p,
                    const std::string& var, std::size_t csv_first, const std::string& format) {
    if (format == "plain") {
        std::cout << herschel::polynomial_str(p, var) << "\n";
    } else if (format == "csv") {
        emit_polynomial_csv("n", n, p, csv_first);
    } else {
        ordered_json doc;
        doc["command"] = command;
        doc["inputs"] = {{"n", n}};
        doc["result"] = herschel::polynomial_coeff_strings(p);
        emit_json(doc);
    }
    return kExitOk;
}

int emit_scalar(const std::string& command, std::size_t n, const std::string& value,
                const std::string& format) {
    if (format == "plain") {
        std::cout << value << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n" << n << "," << value << "\n";
    } else {
        emit_json(scalar_json(command, {{"n", n}}, value));
    }
    return kExitOk;
}

int emit_evaluated(const std::string& command, std::size_t n, const std::string& at,
                   const Rational& value, const std::string& format) {
    const std::string text = herschel::rational_to_string(value);
    if (format == "plain") {
        std::cout << text << "\n";
    } else if (format == "csv") {
        std::cout << "n,at,value\n" << n << "," << at << "," << text << "\n";
    } else {
        emit_json(scalar_json(command, {{"n", n}, {"at", at}}, text));
    }
    return kExitOk;
}

int run_diff_table(std::size_t n_max, const std::string& format) {
    auto& table = herschel::shared_difference_table();
    table.ensure_rows(n_max);
    if (format == "plain") {
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::cout << n << ":";
            for (std::size_t j = 0; j <= n; ++j) std::cout << " " << table.delta_zero(j, n);
            std::cout << "\n";
        }
    } else if (format == "csv") {
        std::cout << "n,j,value\n";
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (std::size_t j = 0; j <= n; ++j) {
                std::cout << n << "," << j << "," << table.delta_zero(j, n) << "\n";
            }
        }
    } else {
        ordered_json rows = ordered_json::array();
        for (std::size_t n = 0; n <= n_max; ++n) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j <= n; ++j) row.push_back(table.delta_zero(j, n).get_str());
            rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["command"] = "diff-table";
        doc["inputs"] = {{"n_max", n_max}};
        doc["result"] = std::move(rows);
        emit_json(doc);
    }
    return kExitOk;
}

int run_polylog(const std::string& s_text, const std::string& x_text, double rel_tol,
                std::size_t max_terms, double radius_guard, const std::string& format) {
    herschel::PolylogRequest req;
    req.s = herschel::parse_complex(s_text);
    req.x = herschel::parse_complex(x_text);
    req.rel_tol = rel_tol;
    req.max_terms = max_terms;
    req.radius_guard = radius_guard;
    const herschel::PolylogResult res = herschel::polylog_eval(req);

    const bool converged = res.status == herschel::PolylogStatus::converged;
    const bool have_value = res.status != herschel::PolylogStatus::outside_guard;
    if (format == "plain") {
        if (have_value) std::cout << herschel::complex_str(res.value) << "\n";
    } else if (format == "csv") {
        std::cout << "s,x,value,error_estimate,terms_used,status\n";
        std::cout << s_text << "," << x_text << ","
                  << (have_value ? herschel::complex_str(res.value) : "") << ","
                  << herschel::double_str(res.abs_error_estimate) << "," << res.terms_used << ","
                  << herschel::to_string(res.status) << "\n";
    } else {
        ordered_json doc;
        doc["command"] = "polylog";
        doc["inputs"] = {{"s", s_text},          {"x", x_text},
                         {"rel_tol", rel_tol},   {"max_terms", max_terms},
                         {"radius_guard", radius_guard}};
        if (have_value) {
            doc["result"] = herschel::complex_str(res.value);
        } else {
            doc["result"] = nullptr;
        }
        doc["error_estimate"] = res.abs_error_estimate;
        doc["terms_used"] = res.terms_used;
        doc["status"] = herschel::to_string(res.status);
        emit_json(doc);
    }
    if (!converged) {
        std::cerr << "polylog: " << herschel::to_string(res.status)
                  << " (error estimate " << herschel::double_str(res.abs_error_estimate)
                  << " after " << res.terms_used << " terms)\n";
        return kExitConvergence;
    }
    return kExitOk;
}

// Join each value option with '=' so negative numbers and complex literals
// survive CLI11 token classification untouched.
std::vector<std::string> normalized_args(int argc, char** argv) {
    static const std::set<std::string> value_options = {
        "--s", "--x", "--at", "--rel-tol", "--max-terms", "--radius-guard", "--format"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (value_options.count(arg) && i + 1 < argc) {
            out.push_back(arg + "=" + argv[++i]);
        } else {
            out.push_back(std::move(arg));
        }
    }
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Herschel-transform toolkit: exact classical sequences and Li_s(x)"};
    app.require_subcommand(1);

    std::size_t n = 0, j = 0;
    std::string format = "plain";
    std::string at_text, s_text, x_text;
    double rel_tol = 1e-15, radius_guard = 0.99;
    std::size_t max_terms = 200;

    CLI::App* diff = app.add_subcommand("diff-table", "Differences of zero, rows 0..n");
    diff->add_option("n", n, "largest row")->required();
    add_format_option(diff, format);

    CLI::App* stir = app.add_subcommand("stirling2", "Stirling number of the second kind");
    stir->add_option("n", n)->required();
    stir->add_option("j", j)->required();
    add_format_option(stir, format);

    CLI::App* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n");
    bern->add_option("n", n)->required();
    add_format_option(bern, format);

    CLI::App* gen = app.add_subcommand("genocchi", "Genocchi number G_n");
    gen->add_option("n", n)->required();
    add_format_option(gen, format);

    CLI::App* epoly = app.add_subcommand("euler-poly", "Euler polynomial E_n(x)");
    epoly->add_option("n", n)->required();
    epoly->add_option("--at", at_text, "evaluate at a rational point");
    add_format_option(epoly, format);

    CLI::App* enum_ = app.add_subcommand("euler-number", "Euler number 2^n E_n(1/2)");
    enum_->add_option("n", n)->required();
    add_format_option(enum_, format);

    CLI::App* eul = app.add_subcommand("eulerian", "Eulerian polynomial A_n(lambda)");
    eul->add_option("n", n)->required();
    eul->add_option("--at", at_text, "evaluate at a rational point");
    add_format_option(eul, format);

    CLI::App* carl = app.add_subcommand("carlitz-h", "Carlitz H_n(lambda)");
    carl->add_option("n", n)->required();
    carl->add_option("--at", at_text, "rational lambda, not 0 or 1")->required();
    add_format_option(carl, format);

    CLI::App* poly = app.add_subcommand("polylog", "Li_s(x) on the cut plane");
    poly->add_option("--s", s_text, "complex order")->required();
    poly->add_option("--x", x_text, "complex argument")->required();
    poly->add_option("--rel-tol", rel_tol, "relative tolerance");
    poly->add_option("--max-terms", max_terms, "series length limit");
    poly->add_option("--radius-guard", radius_guard, "|t| acceptance radius");
    add_format_option(poly, format);

    CLI::App* self = app.add_subcommand("selfcheck", "Run the oracle/identity suite");

    std::vector<std::string> args = normalized_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);  // help requests
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (diff->parsed()) return run_diff_table(n, format);
    if (stir->parsed()) {
        const std::string value = herschel::stirling2(n, j).get_str();
        if (format == "plain") {
            std::cout << value << "\n";
        } else if (format == "csv") {
            std::cout << "n,j,value\n" << n << "," << j << "," << value << "\n";
        } else {
            emit_json(scalar_json("stirling2", {{"n", n}, {"j", j}}, value));
        }
        return kExitOk;
    }
    if (bern->parsed()) {
        return emit_scalar("bernoulli", n, herschel::rational_to_string(herschel::bernoulli(n)),
                           format);
    }
    if (gen->parsed()) {
        return emit_scalar("genocchi", n, herschel::genocchi(n).get_str(), format);
    }
    if (epoly->parsed()) {
        RationalPolynomial p = herschel::euler_polynomial(n);
        if (at_text.empty()) return emit_polynomial("euler-poly", n, p, "x", 0, format);
        Rational at = herschel::parse_rational(at_text);
        return emit_evaluated("euler-poly", n, at_text, p(at), format);
    }
    if (enum_->parsed()) {
        return emit_scalar("euler-number", n, herschel::euler_number(n).get_str(), format);
    }
    if (eul->parsed()) {
        RationalPolynomial p = herschel::eulerian_polynomial(n);
        if (at_text.empty()) {
            return emit_polynomial("eulerian", n, p, "lambda", n == 0 ? 0 : 1, format);
        }
        Rational at = herschel::parse_rational(at_text);
        return emit_evaluated("eulerian", n, at_text, p(at), format);
    }
    if (carl->parsed()) {
        Rational at = herschel::parse_rational(at_text);
        return emit_evaluated("carlitz-h", n, at_text, herschel::carlitz_h(n, at), format);
    }
    if (poly->parsed()) {
        return run_polylog(s_text, x_text, rel_tol, max_terms, radius_guard, format);
    }
    if (self->parsed()) {
        return herschel::run_selfcheck(std::cout) == 0 ? kExitOk : 1;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("HERSCHEL_TABLE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(cap, &end, 10);
        if (end == cap || *end != '\0') {
            std::cerr << "error: HERSCHEL_TABLE_CAP is not an integer: '" << cap << "'\n";
            return kExitUsage;
        }
        herschel::set_table_cap(v);
    }

    try {
        return dispatch(argc, argv);
    } catch (const herschel::table_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const herschel::precision_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
