#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadguess/guess.hpp"
#include "quadguess/io.hpp"
#include "quadguess/oracles.hpp"
#include "quadguess/render.hpp"
#include "quadguess/sequence.hpp"

namespace quadguess::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, bad_input = 3 };

enum class Format { text, latex, json };

namespace detail {

inline int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::degenerate_input:
    case ErrorKind::insufficient_terms:
        return bad_input;
    case ErrorKind::leading_coefficient_zero:
    case ErrorKind::inconsistent_initial_terms:
    case ErrorKind::nonlinear_step:
        return failed;
    default:
        return usage;
    }
}

inline void print_equation(std::ostream &out, const QuadEquation &eq, Format format)
{
    if (format == Format::latex) {
        out << "ode: " << to_latex(ode_tree(eq)) << "\n";
        out << "recurrence: " << to_latex(recurrence_tree(eq)) << "\n";
    } else {
        out << "ode: " << to_text(ode_tree(eq)) << "\n";
        out << "recurrence: " << to_text(recurrence_tree(eq)) << "\n";
    }
    out << "json: " << to_json(eq).dump() << "\n";
}

inline nlohmann::json prefix_json(const SequencePrefix &p)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto &v : p.values)
        a.push_back(v.str());
    return a;
}

} // namespace detail

/// Runs one invocation; results go to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Guess quadratic differential equations and recurrences from sequence prefixes"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::text}, {"latex", Format::latex}, {"json", Format::json}};
    Format format = Format::text;
    const auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
    };

    std::string input, equation_path, lambda_text, oracle_name;
    long count = 0;
    GuessConfig cfg;
    int d_max = 0;

    auto *guess_cmd = app.add_subcommand("guess", "Guess equations from a sequence prefix");
    guess_cmd->add_option("--input", input, "Prefix file (one p/q per line, or JSON array)")->required();
    guess_cmd->add_option("--max-poly-deg", cfg.m, "Degree bound m for the polynomial coefficients")
        ->check(CLI::NonNegativeNumber);
    guess_cmd->add_option("--d-start", cfg.d_start, "First ansatz size d")->check(CLI::PositiveNumber);
    guess_cmd->add_option("--d-max", d_max, "Last ansatz size d (default ceil((N+1)/(m+1)))")
        ->check(CLI::PositiveNumber);
    guess_cmd->add_option("--min-verify", cfg.min_verify_rows, "Minimum number of verification rows")
        ->check(CLI::NonNegativeNumber);
    guess_cmd->add_option("--rescale", lambda_text, "Replace a_n by a_n / lambda^n before guessing");
    add_format(guess_cmd);

    auto *extend_cmd = app.add_subcommand("extend", "Extend a prefix with an equation");
    extend_cmd->add_option("--equation", equation_path, "Equation JSON file")->required();
    extend_cmd->add_option("--input", input, "Initial terms")->required();
    extend_cmd->add_option("--count", count, "Number of terms to append")->required()->check(CLI::NonNegativeNumber);
    add_format(extend_cmd);

    auto *check_cmd = app.add_subcommand("check", "Check an equation against a prefix");
    check_cmd->add_option("--equation", equation_path, "Equation JSON file")->required();
    check_cmd->add_option("--input", input, "Prefix file")->required();
    add_format(check_cmd);

    auto *oracle_cmd = app.add_subcommand("oracle", "Print a reference sequence");
    oracle_cmd->add_option("--name", oracle_name, "bernoulli-egf, euler-egf, bell-egf, zigzag-egf, zeta-rescaled, "
                                                  "lambertw or exp")
        ->required();
    oracle_cmd->add_option("--count", count, "Number of terms")->required()->check(CLI::PositiveNumber);
    add_format(oracle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (*oracle_cmd) {
            auto seq = oracle_sequence(oracle_name, count);
            if (format == Format::json)
                out << detail::prefix_json(seq).dump() << "\n";
            else
                out << format_prefix(seq);
            return ok;
        }

        if (*guess_cmd) {
            if (d_max > 0)
                cfg.d_max = d_max;
            cfg.validate();
            auto prefix = load_prefix(input);
            if (!lambda_text.empty()) {
                const Rational lambda = Rational::parse(lambda_text);
                prefix = rescale_prefix(prefix, lambda);
                err << "note: guessing on a_n / (" << lambda << ")^n\n";
            }
            auto result = guess(prefix, cfg);
            if (format == Format::json) {
                out << to_json(result).dump() << "\n";
            } else if (result.ok()) {
                out << "success: d=" << result.d << " m=" << result.m << " rows: construction="
                    << result.construction_rows << " verification=" << result.verification_rows << "\n";
                for (std::size_t i = 0; i < result.basis.size(); ++i) {
                    out << "[" << i + 1 << "]\n";
                    detail::print_equation(out, result.basis[i], format);
                }
            } else {
                out << "FAIL\n";
            }
            return result.ok() ? ok : failed;
        }

        if (*extend_cmd) {
            auto eq = load_equation(equation_path);
            auto seq = extend(eq, load_prefix(input), count);
            if (format == Format::json)
                out << detail::prefix_json(seq).dump() << "\n";
            else
                out << format_prefix(seq);
            return ok;
        }

        if (*check_cmd) {
            auto eq = load_equation(equation_path);
            auto report = check(eq, load_prefix(input));
            if (format == Format::json) {
                nlohmann::json j{{"pass", report.pass}, {"rows_checked", report.rows_checked}};
                if (report.first_failing_row) {
                    j["first_failing_row"] = *report.first_failing_row;
                    j["residual"] = report.residual.str();
                }
                out << j.dump() << "\n";
            } else if (report.pass) {
                out << "pass (" << report.rows_checked << " rows)\n";
            } else {
                out << "fail at row " << *report.first_failing_row << ": residual " << report.residual << "\n";
            }
            return report.pass ? ok : failed;
        }
    } catch (const Error &e) {
        err << e.what() << "\n";
        return detail::exit_code_for(e.kind());
    }
    return usage;
}

} // namespace quadguess::cli
