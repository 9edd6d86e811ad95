#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "quadguess/compile.hpp"
#include "quadguess/delta2.hpp"
#include "quadguess/equation.hpp"
#include "quadguess/matrix.hpp"
#include "quadguess/sequence.hpp"

namespace quadguess {

struct GuessConfig {
    int m = 2;
    int d_start = 3;
    /// Defaults to ceil((N+1)/(m+1)).
    std::optional<int> d_max;
    int min_verify_rows = 2;

    void validate() const
    {
        if (m < 0 || d_start < 1 || min_verify_rows < 0 || (d_max && *d_max < 1))
            throw Error(ErrorKind::invalid_argument,
                        "guess config needs m >= 0, d_start >= 1, d_max >= 1, min_verify_rows >= 0");
    }
};

enum class GuessStatus { success, fail };

struct GuessResult {
    GuessStatus status = GuessStatus::fail;
    int d = 0;
    int m = 0;
    std::vector<QuadEquation> basis;
    int construction_rows = 0;
    int verification_rows = 0;

    bool ok() const { return status == GuessStatus::success; }
    friend bool operator==(const GuessResult &, const GuessResult &) = default;
};

struct AssembledSystem {
    RatMatrix matrix;
    int usable_rows = 0;
};

/// Rows n = 0, 1, ... of the (d, m) ansatz for as long as every index they
/// read (up to n + ansatz_reach(d)) lies inside the prefix.
inline AssembledSystem assemble_system(const SequencePrefix &prefix, int d, int m)
{
    if (d < 1 || m < 0)
        throw Error(ErrorKind::invalid_argument, "assemble_system: need d >= 1 and m >= 0");
    const long reach = ansatz_reach(d);
    AssembledSystem sys{RatMatrix(static_cast<std::size_t>((d + 1) * (m + 1))), 0};
    for (long n = 0; n + reach <= prefix.last(); ++n) {
        sys.matrix.add_row(ansatz_row(n, d, m, prefix.values).dense(d, m));
        ++sys.usable_rows;
    }
    return sys;
}

/// Turns a nullspace vector into an integer equation, sign fixed so that the
/// term with the largest (monomial index, z power) is positive.
inline QuadEquation normalize(const RatVector &v, int d, int m)
{
    if (v.size() != static_cast<std::size_t>((d + 1) * (m + 1)))
        throw Error(ErrorKind::invalid_argument, "normalize: vector length does not match (d+1)(m+1)");
    RatVector w = normalize_integer(v);
    std::vector<QuadTerm> terms;
    for (std::size_t col = 0; col < w.size(); ++col) {
        if (w[col].is_zero())
            continue;
        auto id = unknown_of_column(static_cast<int>(col), m);
        terms.push_back({id.i, monomial_of_index(id.k + 2), w[col]});
    }
    if (terms.empty())
        throw Error(ErrorKind::invalid_argument, "normalize: zero vector");
    QuadEquation eq(std::move(terms));
    if (eq.terms().back().coeff.sign() < 0) {
        std::vector<QuadTerm> flipped = eq.terms();
        for (auto &t : flipped)
            t.coeff = -t.coeff;
        eq = QuadEquation(std::move(flipped));
    }
    return eq;
}

namespace detail {

inline int default_d_max(const SequencePrefix &prefix, int m)
{
    const long len = static_cast<long>(prefix.size());
    return static_cast<int>((len + m) / (m + 1));
}

} // namespace detail

/// Searches the smallest ansatz size d whose stacked construction and
/// verification rows admit a nontrivial solution on the prefix.
inline GuessResult guess(const SequencePrefix &prefix, const GuessConfig &cfg = {})
{
    cfg.validate();
    if (prefix.size() == 0 || prefix.all_zero())
        throw Error(ErrorKind::degenerate_input, "degenerate input: all terms zero");
    const int d_max = cfg.d_max.value_or(detail::default_d_max(prefix, cfg.m));

    GuessResult result;
    result.m = cfg.m;
    bool admissible = false;
    for (int d = cfg.d_start; d <= d_max; ++d) {
        const int unknowns = (d + 1) * (cfg.m + 1);
        const int reach = ansatz_reach(d);
        const long usable = std::max<long>(0, prefix.last() - reach + 1);
        if (usable < unknowns + cfg.min_verify_rows)
            break;
        admissible = true;

        auto sys = assemble_system(prefix, d, cfg.m);
        result.d = d;
        result.construction_rows = unknowns;
        result.verification_rows = sys.usable_rows - unknowns;

        std::vector<QuadEquation> basis;
        for (const auto &v : nullspace(sys.matrix)) {
            auto eq = normalize(v, d, cfg.m);
            // Equations with a smaller reach than the ansatz have rows past
            // the stacked matrix; those must hold too.
            if (check(eq, prefix).pass)
                basis.push_back(std::move(eq));
        }
        if (!basis.empty()) {
            result.status = GuessStatus::success;
            result.basis = std::move(basis);
            return result;
        }
    }
    if (!admissible)
        throw Error(ErrorKind::insufficient_terms,
                    "insufficient terms: " + std::to_string(prefix.size()) + " terms cannot fill a d=" +
                        std::to_string(cfg.d_start) + ", m=" + std::to_string(cfg.m) + " ansatz plus " +
                        std::to_string(cfg.min_verify_rows) + " verification rows");
    return result;
}

/// a_n -> a_n / lambda^n
inline SequencePrefix rescale_prefix(const SequencePrefix &prefix, const Rational &lambda)
{
    if (lambda.is_zero())
        throw Error(ErrorKind::division_by_zero, "rescale factor must be nonzero");
    SequencePrefix out;
    Rational scale = 1;
    for (const auto &a : prefix.values) {
        out.values.push_back(a / scale);
        scale *= lambda;
    }
    return out;
}

/// Equation satisfied by rescale_prefix(a, lambda) whenever eq holds for a:
/// each coefficient picks up lambda^(p' + q' - s), with order -1 counting 0.
inline QuadEquation rescale_equation(const QuadEquation &eq, const Rational &lambda)
{
    if (lambda.is_zero())
        throw Error(ErrorKind::division_by_zero, "rescale factor must be nonzero");
    std::vector<QuadTerm> terms = eq.terms();
    for (auto &t : terms) {
        const long e = std::max(t.monomial.p, 0) + std::max(t.monomial.q, 0) - t.s;
        t.coeff *= pow(lambda, e);
    }
    return QuadEquation(std::move(terms));
}

inline const char *to_string(GuessStatus s) { return s == GuessStatus::success ? "success" : "fail"; }

inline nlohmann::json to_json(const GuessResult &r)
{
    nlohmann::json basis = nlohmann::json::array();
    for (const auto &eq : r.basis)
        basis.push_back(to_json(eq));
    return {{"status", to_string(r.status)},
            {"d", r.d},
            {"m", r.m},
            {"basis", basis},
            {"rows", {{"construction", r.construction_rows}, {"verification", r.verification_rows}}}};
}

inline GuessResult guess_result_from_json(const nlohmann::json &j)
{
    try {
        GuessResult r;
        const auto status = j.at("status").get<std::string>();
        if (status == "success")
            r.status = GuessStatus::success;
        else if (status == "fail")
            r.status = GuessStatus::fail;
        else
            throw Error(ErrorKind::parse_error, "guess result JSON: unknown status '" + status + "'");
        r.d = j.at("d").get<int>();
        r.m = j.at("m").get<int>();
        for (const auto &e : j.at("basis"))
            r.basis.push_back(equation_from_json(e));
        r.construction_rows = j.at("rows").at("construction").get<int>();
        r.verification_rows = j.at("rows").at("verification").get<int>();
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::parse_error, std::string("guess result JSON: ") + e.what());
    }
}

} // namespace quadguess
