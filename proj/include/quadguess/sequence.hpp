#pragma once

#include <optional>
#include <string>

#include "quadguess/compile.hpp"
#include "quadguess/equation.hpp"

namespace quadguess {

struct CheckReport {
    bool pass = true;
    /// Rows 0 .. rows_checked-1 were evaluated.
    long rows_checked = 0;
    std::optional<long> first_failing_row;
    Rational residual;
};

/// Evaluates every row of eq that the prefix fully determines.
inline CheckReport check(const QuadEquation &eq, const SequencePrefix &prefix)
{
    CheckReport report;
    const long last_row = prefix.last() - eq.maxshift();
    for (long n = 0; n <= last_row; ++n) {
        Rational r = evaluate_row(eq, n, prefix.values);
        ++report.rows_checked;
        if (!r.is_zero()) {
            report.pass = false;
            report.first_failing_row = n;
            report.residual = r;
            break;
        }
    }
    return report;
}

/// Appends `count` terms to `initial` by solving each recurrence row for its
/// single highest unknown, a_{n + maxshift}.
inline SequencePrefix extend(const QuadEquation &eq, const SequencePrefix &initial, long count)
{
    if (count < 0)
        throw Error(ErrorKind::invalid_argument, "extend: negative count");
    const long shift = eq.maxshift();
    SequencePrefix seq = initial;
    const long first_production = static_cast<long>(seq.size()) - shift;
    if (seq.size() == 0 || first_production < 0)
        throw Error(ErrorKind::insufficient_terms,
                    "extend: need at least " + std::to_string(std::max<long>(shift, 1)) + " initial terms");

    for (long n = 0; n < first_production; ++n) {
        Rational r = evaluate_row(eq, n, seq.values);
        if (!r.is_zero())
            throw Error(ErrorKind::inconsistent_initial_terms,
                        "inconsistent initial terms: row " + std::to_string(n) + " evaluates to " + r.str());
    }

    for (long step = 0; step < count; ++step) {
        const long n = first_production + step;
        // The row is at most quadratic in x = a_{n+shift}; sample it at
        // x = 0, 1, -1 to read off its coefficients.
        seq.values.push_back(0);
        const Rational c0 = evaluate_row(eq, n, seq.values);
        seq.values.back() = 1;
        const Rational plus = evaluate_row(eq, n, seq.values);
        seq.values.back() = -1;
        const Rational minus = evaluate_row(eq, n, seq.values);
        const Rational c2 = (plus + minus) / 2 - c0;
        const Rational c1 = (plus - minus) / 2;
        if (!c2.is_zero())
            throw Error(ErrorKind::nonlinear_step,
                        "row " + std::to_string(n) + " is quadratic in a(" + std::to_string(n + shift) + ")");
        if (c1.is_zero())
            throw Error(ErrorKind::leading_coefficient_zero,
                        "leading coefficient zero: row " + std::to_string(n) + " does not determine a(" +
                            std::to_string(n + shift) + ")");
        seq.values.back() = -c0 / c1;
    }
    return seq;
}

} // namespace quadguess
