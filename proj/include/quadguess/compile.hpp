#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "quadguess/delta2.hpp"
#include "quadguess/equation.hpp"
#include "quadguess/linear_form.hpp"
#include "quadguess/rational.hpp"

namespace quadguess {

/// Finite prefix a_0..a_N. Indices below zero read as 0; that convention is
/// applied by readers and never stored.
struct SequencePrefix {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    /// N, the last index.
    long last() const { return static_cast<long>(values.size()) - 1; }
    bool all_zero() const
    {
        return std::all_of(values.begin(), values.end(), [](const Rational &x) { return x.is_zero(); });
    }
    friend bool operator==(const SequencePrefix &, const SequencePrefix &) = default;
};

/// z^n Taylor coefficient of z^s * f^(p) * f^(q) as a function of the prefix,
/// via the Cauchy product.
class RowGenerator {
public:
    RowGenerator(int s, QuadMonomial mono) : s_(s), mono_(mono) {}

    int s() const { return s_; }
    const QuadMonomial &monomial() const { return mono_; }

    /// Largest prefix index read by row n (negative when the row is empty).
    long max_index(long n) const
    {
        const long j = n - s_;
        return j < 0 || mono_.p == -1 ? -1 : j + mono_.reach();
    }

    Rational operator()(long n, std::span<const Rational> a) const
    {
        const long j = n - s_;
        const int p = mono_.p, q = mono_.q;
        if (p == -1)
            return j == 0 ? Rational(1) : Rational(0);
        if (j < 0)
            return Rational(0);
        if (max_index(n) >= static_cast<long>(a.size()))
            throw Error(ErrorKind::insufficient_terms,
                        "row " + std::to_string(n) + " needs index " + std::to_string(max_index(n)) +
                            " but the prefix has " + std::to_string(a.size()) + " terms");
        if (q == -1)
            return falling_weight(j, p) * a[j + p];
        Rational acc;
        for (long t = 0; t <= j; ++t) {
            const Rational &x = a[t + p];
            const Rational &y = a[j - t + q];
            if (x.is_zero() || y.is_zero())
                continue;
            acc += falling_weight(t, p) * falling_weight(j - t, q) * x * y;
        }
        return acc;
    }

private:
    int s_;
    QuadMonomial mono_;
};

inline RowGenerator compile_term(int s, QuadMonomial mono)
{
    if (s < 0)
        throw Error(ErrorKind::invalid_argument, "compile_term: negative z power");
    return RowGenerator(s, mono);
}

/// Row n of the recurrence of eq evaluated on the prefix.
inline Rational evaluate_row(const QuadEquation &eq, long n, std::span<const Rational> a)
{
    Rational acc;
    for (const auto &t : eq.terms())
        acc += t.coeff * compile_term(t.s, t.monomial)(n, a);
    return acc;
}

/// Row n of the (d, m) ansatz as a linear form in the unknowns c_{k,i}.
inline LinearForm ansatz_row(long n, int d, int m, std::span<const Rational> a)
{
    LinearForm form;
    for (int k = 0; k <= d; ++k) {
        const auto mono = monomial_of_index(k + 2);
        for (int i = 0; i <= m; ++i)
            form.add({k, i}, compile_term(i, mono)(n, a));
    }
    return form;
}

} // namespace quadguess
