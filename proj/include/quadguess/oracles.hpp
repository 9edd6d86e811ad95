#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "quadguess/compile.hpp"
#include "quadguess/rational.hpp"

// Reference sequences built from classical integer recurrences and triangles.
// None of them goes through QuadEquation, so they can check the engine.

namespace quadguess {

enum class OracleName { bernoulli_egf, euler_egf, bell_egf, zigzag_egf, zeta_rescaled, lambertw, exp };

inline constexpr std::array<std::pair<OracleName, std::string_view>, 7> oracle_names{{
    {OracleName::bernoulli_egf, "bernoulli-egf"},
    {OracleName::euler_egf, "euler-egf"},
    {OracleName::bell_egf, "bell-egf"},
    {OracleName::zigzag_egf, "zigzag-egf"},
    {OracleName::zeta_rescaled, "zeta-rescaled"},
    {OracleName::lambertw, "lambertw"},
    {OracleName::exp, "exp"},
}};

inline OracleName parse_oracle_name(std::string_view name)
{
    for (const auto &[id, text] : oracle_names)
        if (text == name)
            return id;
    throw Error(ErrorKind::unknown_oracle, "unknown oracle '" + std::string(name) + "'");
}

inline std::string_view to_string(OracleName name)
{
    for (const auto &[id, text] : oracle_names)
        if (id == name)
            return text;
    return "?";
}

/// B_0..B_{count-1} from sum_{k=0}^{n} C(n+1, k) B_k = 0 (so B_1 = -1/2).
inline std::vector<Rational> bernoulli_numbers(long count)
{
    std::vector<Rational> b;
    for (long n = 0; n < count; ++n) {
        if (n == 0) {
            b.emplace_back(1);
            continue;
        }
        Rational acc;
        for (long k = 0; k < n; ++k)
            acc += Rational(binomial(n + 1, k)) * b[k];
        b.push_back(-acc / Rational(n + 1));
    }
    return b;
}

/// Up/down numbers A000111(0..count-1) via the Seidel-Entringer boustrophedon.
inline std::vector<Integer> zigzag_numbers(long count)
{
    std::vector<Integer> out;
    std::vector<Integer> row{1};
    for (long n = 0; n < count; ++n) {
        if (n > 0) {
            std::vector<Integer> next(n + 1);
            next[0] = 0;
            for (long k = 1; k <= n; ++k)
                next[k] = next[k - 1] + row[n - k];
            row = std::move(next);
        }
        out.push_back(row.back());
    }
    return out;
}

/// Bell numbers via the Bell (Aitken) triangle.
inline std::vector<Integer> bell_numbers(long count)
{
    std::vector<Integer> out;
    std::vector<Integer> row{1};
    for (long n = 0; n < count; ++n) {
        out.push_back(row.front());
        std::vector<Integer> next{row.back()};
        for (const auto &x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return out;
}

inline SequencePrefix oracle_sequence(OracleName name, long count)
{
    if (count < 1)
        throw Error(ErrorKind::invalid_argument, "oracle count must be >= 1");
    SequencePrefix out;
    auto &v = out.values;
    switch (name) {
    case OracleName::bernoulli_egf: {
        auto b = bernoulli_numbers(count);
        for (long n = 0; n < count; ++n)
            v.push_back(b[n] / Rational(factorial(n)));
        break;
    }
    case OracleName::euler_egf: {
        // Signed Euler numbers: E_{2k} = (-1)^k A000111(2k), odd ones vanish.
        auto z = zigzag_numbers(count);
        for (long n = 0; n < count; ++n) {
            if (n % 2 == 1) {
                v.emplace_back(0);
                continue;
            }
            Rational e(z[n]);
            if ((n / 2) % 2 == 1)
                e = -e;
            v.push_back(e / Rational(factorial(n)));
        }
        break;
    }
    case OracleName::bell_egf: {
        auto b = bell_numbers(count);
        for (long n = 0; n < count; ++n)
            v.push_back(Rational(b[n]) / Rational(factorial(n)));
        break;
    }
    case OracleName::zigzag_egf: {
        auto z = zigzag_numbers(count);
        for (long n = 0; n < count; ++n)
            v.push_back(Rational(z[n]) / Rational(factorial(n)));
        break;
    }
    case OracleName::zeta_rescaled: {
        // zeta(2n+2) / pi^(2n+2) = (-1)^n 2^(2n+1) B_{2n+2} / (2n+2)!
        auto b = bernoulli_numbers(2 * count + 1);
        for (long n = 0; n < count; ++n) {
            Rational t = pow(Rational(2), 2 * n + 1) * b[2 * n + 2] / Rational(factorial(2 * n + 2));
            v.push_back(n % 2 == 0 ? t : -t);
        }
        break;
    }
    case OracleName::lambertw: {
        v.emplace_back(0);
        for (long n = 1; n < count; ++n)
            v.push_back(pow(Rational(-n), n - 1) / Rational(factorial(n)));
        break;
    }
    case OracleName::exp:
        for (long n = 0; n < count; ++n)
            v.push_back(Rational(Integer(1), factorial(n)));
        break;
    }
    return out;
}

inline SequencePrefix oracle_sequence(std::string_view name, long count)
{
    return oracle_sequence(parse_oracle_name(name), count);
}

} // namespace quadguess
