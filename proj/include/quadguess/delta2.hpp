#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>

#include "quadguess/error.hpp"
#include "quadguess/rational.hpp"

namespace quadguess {

/// Pairing (i, j), i >= j >= 1, of the K-th quadratic differential monomial
/// f^(i-2) * f^(j-2) in lexicographic order.
struct Pair {
    long i = 0;
    long j = 0;

    friend auto operator<=>(const Pair &, const Pair &) = default;
};

inline Pair nu(long k)
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "nu: index must be >= 1, got " + std::to_string(k));
    // floor(sqrt(2k + 1/4) - 1/2) == floor((isqrt(8k + 1) - 1) / 2)
    Integer root = sqrt(Integer(8) * k + 1);
    long l = (root.get_si() - 1) / 2;
    long tri = l * (l + 1) / 2;
    if (tri == k)
        return {l, l};
    return {l + 1, k - tri};
}

inline long index_of_pair(long i, long j)
{
    if (j < 1 || i < j)
        throw Error(ErrorKind::invalid_argument,
                    "index_of_pair: need i >= j >= 1, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    return i * (i - 1) / 2 + j;
}

/// f^(p) * f^(q) with p >= q >= -1; order -1 stands for the constant factor 1.
struct QuadMonomial {
    int p = 0;
    int q = -1;

    long index() const { return index_of_pair(p + 2, q + 2); }
    bool is_linear() const { return q == -1; }
    /// Highest derivative order actually read from the series (0 for f, f^2).
    int reach() const { return std::max({p, q, 0}); }

    friend bool operator==(const QuadMonomial &, const QuadMonomial &) = default;
    friend auto operator<=>(const QuadMonomial &a, const QuadMonomial &b) { return a.index() <=> b.index(); }
};

inline QuadMonomial make_monomial(int p, int q)
{
    if (q < -1 || p < q || (p == -1 && q == -1))
        throw Error(ErrorKind::invalid_argument,
                    "monomial orders must satisfy p >= q >= -1, not both -1 (got p=" + std::to_string(p) +
                        ", q=" + std::to_string(q) + ")");
    return {p, q};
}

inline QuadMonomial monomial_of_index(long k)
{
    if (k < 2)
        throw Error(ErrorKind::invalid_argument, "monomial_of_index: index must be >= 2, got " + std::to_string(k));
    auto [i, j] = nu(k);
    return {static_cast<int>(i - 2), static_cast<int>(j - 2)};
}

/// Largest derivative order among the ansatz monomials with index 2..d+2.
inline int ansatz_reach(int d)
{
    int r = 0;
    for (long k = 2; k <= d + 2; ++k)
        r = std::max(r, monomial_of_index(k).reach());
    return r;
}

} // namespace quadguess
