#pragma once

#include <cstddef>
#include <vector>

#include "quadguess/rational.hpp"

namespace quadguess {

using RatVector = std::vector<Rational>;

class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t width) : width_(width) {}
    RatMatrix(std::size_t width, std::vector<RatVector> rows) : width_(width)
    {
        for (auto &r : rows)
            add_row(std::move(r));
    }

    void add_row(RatVector row)
    {
        if (row.size() != width_)
            throw Error(ErrorKind::invalid_argument, "RatMatrix: row width mismatch");
        rows_.push_back(std::move(row));
    }

    std::size_t width() const { return width_; }
    std::size_t height() const { return rows_.size(); }
    const std::vector<RatVector> &rows() const { return rows_; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    RatVector apply(const RatVector &v) const
    {
        RatVector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < width_; ++c)
                if (!v[c].is_zero())
                    out[r] += rows_[r][c] * v[c];
        return out;
    }

private:
    std::size_t width_ = 0;
    std::vector<RatVector> rows_;
};

/// Scales v to coprime integers whose first nonzero entry is positive.
inline RatVector normalize_integer(RatVector v)
{
    Integer den = 1, content = 0;
    for (const auto &x : v)
        if (!x.is_zero())
            den = lcm(den, x.denominator());
    for (auto &x : v) {
        x *= Rational(den);
        content = gcd(content, x.numerator());
    }
    if (content == 0)
        return v;
    Rational scale(Integer(1), content);
    for (const auto &x : v)
        if (!x.is_zero()) {
            if (x.sign() < 0)
                scale = -scale;
            break;
        }
    for (auto &x : v)
        x *= scale;
    return v;
}

namespace detail {

// Fraction-free (Bareiss) row echelon form over the integers. Pivots are
// chosen leftmost-column first, taking the first nonzero row. Returns the
// pivot column of each echelon row.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>> &a, std::size_t width)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    const std::size_t h = a.size();
    for (std::size_t col = 0; col < width && r < h; ++col) {
        std::size_t pr = r;
        while (pr < h && a[pr][col] == 0)
            ++pr;
        if (pr == h)
            continue;
        std::swap(a[r], a[pr]);
        const Integer &piv = a[r][col];
        for (std::size_t i = r + 1; i < h; ++i) {
            for (std::size_t j = col + 1; j < width; ++j) {
                Integer t = piv * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Basis of {v : M v = 0}, one vector per non-pivot column in increasing
/// column order. Each vector has 1 at its own free column, 0 at the other
/// free columns, and is then scaled by normalize_integer.
inline std::vector<RatVector> nullspace(const RatMatrix &m)
{
    const std::size_t w = m.width();
    std::vector<std::vector<Integer>> a;
    a.reserve(m.height());
    for (const auto &row : m.rows()) {
        Integer den = 1;
        bool nonzero = false;
        for (const auto &x : row)
            if (!x.is_zero()) {
                den = lcm(den, x.denominator());
                nonzero = true;
            }
        if (!nonzero)
            continue;
        std::vector<Integer> irow(w);
        for (std::size_t c = 0; c < w; ++c)
            irow[c] = (row[c] * Rational(den)).numerator();
        a.push_back(std::move(irow));
    }

    const auto pivots = detail::bareiss_echelon(a, w);
    std::vector<bool> is_pivot(w, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < w; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(w);
        v[f] = 1;
        for (std::size_t t = pivots.size(); t-- > 0;) {
            const std::size_t pc = pivots[t];
            Rational acc;
            for (std::size_t j = pc + 1; j < w; ++j)
                if (!v[j].is_zero() && a[t][j] != 0)
                    acc += Rational(a[t][j]) * v[j];
            v[pc] = -acc / Rational(a[t][pc]);
        }
        basis.push_back(normalize_integer(std::move(v)));
    }
    return basis;
}

inline std::size_t rank(const RatMatrix &m) { return m.width() - nullspace(m).size(); }

} // namespace quadguess
