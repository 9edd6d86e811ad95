#pragma once

#include <compare>
#include <map>
#include <vector>

#include "quadguess/rational.hpp"

namespace quadguess {

/// Ansatz unknown c_{k,i}: slot k (monomial index k+2), power z^i.
struct UnknownId {
    int k = 0;
    int i = 0;

    friend auto operator<=>(const UnknownId &, const UnknownId &) = default;
};

/// Linear combination of ansatz unknowns. Zero coefficients are never stored.
class LinearForm {
public:
    void add(UnknownId id, const Rational &c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Rational coefficient(UnknownId id) const
    {
        auto it = terms_.find(id);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<UnknownId, Rational> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Dense row in k-major, then i, column order for a (d, m) ansatz.
    std::vector<Rational> dense(int d, int m) const
    {
        std::vector<Rational> row(static_cast<std::size_t>((d + 1) * (m + 1)));
        for (const auto &[id, c] : terms_)
            row.at(static_cast<std::size_t>(id.k * (m + 1) + id.i)) = c;
        return row;
    }

    friend bool operator==(const LinearForm &, const LinearForm &) = default;

private:
    std::map<UnknownId, Rational> terms_;
};

inline int column_of(UnknownId id, int m) { return id.k * (m + 1) + id.i; }
inline UnknownId unknown_of_column(int col, int m) { return {col / (m + 1), col % (m + 1)}; }

} // namespace quadguess
