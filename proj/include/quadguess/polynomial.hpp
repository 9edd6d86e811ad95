#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "quadguess/rational.hpp"

namespace quadguess {

enum class Variable { z, n };

inline char symbol(Variable v) { return v == Variable::z ? 'z' : 'n'; }

/// Dense univariate polynomial, lowest degree first. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    explicit Polynomial(Variable var = Variable::z) : var_(var) {}
    Polynomial(Variable var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs))
    {
        trim();
    }

    static Polynomial constant(Variable var, const Rational &c) { return Polynomial(var, {c}); }
    /// x + c
    static Polynomial linear(Variable var, const Rational &c) { return Polynomial(var, {c, Rational(1)}); }

    Variable variable() const { return var_; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(int i) const
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational &x) const
    {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial &operator*=(const Rational &c)
    {
        for (auto &x : coeffs_)
            x *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero())
            return Polynomial(a.var_);
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(a.var_, std::move(out));
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    /// Exact division by (x - root); the remainder must vanish.
    Polynomial deflate(const Rational &root) const
    {
        if (degree() < 1)
            throw Error(ErrorKind::invalid_argument, "deflate: degree < 1");
        std::vector<Rational> q(coeffs_.size() - 1);
        Rational carry;
        for (int i = degree(); i >= 1; --i) {
            carry = coeffs_[i] + carry * root;
            q[i - 1] = carry;
        }
        if (!(coeffs_[0] + carry * root).is_zero())
            throw Error(ErrorKind::invalid_argument, "deflate: not a root");
        return Polynomial(var_, std::move(q));
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    Variable var_;
    std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial &p, const Rational &x) { return p(x); }

} // namespace quadguess
