#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "quadguess/error.hpp"

namespace quadguess {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serializes as "p/q", or "p" when the denominator is 1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(Integer(std::to_string(v))) {}
    Rational(const Integer &v) : value_(v) {}
    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0)
            throw Error(ErrorKind::division_by_zero, "division by zero");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpq_class &v) : value_(v) { value_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading sign on p, q > 0 digits only).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class &raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const { return value_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero())
            throw Error(ErrorKind::division_by_zero, "division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0)
        return Rational(1) / pow(base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (j+p)!/j!, the z^j coefficient weight of the p-th derivative of a series.
inline Rational falling_weight(long j, long p)
{
    if (j < 0 || p < 0)
        throw Error(ErrorKind::invalid_argument,
                    "falling_weight: arguments must be non-negative (j=" + std::to_string(j) +
                        ", p=" + std::to_string(p) + ")");
    Integer r = 1;
    for (long t = 1; t <= p; ++t)
        r *= (j + t);
    return Rational(r);
}

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text)
{
    std::string_view s = detail::trim(text);
    const auto bad = [&] {
        return Error(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
    };
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!detail::all_digits(den))
            throw bad();
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!detail::all_digits(digits))
        throw bad();
    Integer n{std::string(digits)};
    if (num.front() == '-')
        n = -n;
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den));
    if (d == 0)
        throw Error(ErrorKind::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

} // namespace quadguess
