#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "quadguess/equation.hpp"
#include "quadguess/polynomial.hpp"

// Dual views of a QuadEquation: the differential equation in y(z), and the
// recurrence row at a generic index n with explicit convolution sums. The
// typed trees are canonical; text, LaTeX and JSON are produced from them.

namespace quadguess {

struct OdeTerm {
    Rational coeff;
    int zpow = 0;
    QuadMonomial monomial;
};

struct OdeTree {
    /// Ordered by decreasing (monomial index, z power).
    std::vector<OdeTerm> terms;
};

/// poly(n) * a(n + shift)
struct ShiftTerm {
    Polynomial poly{Variable::n};
    int shift = 0;
};

/// coeff * sum_{k=0}^{n-s} w_p(k) a(k+p) * w_q(n-s-k) a(n-s-k+q),
/// where w_p(j) = (j+1)...(j+p).
struct ConvolutionTerm {
    Rational coeff;
    int s = 0;
    int p = 0;
    int q = 0;
};

struct RecurrenceTree {
    /// Ordered by decreasing shift.
    std::vector<ShiftTerm> shifts;
    /// Ordered by decreasing (monomial index, z power).
    std::vector<ConvolutionTerm> sums;
};

enum class RenderMode { ode, recurrence };

using Expression = std::variant<OdeTree, RecurrenceTree>;

inline OdeTree ode_tree(const QuadEquation &eq)
{
    OdeTree tree;
    for (auto it = eq.terms().rbegin(); it != eq.terms().rend(); ++it)
        tree.terms.push_back({it->coeff, it->s, it->monomial});
    return tree;
}

/// (n - s + 1)(n - s + 2)...(n - s + p)
inline Polynomial shifted_weight(int s, int p)
{
    Polynomial w = Polynomial::constant(Variable::n, 1);
    for (int t = 1; t <= p; ++t)
        w = w * Polynomial::linear(Variable::n, Rational(t - s));
    return w;
}

inline RecurrenceTree recurrence_tree(const QuadEquation &eq)
{
    RecurrenceTree tree;
    for (auto it = eq.terms().rbegin(); it != eq.terms().rend(); ++it) {
        const auto &t = *it;
        if (t.monomial.is_linear()) {
            const int shift = t.monomial.p - t.s;
            auto pos = std::find_if(tree.shifts.begin(), tree.shifts.end(),
                                    [&](const ShiftTerm &x) { return x.shift == shift; });
            Polynomial part = shifted_weight(t.s, t.monomial.p) * t.coeff;
            if (pos == tree.shifts.end())
                tree.shifts.push_back({part, shift});
            else
                pos->poly += part;
        } else {
            tree.sums.push_back({t.coeff, t.s, t.monomial.p, t.monomial.q});
        }
    }
    std::erase_if(tree.shifts, [](const ShiftTerm &x) { return x.poly.is_zero(); });
    std::stable_sort(tree.shifts.begin(), tree.shifts.end(),
                     [](const ShiftTerm &a, const ShiftTerm &b) { return a.shift > b.shift; });
    return tree;
}

inline Expression render(const QuadEquation &eq, RenderMode mode)
{
    if (mode == RenderMode::ode)
        return ode_tree(eq);
    return recurrence_tree(eq);
}

/// A polynomial split as scalar * prod(a n + b) * rest over Q. Only rational
/// roots are extracted; whatever does not split stays in `rest`.
struct FactoredPolynomial {
    Rational scalar = 1;
    std::vector<std::pair<Integer, Integer>> linear; // (a, b) for a n + b, a > 0
    Polynomial rest{Variable::n};                   // empty when fully split
};

namespace detail {

inline std::vector<Integer> small_divisors(const Integer &x)
{
    std::vector<Integer> out;
    Integer v = abs(x);
    if (v == 0 || v > Integer("1000000000000"))
        return out;
    for (Integer d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

} // namespace detail

inline FactoredPolynomial factor_rational_roots(const Polynomial &poly)
{
    FactoredPolynomial out;
    out.rest = Polynomial(poly.variable());
    if (poly.degree() < 1) {
        out.scalar = poly.leading();
        return out;
    }
    Polynomial cur = poly;
    Rational denom_product = 1;
    const auto take = [&](const Rational &root) {
        cur = cur.deflate(root);
        const Integer a = root.denominator(), b = -root.numerator();
        out.linear.emplace_back(a, b);
        denom_product *= Rational(a);
    };
    while (cur.degree() >= 1 && cur.coefficient(0).is_zero())
        take(Rational(0));
    bool found = true;
    while (found && cur.degree() >= 1) {
        found = false;
        Integer den = 1;
        for (const auto &c : cur.coefficients())
            den = lcm(den, c.denominator());
        const Integer a0 = (cur.coefficient(0) * Rational(den)).numerator();
        const Integer an = (cur.leading() * Rational(den)).numerator();
        for (const auto &num : detail::small_divisors(a0)) {
            for (const auto &dn : detail::small_divisors(an)) {
                for (int sign : {-1, 1}) {
                    Rational root = Rational(num, dn) * Rational(sign);
                    if (cur(root).is_zero()) {
                        take(root);
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
    }
    Polynomial rest = cur * (Rational(1) / denom_product);
    if (rest.degree() == 0)
        out.scalar = rest.leading();
    else
        out.rest = rest;
    std::sort(out.linear.begin(), out.linear.end(), [](const auto &x, const auto &y) {
        const bool xm = x.first == 1, ym = y.first == 1;
        if (xm != ym)
            return !xm;
        return x < y;
    });
    return out;
}

namespace detail {

struct Style {
    bool latex = false;
    const char *minus = "−";
};

inline Style text_style() { return {false, "−"}; }
inline Style latex_style() { return {true, "-"}; }

inline std::string superscript(long v)
{
    static const char *digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(v))
        s += digits[c - '0'];
    return s;
}

inline std::string power(const std::string &base, long e, const Style &st)
{
    if (e == 1)
        return base;
    return st.latex ? base + "^{" + std::to_string(e) + "}" : base + superscript(e);
}

inline std::string derivative(int order, const Style &st)
{
    if (st.latex) {
        if (order <= 3)
            return "y" + std::string(static_cast<std::size_t>(order), '\'');
        return "y^{(" + std::to_string(order) + ")}";
    }
    switch (order) {
    case 0: return "y";
    case 1: return "y′";
    case 2: return "y″";
    case 3: return "y‴";
    default: return "y" + std::string("⁽") + superscript(order) + "⁾";
    }
}

/// |c| as a prefix multiplier; empty when |c| == 1.
inline std::string magnitude(const Rational &c, const Style &st)
{
    Rational m = c.abs();
    if (m == Rational(1))
        return "";
    if (m.is_integer())
        return m.str();
    if (st.latex)
        return "\\frac{" + m.numerator().get_str() + "}{" + m.denominator().get_str() + "}";
    return "(" + m.str() + ")";
}

inline std::string signed_int(long v, const Style &st)
{
    if (v == 0)
        return "";
    return (v > 0 ? "+" : st.minus) + std::to_string(v > 0 ? v : -v);
}

/// n, n+2, n-1 style index expression.
inline std::string offset(const std::string &var, long v, const Style &st) { return var + signed_int(v, st); }

inline void append_term(std::string &out, bool negative, const std::string &body, const Style &st)
{
    if (out.empty())
        out = (negative ? std::string(st.minus) : std::string()) + body;
    else
        out += std::string(negative ? " " + std::string(st.minus) + " " : " + ") + body;
}

inline std::string linear_factor(const Integer &a, const Integer &b, const Style &st)
{
    std::string s = (a == 1 ? std::string() : a.get_str()) + "n";
    if (b == 0)
        return s;
    s += (b > 0 ? "+" : st.minus) + Integer(abs(b)).get_str();
    return "(" + s + ")";
}

inline std::string polynomial_text(const Polynomial &p, const Style &st)
{
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational &c = p.coefficients()[i];
        if (c.is_zero())
            continue;
        std::string mag = magnitude(c, st);
        std::string body;
        if (i == 0)
            body = c.abs().str();
        else
            body = mag + power("n", i, st);
        if (out.empty())
            out = (c.sign() < 0 ? std::string(st.minus) : std::string()) + body;
        else
            out += (c.sign() < 0 ? std::string(st.minus) : std::string("+")) + body;
    }
    return "(" + out + ")";
}

inline std::string monomial_text(const QuadMonomial &m, const Style &st)
{
    if (m.is_linear())
        return derivative(m.p, st);
    if (m.p == m.q) {
        std::string base = derivative(m.p, st);
        if (st.latex && m.p > 0)
            base = "(" + base + ")";
        return power(base, 2, st);
    }
    return derivative(m.q, st) + (st.latex ? " " : "·") + derivative(m.p, st);
}

inline std::string ode_text(const OdeTree &tree, const Style &st)
{
    std::string out;
    const std::string sep = st.latex ? " " : "·";
    for (const auto &t : tree.terms) {
        std::string body = magnitude(t.coeff, st);
        if (st.latex && !body.empty())
            body += " ";
        std::string factors;
        if (t.zpow > 0)
            factors = power("z", t.zpow, st) + sep;
        factors += monomial_text(t.monomial, st);
        append_term(out, t.coeff.sign() < 0, body + factors, st);
    }
    if (out.empty())
        out = "0";
    return out + " = 0";
}

inline std::string shift_body(const ShiftTerm &t, bool &negative, const Style &st)
{
    FactoredPolynomial f = factor_rational_roots(t.poly);
    negative = f.scalar.sign() < 0;
    std::string s = magnitude(f.scalar, st);
    for (std::size_t i = 0; i < f.linear.size();) {
        std::size_t j = i;
        while (j < f.linear.size() && f.linear[j] == f.linear[i])
            ++j;
        std::string factor = linear_factor(f.linear[i].first, f.linear[i].second, st);
        s += power(factor, static_cast<long>(j - i), st);
        i = j;
    }
    if (!f.rest.is_zero())
        s += polynomial_text(f.rest, st);
    if (st.latex && !s.empty())
        s += "\\,";
    else if (!s.empty() && s.back() == 'n')
        s += "·";
    return s + "a(" + offset("n", t.shift, st) + ")";
}

inline std::string convolution_body(const ConvolutionTerm &t, const Style &st)
{
    std::string s = magnitude(t.coeff, st);
    std::string upper = offset("n", -t.s, st);
    if (st.latex)
        s += (s.empty() ? "" : " ") + std::string("\\sum_{k=0}^{") + upper + "} ";
    else
        s += "Σ_{k=0}^" + (t.s == 0 ? upper : "{" + upper + "}") + " ";
    const std::string gap = st.latex ? "\\," : "";
    for (int j = 1; j <= t.p; ++j)
        s += "(k+" + std::to_string(j) + ")";
    s += (t.p > 0 ? gap : "") + "a(" + offset("k", t.p, st) + ")" + gap;
    for (int j = 1; j <= t.q; ++j)
        s += "(" + offset("n", j - t.s, st) + st.minus + "k)";
    s += (t.q > 0 ? gap : "") + "a(" + offset("n", t.q - t.s, st) + st.minus + "k)";
    return s;
}

inline std::string recurrence_text(const RecurrenceTree &tree, const Style &st)
{
    std::string out;
    for (const auto &t : tree.shifts) {
        bool negative = false;
        std::string body = shift_body(t, negative, st);
        append_term(out, negative, body, st);
    }
    for (const auto &t : tree.sums)
        append_term(out, t.coeff.sign() < 0, convolution_body(t, st), st);
    if (out.empty())
        out = "0";
    return out + " = 0";
}

} // namespace detail

inline std::string to_text(const OdeTree &t) { return detail::ode_text(t, detail::text_style()); }
inline std::string to_latex(const OdeTree &t) { return detail::ode_text(t, detail::latex_style()); }
inline std::string to_text(const RecurrenceTree &t) { return detail::recurrence_text(t, detail::text_style()); }
inline std::string to_latex(const RecurrenceTree &t) { return detail::recurrence_text(t, detail::latex_style()); }

inline std::string to_text(const Expression &e)
{
    return std::visit([](const auto &t) { return to_text(t); }, e);
}
inline std::string to_latex(const Expression &e)
{
    return std::visit([](const auto &t) { return to_latex(t); }, e);
}

inline nlohmann::json to_json(const OdeTree &tree)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : tree.terms) {
        nlohmann::json orders = nlohmann::json::array();
        if (!t.monomial.is_linear())
            orders.push_back(t.monomial.q);
        orders.push_back(t.monomial.p);
        terms.push_back({{"coeff", t.coeff.str()}, {"z", t.zpow}, {"derivatives", orders}});
    }
    return {{"mode", "ode"}, {"terms", terms}};
}

inline nlohmann::json to_json(const RecurrenceTree &tree)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : tree.shifts) {
        nlohmann::json poly = nlohmann::json::array();
        for (const auto &c : t.poly.coefficients())
            poly.push_back(c.str());
        terms.push_back({{"kind", "shift"}, {"poly", poly}, {"shift", t.shift}});
    }
    for (const auto &t : tree.sums)
        terms.push_back({{"kind", "convolution"}, {"coeff", t.coeff.str()}, {"s", t.s}, {"p", t.p}, {"q", t.q}});
    return {{"mode", "recurrence"}, {"terms", terms}};
}

inline nlohmann::json to_json(const Expression &e)
{
    return std::visit([](const auto &t) { return to_json(t); }, e);
}

} // namespace quadguess
