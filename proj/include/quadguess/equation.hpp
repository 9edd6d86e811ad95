#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "quadguess/delta2.hpp"
#include "quadguess/polynomial.hpp"
#include "quadguess/rational.hpp"

namespace quadguess {

/// coeff * z^s * f^(p) * f^(q)
struct QuadTerm {
    int s = 0;
    QuadMonomial monomial;
    Rational coeff;

    friend bool operator==(const QuadTerm &, const QuadTerm &) = default;
};

/// A quadratic differential equation sum coeff * z^s * f^(p) f^(q) = 0 with
/// rational coefficients. Terms are merged by (s, monomial), zero terms are
/// dropped, and the remainder is kept sorted by (monomial index, s).
class QuadEquation {
public:
    QuadEquation() = default;
    explicit QuadEquation(std::vector<QuadTerm> terms)
    {
        std::map<std::pair<long, int>, QuadTerm> merged;
        for (auto &t : terms) {
            if (t.s < 0)
                throw Error(ErrorKind::invalid_argument, "negative z power in equation term");
            make_monomial(t.monomial.p, t.monomial.q);
            auto [it, inserted] = merged.try_emplace({t.monomial.index(), t.s}, t);
            if (!inserted)
                it->second.coeff += t.coeff;
        }
        for (auto &[key, t] : merged)
            if (!t.coeff.is_zero())
                terms_.push_back(t);
        if (terms_.empty())
            throw Error(ErrorKind::invalid_argument, "equation has no nonzero terms");
    }

    const std::vector<QuadTerm> &terms() const { return terms_; }

    /// Largest ansatz slot used (monomial index - 2).
    int d() const
    {
        long k = 0;
        for (const auto &t : terms_)
            k = std::max(k, t.monomial.index());
        return static_cast<int>(k - 2);
    }
    /// Largest z power used.
    int m() const
    {
        int s = 0;
        for (const auto &t : terms_)
            s = std::max(s, t.s);
        return s;
    }
    /// Row n of the recurrence reads sequence indices up to n + maxshift.
    int maxshift() const
    {
        int best = terms_.front().monomial.reach() - terms_.front().s;
        for (const auto &t : terms_)
            best = std::max(best, t.monomial.reach() - t.s);
        return best;
    }

    /// Coefficient polynomial in z of the given monomial.
    Polynomial coefficient_polynomial(const QuadMonomial &mono) const
    {
        std::vector<Rational> c;
        for (const auto &t : terms_)
            if (t.monomial == mono) {
                if (static_cast<int>(c.size()) <= t.s)
                    c.resize(t.s + 1);
                c[t.s] = t.coeff;
            }
        return Polynomial(Variable::z, std::move(c));
    }

    friend bool operator==(const QuadEquation &, const QuadEquation &) = default;

private:
    std::vector<QuadTerm> terms_;
};

inline nlohmann::json to_json(const QuadEquation &eq)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : eq.terms())
        terms.push_back({{"s", t.s}, {"p", t.monomial.p}, {"q", t.monomial.q}, {"c", t.coeff.str()}});
    return {{"terms", terms}};
}

inline QuadEquation equation_from_json(const nlohmann::json &j)
{
    const auto bad = [](const std::string &why) { return Error(ErrorKind::parse_error, "equation JSON: " + why); };
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw bad("expected an object with a \"terms\" array");
    std::vector<QuadTerm> terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_object())
            throw bad("term is not an object");
        for (const char *key : {"s", "p", "q"})
            if (!t.contains(key) || !t.at(key).is_number_integer())
                throw bad(std::string("term field \"") + key + "\" must be an integer");
        if (!t.contains("c"))
            throw bad("term field \"c\" missing");
        Rational c = t.at("c").is_string() ? Rational::parse(t.at("c").get<std::string>())
                     : t.at("c").is_number_integer() ? Rational(t.at("c").get<long>())
                                                     : throw bad("term field \"c\" must be a \"p/q\" string");
        int p = t.at("p").get<int>(), q = t.at("q").get<int>();
        terms.push_back({t.at("s").get<int>(), make_monomial(p, q), c});
    }
    return QuadEquation(std::move(terms));
}

} // namespace quadguess
