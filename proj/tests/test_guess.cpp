#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace quadguess;
namespace qt = quadguess::testing;

namespace {

bool contains(const std::vector<QuadEquation> &basis, const QuadEquation &eq)
{
    return std::find(basis.begin(), basis.end(), eq) != basis.end();
}

} // namespace

TEST(AssembleSystem, ShapeAndRowBudget)
{
    auto prefix = oracle_sequence(OracleName::zigzag_egf, 20);
    auto sys = assemble_system(prefix, 5, 2);
    EXPECT_EQ(sys.matrix.width(), 18u);
    // Row n reads a(n+2), so rows 0..17 fit into a(0..19).
    EXPECT_EQ(sys.usable_rows, 18);
    EXPECT_EQ(sys.matrix.height(), 18u);
    const auto &a = prefix.values;
    const std::size_t col = static_cast<std::size_t>(column_of({5, 0}, 2));
    for (long n = 0; n < 18; ++n)
        EXPECT_EQ(sys.matrix(n, col), Rational((n + 1) * (n + 2)) * a[n + 2]);

    auto small = assemble_system(SequencePrefix{{1, 2}}, 5, 2);
    EXPECT_EQ(small.usable_rows, 0);
    EXPECT_THROW(assemble_system(prefix, 0, 2), Error);
}

TEST(Normalize, Examples)
{
    // Vector for 2z f'' + 5 f' - 4z f'f - 2 f^2 over the d=5, m=2 ansatz,
    // deliberately scaled by -1/2.
    RatVector v(18);
    v[column_of({5, 1}, 2)] = -1;
    v[column_of({2, 0}, 2)] = Rational::parse("-5/2");
    v[column_of({3, 1}, 2)] = 2;
    v[column_of({1, 0}, 2)] = 1;
    EXPECT_EQ(normalize(v, 5, 2), qt::zeta_equation());

    RatVector single(3);
    single[0] = Rational::parse("3/7");
    EXPECT_EQ(normalize(single, 0, 2), qt::make_equation({{0, 0, -1, 1}}));

    RatVector pair(2);
    pair[0] = 1;
    pair[1] = -1; // f - z f
    EXPECT_EQ(normalize(pair, 0, 1), qt::make_equation({{1, 0, -1, 1}, {0, 0, -1, -1}}));

    EXPECT_THROW(normalize(RatVector(3), 0, 2), Error);
    EXPECT_THROW(normalize(RatVector(4), 0, 2), Error);
}

TEST(Guess, ZetaRescaled)
{
    auto r = guess(oracle_sequence(OracleName::zeta_rescaled, 24));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.d, 5);
    EXPECT_TRUE(contains(r.basis, qt::zeta_equation()));
}

TEST(Guess, UpDownNumbers)
{
    GuessConfig cfg;
    cfg.min_verify_rows = 0;
    auto r = guess(oracle_sequence(OracleName::zigzag_egf, 20), cfg);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(contains(r.basis, qt::zigzag_equation()));
    // With the default verification floor, 20 terms leave no held-out rows
    // at d = 5; two more terms do.
    EXPECT_FALSE(guess(oracle_sequence(OracleName::zigzag_egf, 20)).ok());
    auto r22 = guess(oracle_sequence(OracleName::zigzag_egf, 22));
    ASSERT_TRUE(r22.ok());
    EXPECT_EQ(r22.basis.front(), qt::zigzag_equation());
}

TEST(Guess, Exponential)
{
    auto r = guess(oracle_sequence(OracleName::exp, 24));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.d, 3);
    EXPECT_EQ(r.basis.front(), qt::exp_equation());
}

TEST(Guess, DegenerateAndInsufficient)
{
    try {
        guess(SequencePrefix{{0, 0, 0, 0}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::degenerate_input);
    }
    try {
        guess(oracle_sequence(OracleName::exp, 10));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::insufficient_terms);
    }
    GuessConfig bad;
    bad.m = -1;
    EXPECT_THROW(guess(oracle_sequence(OracleName::exp, 30), bad), Error);
}

TEST(Guess, NegativeControlFails)
{
    auto r = guess(qt::power_over_factorial(24));
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(r.basis.empty());
}

TEST(Guess, DMaxOverrideStopsEarly)
{
    GuessConfig cfg;
    cfg.d_max = 4;
    auto r = guess(oracle_sequence(OracleName::zeta_rescaled, 24), cfg);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.d, 4);
}

// Every returned equation annihilates every row the prefix determines, and
// no smaller d admits a solution.
TEST(Guess, SoundnessAndMinimality)
{
    for (auto name : {OracleName::zeta_rescaled, OracleName::bernoulli_egf, OracleName::euler_egf,
                      OracleName::bell_egf, OracleName::lambertw, OracleName::exp, OracleName::zigzag_egf}) {
        auto prefix = oracle_sequence(name, 26);
        auto r = guess(prefix);
        ASSERT_TRUE(r.ok()) << to_string(name);
        for (const auto &eq : r.basis) {
            EXPECT_TRUE(check(eq, prefix).pass);
            for (long n = 0; n + ansatz_reach(r.d) <= prefix.last(); ++n)
                EXPECT_TRUE(evaluate_row(eq, n, prefix.values).is_zero());
        }
        for (int d = 3; d < r.d; ++d)
            EXPECT_TRUE(nullspace(assemble_system(prefix, d, r.m).matrix).empty()) << to_string(name) << " d=" << d;
        EXPECT_EQ(guess(prefix), r); // deterministic
    }
}

TEST(Guess, SoundOnRandomPrefixes)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(14, 26);
    for (int trial = 0; trial < 40; ++trial) {
        auto prefix = qt::random_prefix(rng, static_cast<std::size_t>(len(rng)));
        if (prefix.all_zero())
            continue;
        GuessResult r;
        try {
            r = guess(prefix);
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::insufficient_terms);
            continue;
        }
        for (const auto &eq : r.basis)
            EXPECT_TRUE(check(eq, prefix).pass);
    }
}

TEST(Rescale, EquationTransformRoundTrip)
{
    std::mt19937 rng(31);
    const std::vector<std::pair<QuadEquation, OracleName>> cases{
        {qt::zeta_equation(), OracleName::zeta_rescaled}, {qt::zigzag_equation(), OracleName::zigzag_egf},
        {qt::bernoulli_equation(), OracleName::bernoulli_egf}, {qt::lambertw_equation(), OracleName::lambertw},
        {qt::bell_equation(), OracleName::bell_egf}};
    for (const auto &[eq, name] : cases) {
        auto prefix = oracle_sequence(name, 20);
        ASSERT_TRUE(check(eq, prefix).pass);
        for (int trial = 0; trial < 4; ++trial) {
            Rational lambda = qt::random_nonzero_rational(rng, 7, 5);
            auto scaled = rescale_prefix(prefix, lambda);
            EXPECT_TRUE(check(rescale_equation(eq, lambda), scaled).pass);
            // The untransformed equation stops fitting unless every term
            // carries the same weight (Lambert W does).
            if (lambda != Rational(1) && lambda != Rational(-1) && rescale_equation(eq, lambda) != eq)
                EXPECT_FALSE(check(eq, scaled).pass);
            EXPECT_EQ(rescale_prefix(scaled, Rational(1) / lambda), prefix);
            EXPECT_EQ(rescale_equation(rescale_equation(eq, lambda), Rational(1) / lambda), eq);
        }
    }
    EXPECT_THROW(rescale_prefix(SequencePrefix{{1}}, Rational(0)), Error);
}

TEST(Rescale, ZetaFirstRowGrading)
{
    // 5 * (1/90) - 2 * (1/6)^2 == 0
    EXPECT_TRUE((Rational(5) * Rational::parse("1/90") - Rational(2) * pow(Rational::parse("1/6"), 2)).is_zero());
}

TEST(GuessResultJson, RoundTrip)
{
    auto r = guess(oracle_sequence(OracleName::zeta_rescaled, 24));
    auto j = to_json(r);
    EXPECT_EQ(guess_result_from_json(nlohmann::json::parse(j.dump())), r);
    EXPECT_EQ(j.at("status"), "success");
    EXPECT_EQ(j.at("rows").at("construction"), 18);
    EXPECT_EQ(j.at("rows").at("verification"), 4);

    auto f = guess(qt::power_over_factorial(24));
    EXPECT_EQ(guess_result_from_json(to_json(f)), f);
    EXPECT_THROW(guess_result_from_json(nlohmann::json::parse(R"({"status":"maybe"})")), Error);
}

TEST(EquationJson, RoundTripAndValidation)
{
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto eq = qt::random_equation(rng, 8, 3, 6);
        EXPECT_EQ(equation_from_json(nlohmann::json::parse(to_json(eq).dump())), eq);
    }
    EXPECT_EQ(to_json(qt::zigzag_equation()).dump(),
              R"({"terms":[{"c":"-1","p":1,"q":0,"s":0},{"c":"1","p":2,"q":-1,"s":0}]})");
    for (const char *bad : {R"({"terms":[{"s":0,"p":0,"q":1,"c":"1"}]})", R"({"terms":[]})",
                            R"({"terms":[{"s":0,"p":-1,"q":-1,"c":"1"}]})", R"({"terms":[{"s":0,"p":0,"q":-1}]})",
                            R"({"terms":[{"s":-1,"p":0,"q":-1,"c":"1"}]})", R"([1,2])",
                            R"({"terms":[{"s":0,"p":0,"q":-1,"c":"x"}]})"})
        EXPECT_THROW(equation_from_json(nlohmann::json::parse(bad)), Error) << bad;
}
