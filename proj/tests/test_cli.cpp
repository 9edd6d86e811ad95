#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quadguess/cli.hpp"
#include "test_support.hpp"

using namespace quadguess;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "quadguess");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("quadguess_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &content)
    {
        auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }

    std::string write_oracle(const std::string &name, long count)
    {
        return write(name + ".txt", format_prefix(oracle_sequence(name, count)));
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, OraclePrintsOneRationalPerLine)
{
    auto r = invoke({"oracle", "--name", "zeta-rescaled", "--count", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1/6\n1/90\n1/945\n1/9450\n1/93555\n");
    auto j = invoke({"oracle", "--name", "lambertw", "--count", "3", "--format", "json"});
    EXPECT_EQ(j.out, "[\"0\",\"1\",\"-1\"]\n");
}

TEST_F(CliTest, GuessUpDownText)
{
    auto path = write_oracle("zigzag-egf", 22);
    auto r = invoke({"guess", "--input", path, "--format", "text"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("ode: y″ − y·y′ = 0"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("recurrence: (n+1)(n+2)a(n+2) − Σ_{k=0}^n (k+1)a(k+1)a(n−k) = 0"), std::string::npos);
    EXPECT_NE(r.out.find(R"(json: {"terms":[{"c":"-1","p":1,"q":0,"s":0},{"c":"1","p":2,"q":-1,"s":0}]})"),
              std::string::npos);
}

TEST_F(CliTest, GuessTwentyTermsNeedsVerificationFloorLowered)
{
    auto path = write_oracle("zigzag-egf", 20);
    EXPECT_EQ(invoke({"guess", "--input", path}).code, 1);
    auto r = invoke({"guess", "--input", path, "--min-verify", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("y″ − y·y′ = 0"), std::string::npos);
}

TEST_F(CliTest, GuessJsonIsSingleDocument)
{
    auto path = write_oracle("zeta-rescaled", 24);
    auto r = invoke({"guess", "--input", path, "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    auto res = guess_result_from_json(j);
    EXPECT_TRUE(res.ok());
    EXPECT_EQ(res, guess(oracle_sequence(OracleName::zeta_rescaled, 24)));
}

TEST_F(CliTest, GuessLatex)
{
    auto path = write_oracle("zigzag-egf", 22);
    auto r = invoke({"guess", "--input", path, "--format", "latex"});
    EXPECT_NE(r.out.find("ode: y'' - y y' = 0"), std::string::npos);
}

TEST_F(CliTest, GuessConfigFlags)
{
    auto path = write_oracle("zeta-rescaled", 24);
    auto r = invoke({"guess", "--input", path, "--d-max", "4", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out).at("status"), "fail");
    auto big = invoke({"guess", "--input", path, "--d-start", "2", "--max-poly-deg", "1", "--format", "json"});
    EXPECT_EQ(big.code, 0);
    EXPECT_EQ(nlohmann::json::parse(big.out).at("m"), 1);
}

TEST_F(CliTest, GuessWithRescale)
{
    // 2^n * zigzag coefficients, divided back by 2^n, must give y'' - y y'.
    auto prefix = rescale_prefix(oracle_sequence(OracleName::zigzag_egf, 24), Rational::parse("1/2"));
    auto path = write("scaled.txt", format_prefix(prefix));
    auto r = invoke({"guess", "--input", path, "--rescale", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ode: y″ − y·y′ = 0"), std::string::npos);
    EXPECT_NE(r.err.find("note"), std::string::npos);
}

TEST_F(CliTest, DegenerateInputExitsThree)
{
    auto path = write("zeros.txt", "0\n0\n0\n0\n");
    auto r = invoke({"guess", "--input", path});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("degenerate input: all terms zero"), std::string::npos);
    auto few = write("few.txt", "1\n2\n3\n");
    EXPECT_EQ(invoke({"guess", "--input", few}).code, 3);
}

TEST_F(CliTest, NegativeControlExitsOne)
{
    auto path = write("nn.txt", format_prefix(quadguess::testing::power_over_factorial(24)));
    auto r = invoke({"guess", "--input", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "FAIL\n");
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"guess"}).code, 2);
    EXPECT_EQ(invoke({"oracle", "--name", "exp", "--count", "0"}).code, 2);
    EXPECT_EQ(invoke({"guess", "--input", "x", "--format", "yaml"}).code, 2);
    auto r = invoke({"oracle", "--name", "catalan", "--count", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown oracle"), std::string::npos);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, InputErrorsCarryLineNumbers)
{
    auto path = write("bad.txt", "1\n# comment\n\n1/2\n3/x\n");
    auto r = invoke({"guess", "--input", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("bad.txt:5:"), std::string::npos) << r.err;
    auto missing = invoke({"guess", "--input", (dir_ / "nope.txt").string()});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
}

TEST_F(CliTest, JsonPrefixInput)
{
    auto prefix = oracle_sequence(OracleName::zigzag_egf, 22);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &v : prefix.values)
        arr.push_back(v.str());
    arr[0] = 1; // plain integers are accepted
    auto path = write("zz.json", arr.dump());
    auto r = invoke({"guess", "--input", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("y″ − y·y′ = 0"), std::string::npos);
    auto bad = write("bad.json", R"(["1", "2", 2.5])");
    auto b = invoke({"guess", "--input", bad});
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("element 2"), std::string::npos);
}

TEST_F(CliTest, ExtendAndCheck)
{
    auto eq = write("zz.json", R"({"terms":[{"s":0,"p":2,"q":-1,"c":"1"},{"s":0,"p":1,"q":0,"c":"-1"}]})");
    auto init = write("init.txt", "1\n1\n");
    auto r = invoke({"extend", "--equation", eq, "--input", init, "--count", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n1\n1/2\n1/3\n5/24\n");

    auto good = write("good.txt", r.out);
    auto c = invoke({"check", "--equation", eq, "--input", good});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "pass (3 rows)\n");

    auto bad = write("badseq.txt", "1\n1\n1/2\n1/3\n1/4\n");
    auto f = invoke({"check", "--equation", eq, "--input", bad, "--format", "json"});
    EXPECT_EQ(f.code, 1);
    auto j = nlohmann::json::parse(f.out);
    EXPECT_EQ(j.at("pass"), false);
    EXPECT_EQ(j.at("first_failing_row"), 2);

    auto lam = write("lam.json", R"({"terms":[{"s":1,"p":1,"q":-1,"c":"1"},{"s":1,"p":1,"q":0,"c":"1"},{"s":0,"p":0,"q":-1,"c":"-1"}]})");
    auto zero = write("zero.txt", "0\n");
    auto e = invoke({"extend", "--equation", lam, "--input", zero, "--count", "2"});
    EXPECT_EQ(e.code, 1);
    EXPECT_NE(e.err.find("leading coefficient zero"), std::string::npos);

    auto malformed = write("m.json", R"({"terms":[{"s":0,"p":0,"q":1,"c":"1"}]})");
    EXPECT_EQ(invoke({"check", "--equation", malformed, "--input", good}).code, 2);
}
