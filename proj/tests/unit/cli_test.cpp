/*
   Copyright 2026 The hjrank Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace hjrank::cli {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hjrank");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kClg = std::string(HJRANK_DATA_DIR) + "/clgroups.clg";
const std::string kTestData = HJRANK_TEST_DATA_DIR;

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

TEST(CliMinpoly, ExplicitPolynomials) {
    EXPECT_EQ(run_cli({"minpoly", "--q", "7"}).out, "x^3 - x^2 - 2x + 1\n");
    EXPECT_EQ(run_cli({"minpoly", "--q", "11"}).out, "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1\n");
    EXPECT_EQ(run_cli({"minpoly", "--q", "23"}).out,
              "x^11 - x^10 - 10x^9 + 9x^8 + 36x^7 - 28x^6 - 56x^5 + 35x^4 + 35x^3 - 15x^2 - 6x + 1\n");
    EXPECT_EQ(run_cli({"minpoly", "--q", "7", "--format", "coeffs"}).out, "1,-2,-1,1\n");
    EXPECT_EQ(run_cli({"minpoly", "--q", "7", "--sign", "plus"}).out, "x^3 + x^2 - 2x - 1\n");
    EXPECT_EQ(run_cli({"minpoly", "--q", "11", "--sign", "minus"}).out, "x^5 - x^4 - 4x^3 + 3x^2 + 3x - 1\n");
}

TEST(CliMinpoly, InvalidInput) {
    EXPECT_EQ(run_cli({"minpoly", "--q", "9"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"minpoly"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"minpoly", "--q", "7", "--sign", "sideways"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"minpoly", "-q", "7"}).code, kInvalidInput);
}

TEST(CliWashington, KnownAndMissingRecords) {
    const CliResult r = run_cli({"washington", "--m", "1..30", "--clgroups", kClg});
    EXPECT_EQ(r.code, kPartial);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"curve=wash-m1 g=1 rho_inf=0 cl2=0 upper=1 hyps=G-trivial,rho-inf-0",
                                                       "curve=wash-m11 g=1 rho_inf=0 cl2=2 upper=3 hyps=G-trivial,rho-inf-0"}));
    // Every other square-free-D m in range is reported missing.
    std::size_t expected_missing = 0;
    for (std::int64_t m = 1; m <= 30; ++m) expected_missing += washington_in_family(m) && m != 1 && m != 11;
    EXPECT_EQ(lines(r.err).size(), expected_missing);
    EXPECT_NE(r.err.find("m=2 class group unknown: poly=1,-5,2,1"), std::string::npos);
}

TEST(CliWashington, SingleAndEmpty) {
    const CliResult r = run_cli({"washington", "--m", "143..143", "--clgroups", kClg});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("upper=5"), std::string::npos);
    const CliResult z = run_cli({"washington", "--m", "0..0", "--clgroups", kClg});
    EXPECT_EQ(z.code, kOk);
    EXPECT_EQ(z.out, "");
    EXPECT_EQ(run_cli({"washington", "--m", "5..1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"washington", "--m", "1", "--clgroups", kTestData + "/missing.clg"}).code, kInvalidInput);
    const CliResult v = run_cli({"washington", "--m", "11", "--clgroups", kClg, "--verbose"});
    EXPECT_NE(v.out.find("rank <= 3"), std::string::npos);
}

TEST(CliWashington, OutputIndependentOfThreads) {
    const CliResult a = run_cli({"washington", "--m", "1..200", "--clgroups", kClg, "--threads", "1"});
    const CliResult b = run_cli({"washington", "--m", "1..200", "--clgroups", kClg, "--threads", "4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    EXPECT_EQ(a.code, b.code);
}

TEST(CliSophie, TableRows) {
    const CliResult r11 = run_cli({"sophie", "--q", "11", "--lower", "--clgroups", kClg});
    EXPECT_EQ(r11.code, kOk);
    EXPECT_NE(r11.out.find("upper=2 lower=2"), std::string::npos);
    const CliResult r23 = run_cli({"sophie", "--q", "23", "--lower", "--clgroups", kClg});
    EXPECT_NE(r23.out.find("upper=5 lower=4"), std::string::npos);
    const CliResult r47 = run_cli({"sophie", "--q", "47", "--lower", "--clgroups", kClg});
    EXPECT_NE(r47.out.find("upper=11 lower=6"), std::string::npos);
}

TEST(CliSophie, TableFormatAndDeterminism) {
    const CliResult a = run_cli({"sophie", "--q", "11,23,47", "--lower", "--table", "--clgroups", kClg, "--threads", "1"});
    const CliResult b = run_cli({"sophie", "--q", "11,23,47", "--lower", "--table", "--clgroups", kClg, "--threads", "3"});
    EXPECT_EQ(a.out, b.out);
    const auto l = lines(a.out);
    ASSERT_EQ(l.size(), 6U);
    EXPECT_EQ(l[3], "p         5    11    23");
    EXPECT_EQ(l[4], "upper     2     5    11");
    EXPECT_EQ(l[5], "lower     2     4     6");
}

TEST(CliSophie, RejectsNonSophieGermainPerItem) {
    const CliResult r = run_cli({"sophie", "--q", "11,13", "--clgroups", kClg});
    EXPECT_EQ(r.code, kInvalidInput);
    EXPECT_NE(r.out.find("curve=sophie-q11"), std::string::npos);
    EXPECT_NE(r.err.find("not Sophie Germain: q=13"), std::string::npos);
}

TEST(CliSophie, MissingDataAndDavisTaussky) {
    EXPECT_EQ(run_cli({"sophie", "--q", "179"}).code, kPartial);
    const CliResult dt = run_cli({"sophie", "--q", "179", "--assume-davis-taussky"});
    EXPECT_EQ(dt.code, kOk);
    EXPECT_NE(dt.out.find("upper=44"), std::string::npos);
    EXPECT_NE(dt.out.find("davis-taussky-assumed"), std::string::npos);
}

TEST(CliScan, SmallBounds) {
    const CliResult r = run_cli({"scan-rho", "--max-q", "100"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"7 3 2 true", "11 5 4 true", "23 11 10 true", "47 23 22 true",
                                                       "59 29 28 true", "83 41 40 true",
                                                       "# pairs=6 certified=6 failed=0"}));
    const CliResult e = run_cli({"scan-rho", "--max-q", "6"});
    EXPECT_EQ(e.code, kOk);
    EXPECT_EQ(e.out, "");
    EXPECT_EQ(run_cli({"scan-rho", "--max-q", "3000", "--threads", "1"}).out,
              run_cli({"scan-rho", "--max-q", "3000", "--threads", "4"}).out);
}

TEST(CliLowerBound, Examples) {
    const CliResult r = run_cli({"lower-bound", "--poly", "1,3,-3,-4,1,1"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(lines(r.out)[0], "lower=2 factors=3 classes=3");
    EXPECT_EQ(run_cli({"lower-bound", "--poly", "1,-2,-1,1", "--y0", "1"}).out.substr(0, 8), "lower=1 ");
    EXPECT_EQ(run_cli({"lower-bound", "--poly", "1,x,1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"lower-bound", "--poly", "3,-3,0,1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"lower-bound", "--poly", "1,3,-3,-4,1,1", "--y0", "1/0"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"lower-bound", "--poly", "-1,0,1"}).code, kInvalidInput);
}

TEST(CliStats, SyntheticAndErrors) {
    const CliResult r = run_cli({"stats", "--ranks", kTestData + "/synthetic_ranks.txt", "--bounds",
                           kTestData + "/synthetic_bounds.txt", "--intervals", "1..40/20"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("[21,40]                 13        3  0.23077"), std::string::npos);
    EXPECT_EQ(run_cli({"stats", "--ranks", kTestData + "/synthetic_bounds.txt", "--bounds",
                       kTestData + "/synthetic_bounds.txt"})
                  .code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"stats", "--ranks", kTestData + "/synthetic_ranks.txt", "--bounds",
                       kTestData + "/synthetic_bounds.txt", "--intervals", "1..10,5..9"})
                  .code,
              kInvalidInput);
}

TEST(Cli, HelpAndUsageErrors) {
    EXPECT_EQ(run_cli({"--help"}).code, kOk);
    EXPECT_EQ(run_cli({}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kInvalidInput);
}

}  // namespace
}  // namespace hjrank::cli
