#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using freudlab::cli::RunConfig;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "freudlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  RunConfig cfg;
  std::ostringstream out, err;
  int code = freudlab::cli::parse_args(static_cast<int>(argv.size()), argv.data(), cfg, out, err);
  if (code != 0 || cfg.command.empty()) return {code, out.str(), err.str()};
  code = freudlab::cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, CoeffsCsvShape) {
  Result r = cli({"coeffs", "--n-max", "100", "--method", "both", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 102u);
  EXPECT_EQ(ls[0], "n,c_n,k_n,residual,trusted");
  EXPECT_EQ(ls[1].substr(0, 4), "0,0,");
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_NE(ls[i].find(",true"), std::string::npos) << i;
}

TEST(Cli, JsonShapeAndDigits) {
  Result r = cli({"coeffs", "--n-max", "10", "--prec-bits", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("meta"));
  ASSERT_EQ(j["rows"].size(), 11u);
  EXPECT_EQ(j["meta"]["prec_bits"], "200");
  EXPECT_TRUE(j["rows"][0]["residual"].is_null());
  // Significant digits of a mantissa: at least 0.3 * bits.
  std::string c1 = j["rows"][1]["c_n"];
  std::string mant = c1.substr(0, c1.find('e'));
  std::size_t digits = 0;
  for (char ch : mant) digits += (ch >= '0' && ch <= '9');
  EXPECT_GE(digits, 60u);
}

TEST(Cli, CsvAndJsonCarryTheSamePayload) {
  Result a = cli({"sobolev", "--n-max", "6", "--lambdas", "1,1", "--format", "csv"});
  Result b = cli({"sobolev", "--n-max", "6", "--lambdas", "1,1", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto j = nlohmann::ordered_json::parse(b.out);
  auto ls = lines(a.out);
  ASSERT_EQ(ls.size(), j["rows"].size() + 1);
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    std::string row;
    bool first = true;
    for (auto& [k, v] : j["rows"][i].items()) {
      if (!first) row += ',';
      first = false;
      if (!v.is_null()) row += v.get<std::string>();
    }
    EXPECT_EQ(row, ls[i + 1]);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"coeffs", "--prec-bits", "32"}).code, 2);
  EXPECT_EQ(cli({"coeffs", "--n-max", "0"}).code, 2);
  EXPECT_EQ(cli({"sobolev", "--lambdas", "1,-1"}).code, 2);
  EXPECT_EQ(cli({"coeffs", "--method", "magic"}).code, 2);
  EXPECT_EQ(cli({"coeffs", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"ratio", "--x", "0.5", "--n", "8"}).code, 2);
  EXPECT_EQ(cli({"nonsense"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
  // A tolerance no computation can meet makes verify fail.
  EXPECT_EQ(cli({"verify", "--n-max", "6", "--lambdas", "1", "--tol", "1e-300"}).code, 4);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  Result a = cli({"verify", "--n-max", "30", "--lambdas", "1", "--tol", "1e-20", "--format", "csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  Result b = cli({"verify", "--n-max", "30", "--lambdas", "1", "--tol", "1e-20", "--format", "csv"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("zero.odd_moment_value_m1"), std::string::npos);
}

TEST(Cli, RatioErrorsDecrease) {
  Result r = cli({"ratio", "--lambdas", "1", "--x", "1.5", "--n", "16,32,64,128,256", "--prec-bits", "128"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 5u);
  double prev = 1e9;
  for (auto& row : j["rows"]) {
    double e = std::stod(row["abs_error"].get<std::string>());
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Cli, ComplexPointsAndOtherCommands) {
  Result r = cli({"ratio", "--lambdas", "1", "--x", "1+i,2-0.5i,-i", "--n", "8", "--prec-bits", "128"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(std::stod(j["rows"][1]["x_im"].get<std::string>()), -0.5);
  EXPECT_EQ(std::stod(j["rows"][2]["x_im"].get<std::string>()), -1.0);

  Result z = cli({"zeros", "--n", "4", "--lambdas", "1", "--format", "csv"});
  ASSERT_EQ(z.code, 0) << z.err;
  EXPECT_NE(z.out.find("strict strict"), std::string::npos);

  Result l = cli({"limits", "--n-max", "500", "--lambdas", "1", "--prec-bits", "128"});
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_NE(l.out.find("a_n/sqrt(n)"), std::string::npos);

  Result p = cli({"predict", "--r", "2", "--n", "16,20", "--x", "3", "--prec-bits", "128"});
  ASSERT_EQ(p.code, 0) << p.err;
  auto pj = nlohmann::json::parse(p.out);
  EXPECT_EQ(pj["meta"]["label"], "conjecture");
}
