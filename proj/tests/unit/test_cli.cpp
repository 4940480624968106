#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dyfrt::cli::run(args, out, err);
  return Outcome{code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DYFRT_TEST_DATA) + "/" + name; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dyfrt_cli_" + name)).string();
}

}  // namespace

TEST(Cli, ValidateGoodAndBroken) {
  Outcome ok = run({"validate", data("q5_quasigroup.json")});
  EXPECT_EQ(ok.code, dyfrt::cli::kExitPass);
  EXPECT_TRUE(ok.report()["pass"]);

  Outcome bad = run({"validate", data("broken_action.json")});
  EXPECT_EQ(bad.code, dyfrt::cli::kExitCheckFailure);
  json r = bad.report();
  EXPECT_FALSE(r["pass"]);
  EXPECT_NE(r["checks"][0]["witness"].get<std::string>().find("column 1"), std::string::npos);

  Outcome ragged = run({"validate", data("ragged_action.json")});
  EXPECT_EQ(ragged.code, dyfrt::cli::kExitParseError);
  EXPECT_FALSE(ragged.err.empty());
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({}).code, dyfrt::cli::kExitParseError);
  EXPECT_EQ(run({"nonsense"}).code, dyfrt::cli::kExitParseError);
  EXPECT_EQ(run({"validate", data("missing.json")}).code, dyfrt::cli::kExitParseError);
  EXPECT_EQ(run({"dybm", "check"}).code, dyfrt::cli::kExitParseError);
}

TEST(Cli, BuildCheckAndOrder) {
  const std::string q5 = temp("q5.json");
  Outcome b = run(
      {"dybm", "build", "--quasigroup", data("q5_quasigroup.json"), "--ternary", data("z5_ternary.json"), "-o", q5});
  ASSERT_EQ(b.code, 0) << b.out << b.err;

  Outcome c = run({"dybm", "check", q5, "--qdybe"});
  EXPECT_EQ(c.code, 0);
  json r = c.report();
  EXPECT_EQ(r["checks"][0]["name"], "qdybe");
  EXPECT_EQ(r["checks"][0]["cases"], 625);

  Outcome u = run({"dybm", "check", q5, "--unitary"});
  EXPECT_EQ(u.code, 0);
  EXPECT_TRUE(u.report()["checks"][0]["tau_r_tau_r"]);
  EXPECT_TRUE(u.report()["checks"][0]["r_tau_r_tau"]);

  Outcome o = run({"wgroup", "order", q5});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report()["result"]["order"], 120);
  EXPECT_EQ(o.report()["result"]["generator_orders"], json({6, 2, 5, 4, 4}));

  Outcome bad = run({"wgroup", "order", q5, "--cap", "10"});
  EXPECT_NE(bad.code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string q5 = temp("q5_det.json");
  ASSERT_EQ(run({"dybm", "build", "-o", q5}).code, 0);
  Outcome a = run({"dybm", "check", q5, "--witness"}), b = run({"dybm", "check", q5, "--witness"});
  EXPECT_EQ(a.out, b.out);
  Outcome d1 = run({"frt", "demo-q5"}), d2 = run({"frt", "demo-q5"});
  EXPECT_EQ(d1.code, 0);
  EXPECT_EQ(d1.out, d2.out);
}

TEST(Cli, LOperatorsAndEval) {
  const std::string q5 = temp("q5_lop.json"), sig = temp("sig.json"), sig2 = temp("sig2.json");
  ASSERT_EQ(run({"dybm", "build", "-o", q5}).code, 0);
  ASSERT_EQ(run({"lop", "sigma", q5, "-o", sig}).code, 0);
  EXPECT_EQ(run({"lop", "check", q5, sig}).code, 0);
  ASSERT_EQ(run({"lop", "tensor", sig, sig, "--sigma", q5, "-o", sig2}).code, 0);
  EXPECT_EQ(run({"lop", "check", q5, sig2}).code, 0);

  Outcome e = run({"frt", "eval", q5, data("element.json")});
  EXPECT_EQ(e.code, 0) << e.out;
  EXPECT_TRUE(e.report().contains("result"));
}

TEST(Cli, ReproduceSubset) {
  Outcome r = run({"reproduce", "--only", "1,8", "--timing"});
  EXPECT_EQ(r.code, 0) << r.out;
  json j = r.report();
  EXPECT_TRUE(j["pass"]);
  EXPECT_EQ(j["checks"].size(), 2u);
}
