#include "stringy/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace stringy;
using namespace stringy::cli;

namespace {

std::string model(const std::string& name) { return std::string(STRINGY_MODELS_DIR) + "/" + name; }

RunResult run1(const std::string& cmd, const std::string& file, Options o = {}) { return run(cmd, {model(file)}, o); }

}  // namespace

TEST(Cli, StringyOnWps) {
  auto r = run1("stringy", "wp_1_1_2.model");
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_EQ(r.out, "eorb = 1 + 2*(uv)^1 + 1*(uv)^2\nchi_orb = 4\n");
}

TEST(Cli, FractionalGate) {
  auto r = run1("stringy", "cyclic_1_3_11.model");
  EXPECT_EQ(r.status, kDiagnostic);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("non-integral exponent 2/3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("--allow-fractional"), std::string::npos);

  Options o;
  o.allow_fractional = true;
  r = run1("stringy", "cyclic_1_3_11.model", o);
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("eorb = 1*(uv)^2/3 + 1*(uv)^4/3 + 1*(uv)^2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("note = "), std::string::npos);
}

TEST(Cli, SectorsKv) {
  Options o;
  o.format = Format::kKv;
  auto r = run1("sectors", "cyclic_1_3_111.model", o);
  EXPECT_EQ(r.status, kOk);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 3u);
  EXPECT_NE(r.out.find("E = 1*(uv)^3; shift = 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("shift = 1"), std::string::npos);
  EXPECT_NE(r.out.find("shift = 2"), std::string::npos);
}

TEST(Cli, VerifyStatuses) {
  for (const auto* f : {"wp_1_1_2.model", "wp_1_2_3.model", "cyclic_1_3_111.model", "cyclic_1_5_113.model", "a4.model",
                        "toric_a1.model"}) {
    auto r = run1("verify", f);
    EXPECT_EQ(r.status, kOk) << f << "\n" << r.out << r.err;
  }
  Options o;
  o.format = Format::kKv;
  auto q8 = run1("verify", "q8.model", o);
  EXPECT_EQ(q8.status, kOk);
  EXPECT_NE(q8.out.find("skipped"), std::string::npos) << q8.out;
}

TEST(Cli, ResolveRoundTrip) {
  for (const auto* f : {"wp_1_1_2.model", "wp_1_2_3.model", "cyclic_1_3_111.model", "cyclic_1_5_113.model", "a4.model"}) {
    auto r = run1("resolve", f);
    ASSERT_EQ(r.status, kOk) << f << ": " << r.err;
    auto fan = std::get<ToricModel>(parse_model(r.out).model).fan;
    EXPECT_TRUE(is_smooth(fan)) << f;
    auto orig = parse_model(read_source(model(f)).text);
    EXPECT_EQ(epoly_of_fan(fan), orbifold_epoly(orig.model)) << f;
  }
  auto bad = run1("resolve", "cyclic_1_3_11.model");
  EXPECT_EQ(bad.status, kDiagnostic);
  bad = run1("resolve", "q8.model");
  EXPECT_EQ(bad.status, kDiagnostic);
}

TEST(Cli, CompareFlop) {
  auto r = run("compare", {model("flop_a.model"), model("flop_b.model")}, {});
  EXPECT_EQ(r.status, kOk) << r.err;
  auto same = run("compare", {model("flop_a.model"), model("flop_a.model")}, {});
  EXPECT_EQ(same.status, kOk);
  auto wrong = run("compare", {model("flop_a.model"), model("wp_1_1_2.model")}, {});
  EXPECT_EQ(wrong.status, kDiagnostic);
}

TEST(Cli, CatalogIsDeterministic) {
  auto a = run_sources("catalog", {}, {});
  auto b = run_sources("catalog", {}, {});
  EXPECT_EQ(a.status, kOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("equal = false"), std::string::npos);
  std::size_t lines = 0;
  for (char c : a.out) lines += c == '\n';
  EXPECT_EQ(lines, builtin_catalog().size());
  EXPECT_EQ(a.out.rfind("A1: equal = true", 0), 0u) << a.out;
}

TEST(Cli, Selftest) {
  auto r = run_sources("selftest", {}, {});
  EXPECT_EQ(r.status, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Diagnostics) {
  EXPECT_EQ(run_sources("frobnicate", {}, {}).status, kDiagnostic);
  EXPECT_EQ(run("verify", {}, {}).status, kDiagnostic);
  EXPECT_EQ(run("compare", {model("flop_a.model")}, {}).status, kDiagnostic);
  EXPECT_EQ(run("catalog", {model("flop_a.model")}, {}).status, kDiagnostic);

  auto missing = run1("verify", "no_such.model");
  EXPECT_EQ(missing.status, kDiagnostic);
  EXPECT_NE(missing.err.find("no_such.model"), std::string::npos);

  auto r = run_sources("stringy", {{"bad.model", "kind = wps\nweights = 1, x\n"}}, {});
  EXPECT_EQ(r.status, kDiagnostic);
  EXPECT_NE(r.err.find("bad.model"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("weights"), std::string::npos) << r.err;
}

TEST(Cli, CapFromEnvironment) {
  ::setenv("STRINGY_MCKAY_CAP", "16", 1);
  EXPECT_EQ(default_cap(), 16u);
  ::setenv("STRINGY_MCKAY_CAP", "nonsense", 1);
  EXPECT_EQ(default_cap(), kDefaultGroupCap);
  ::unsetenv("STRINGY_MCKAY_CAP");
  EXPECT_EQ(default_cap(), kDefaultGroupCap);

  Options o;
  o.cap = 4;
  auto r = run1("verify", "q8.model", o);
  EXPECT_EQ(r.status, kDiagnostic);
  EXPECT_NE(r.err.find("cap"), std::string::npos) << r.err;
}
