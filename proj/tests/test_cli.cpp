#include "capelli/cli.hpp"

#include <gtest/gtest.h>

#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

using namespace capelli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("capelli_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int binary_exit(const std::string& args) {
  const char* exe = std::getenv("CAPELLI_CLI");
  if (!exe) return -1;
  const int status = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ComputeTrivial) {
  const CliResult r = cli({"compute", "--family", "E", "--n", "1", "--lambda", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, ComputeLatexMatchesKnownValue) {
  const CliResult r = cli({"compute", "--family", "E", "--n", "2", "--lambda", "1,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "z_{1} + \\frac{t - 1}{q t - 1} z_{2} - \\frac{q t^{2} - 1}{q t^{2} - t}\n");
  const CliResult interp = cli({"compute", "--family", "E", "--n", "2", "--lambda", "1,0", "--route", "interpolation"});
  EXPECT_EQ(interp.out, r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({"compute", "--family", "P", "--n", "2", "--lambda", "0,1"}).code, kExitUsage);
  EXPECT_EQ(cli({"compute", "--family", "E", "--n", "2", "--lambda", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"compute", "--family", "X", "--n", "1", "--lambda", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"compute", "--family", "E", "--n", "1", "--lambda", "0", "--route", "limit"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--suite", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(cli({"nosuch"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
}

TEST(Cli, BinaryExitCodes) {
  if (!std::getenv("CAPELLI_CLI")) GTEST_SKIP() << "CAPELLI_CLI not set";
  EXPECT_EQ(binary_exit("compute --family E --n 1 --lambda 0"), 0);
  EXPECT_EQ(binary_exit("compute --family P --n 2 --lambda 0,1"), 2);
  EXPECT_EQ(binary_exit("verify --suite nosuch"), 2);
  EXPECT_EQ(binary_exit("verify --suite eigen --n-max 1 --degree-max 1"), 0);
}

TEST(Cli, VerifyReport) {
  const CliResult r = cli({"verify", "--suite", "eigen", "--n-max", "1", "--degree-max", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("cases"), 2);
  EXPECT_EQ(j.at("failures").size(), 0u);
}

TEST(Cli, JsonDocumentRoundTrip) {
  const CliResult r = cli({"compute", "--family", "P", "--n", "2", "--lambda", "2,1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), kSchema);
  const auto doc = document_from_json<QT>(j);
  Builder b(2);
  EXPECT_EQ(doc.body, b.symmetrize_hecke(Composition{2, 1}).body);
  EXPECT_EQ(document_to_json(doc).dump(2) + "\n", r.out);
}

TEST(Cli, LatexRoundTrip) {
  Builder b(3);
  for (const auto& lambda : enumerate(2, 3, EnumKind::compositions)) {
    const QTPoly e = b.recurse_nonsym(lambda).body;
    EXPECT_EQ(parse_polynomial<QT>(to_latex(e), 3), e) << lambda.to_string();
  }
  Builder b2(2);
  const RPoly et = b2.interpolate_classical(Composition{1, 1}, false).body;
  EXPECT_EQ(parse_polynomial<R>(to_latex(et), 2), et);
}

TEST(Cli, CachePutGetIdentical) {
  const fs::path dir = fresh_dir("putget");
  const std::vector<std::string> fam{"--family", "E", "--n", "2", "--lambda", "1,1", "--cache-dir", dir.string()};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), fam.begin(), fam.end());
    return head;
  };
  const CliResult miss = cli(with({"cache", "get"}));
  EXPECT_EQ(miss.code, kExitOk);
  EXPECT_EQ(Json::parse(miss.out).at("status"), "miss");
  const CliResult put = cli(with({"cache", "put"}));
  EXPECT_EQ(put.code, kExitOk) << put.err;
  EXPECT_EQ(Json::parse(put.out).at("status"), "stored");
  const CliResult get1 = cli(with({"cache", "get"}));
  const CliResult get2 = cli(with({"cache", "get"}));
  EXPECT_EQ(Json::parse(get1.out).at("status"), "hit");
  EXPECT_EQ(get1.out, get2.out);
  // a second put writes the same bytes
  Cache cache(dir);
  CacheKey key = FamilyRequest{"E", 2, "1,1", ""}.key();
  const auto before = cache.get(key);
  cli(with({"cache", "put"}));
  EXPECT_EQ(cache.get(key), before);
  const CliResult stat = cli({"cache", "stat", "--cache-dir", dir.string()});
  EXPECT_EQ(Json::parse(stat.out).at("entries").size(), 1u);
  const CliResult purge = cli({"cache", "purge", "--cache-dir", dir.string()});
  EXPECT_EQ(Json::parse(purge.out).at("removed"), 1);
  EXPECT_EQ(Json::parse(cli({"cache", "stat", "--cache-dir", dir.string()}).out).at("entries").size(), 0u);
  fs::remove_all(dir);
}

TEST(Cli, CacheHitsDoNotRecompute) {
  const fs::path dir = fresh_dir("hits");
  const std::vector<std::string> args{"compute", "--family", "E", "--n", "2", "--lambda", "2,0", "--cache-dir", dir.string()};
  const auto before = construction_counter().load();
  const CliResult first = cli(args);
  EXPECT_EQ(construction_counter().load(), before + 1);
  const CliResult second = cli(args);
  EXPECT_EQ(construction_counter().load(), before + 1);
  EXPECT_EQ(first.out, second.out);
  fs::remove_all(dir);
}

TEST(Cli, FlagOverridesEnvironment) {
  const fs::path env_dir = fresh_dir("env"), flag_dir = fresh_dir("flag");
  ::setenv("CAPELLI_CACHE_DIR", env_dir.string().c_str(), 1);
  EXPECT_EQ(cli({"compute", "--family", "E", "--n", "1", "--lambda", "2", "--cache-dir", flag_dir.string()}).code, kExitOk);
  EXPECT_TRUE(fs::is_empty(env_dir));
  EXPECT_FALSE(fs::is_empty(flag_dir));
  EXPECT_EQ(cli({"compute", "--family", "E", "--n", "1", "--lambda", "3"}).code, kExitOk);
  EXPECT_FALSE(fs::is_empty(env_dir));
  ::unsetenv("CAPELLI_CACHE_DIR");
  fs::remove_all(env_dir);
  fs::remove_all(flag_dir);
}

TEST(Cli, UnwritableCacheIsBypassed) {
  const fs::path dir = fresh_dir("ro");
  const fs::path file = dir / "not_a_dir";
  std::ofstream(file) << "x";
  const CliResult r = cli({"compute", "--family", "E", "--n", "1", "--lambda", "1", "--cache-dir", file.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "z_{1} - 1\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos) << r.err;
  fs::remove_all(dir);
}

TEST(Cli, CorruptCacheEntryIsRecomputed) {
  const fs::path dir = fresh_dir("corrupt");
  const std::vector<std::string> args{"compute", "--family", "E", "--n", "1", "--lambda", "1", "--cache-dir", dir.string()};
  const CliResult clean = cli(args);
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{not json";
  const CliResult again = cli(args);
  EXPECT_EQ(again.code, kExitOk);
  EXPECT_EQ(again.out, clean.out);
  fs::remove_all(dir);
}

TEST(Cli, ExpandProducts) {
  const CliResult r = cli({"expand", "--family", "E", "--n", "2", "--lambda", "1,0", "--times", "0,1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("basis"), "E");
  const CliResult self = cli({"expand", "--poly", "z_1 + z_2", "--n", "2", "--basis", "m"});
  ASSERT_EQ(self.code, kExitOk) << self.err;
  EXPECT_EQ(self.out, "\\left(1\\right) m_{(1,0)}\n");
  const CliResult one = cli({"expand", "--poly", "1", "--n", "2"});
  EXPECT_EQ(one.out, "\\left(1\\right) E_{(0,0)}\n");
  EXPECT_EQ(cli({"expand", "--poly", "z_1", "--n", "2", "--basis", "m"}).code, kExitUsage);
  EXPECT_EQ(cli({"expand", "--poly", "z_1 +", "--n", "2"}).code, kExitUsage);
}

TEST(Cli, ExpandDocument) {
  const fs::path dir = fresh_dir("doc");
  const CliResult r = cli({"compute", "--family", "E", "--n", "2", "--lambda", "0,1", "--format", "json"});
  const fs::path doc = dir / "e01.json";
  std::ofstream(doc) << r.out;
  const CliResult ex = cli({"expand", "--document", doc.string()});
  EXPECT_EQ(ex.code, kExitOk) << ex.err;
  EXPECT_EQ(ex.out, "\\left(1\\right) E_{(0,1)}\n");
  fs::remove_all(dir);
}

TEST(Cli, ExpandSpecExamples) {
  const CliResult unit = cli({"expand", "--family", "E", "--n", "1", "--lambda", "0", "--times", "0"});
  ASSERT_EQ(unit.code, kExitOk) << unit.err;
  EXPECT_EQ(unit.out, "\\left(1\\right) E_{(0)}\n");
  const CliResult m = cli({"expand", "--family", "P", "--n", "2", "--lambda", "1,0", "--basis", "m", "--format", "json"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  const Json j = Json::parse(m.out);
  ASSERT_EQ(j.at("coefficients").size(), 2u);
  EXPECT_EQ(j.at("coefficients")[0].at("label"), (std::vector<int>{1, 0}));
  EXPECT_EQ(j.at("coefficients")[1].at("label"), (std::vector<int>{0, 0}));
  const QTField c0 = coefficient_from_json<QT>(j.at("coefficients")[1].at("coefficient"));
  EXPECT_EQ(c0, -(QTField(1) + t_param().inverse()));
}
