#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Runs the CLI from the fixtures directory so reports carry short input
// names.
Run qrw(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path err = fs::temp_directory_path() /
                       ("qrw_cli_err_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++));
  const std::string cmd = "cd '" + std::string(QRW_FIXTURES) + "' && " + env + " '" +
                          std::string(QRW_CLI) + "' " + args + " 2>'" + err.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  fs::remove(err);
  return r;
}

fs::path golden(const std::string& name) { return fs::path(QRW_TEST_DATA) / "golden" / name; }

void expect_golden(const std::string& name, const std::string& actual) {
  if (std::getenv("QRW_UPDATE_GOLDEN")) {
    std::ofstream(golden(name), std::ios::binary) << actual;
  }
  EXPECT_EQ(actual, slurp(golden(name))) << name;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qrw_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, CheckReportsTheI3Witness) {
  const auto r = qrw("check l3.qrw --subset 2 --implicative");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("I3"), std::string::npos);
  EXPECT_NE(r.out.find("(1,1,0)"), std::string::npos);
  EXPECT_EQ(qrw("check l3.qrw --subset 0,1,2 --implicative").code, 0);
  EXPECT_EQ(qrw("check l3.qrw --subset 2").code, 0);
}

TEST(Cli, PropsExitCodes) {
  EXPECT_EQ(qrw("props l2.qrw --prop 2.1.7").code, 0);
  EXPECT_EQ(qrw("props l3.qrw --prop 2.1.4 --subset 2").code, 1);
  EXPECT_EQ(qrw("props l3.qrw --prop 2.1.8 --subset 1,2 --p218-reading B").code, 1);
  EXPECT_EQ(qrw("props l3.qrw --prop 2.1.8 --subset 1,2 --p218-reading A").code, 0);
  EXPECT_EQ(qrw("props l3.qrw --prop 2.1.5 --subset 2 --subset 0,1,2").code, 0);
  const auto all = qrw("props l3.qrw");
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.err.find("2.1.8 skipped"), std::string::npos);
}

TEST(Cli, GenThenValidate) {
  const auto dir = scratch("gen");
  const auto file = (dir / "l3.qrw").string();
  EXPECT_EQ(qrw("gen luk 3 -o '" + file + "'").code, 0);
  EXPECT_EQ(slurp(file), slurp(fs::path(QRW_FIXTURES) / "l3.qrw"));
  EXPECT_EQ(qrw("validate '" + file + "'").code, 0);
  EXPECT_EQ(qrw("validate --strict-link '" + file + "'").code, 0);
  EXPECT_EQ(qrw("gen luk 4").out, slurp(fs::path(QRW_FIXTURES) / "l4.qrw"));
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(qrw("validate l3_broken.qrw").code, 1);
  EXPECT_EQ(qrw("validate l2_coarse.qrw").code, 0);
  EXPECT_EQ(qrw("validate l2_coarse.qrw --strict-link").code, 1);
  EXPECT_EQ(qrw("validate bool4_quasi.qrw").code, 0);
}

TEST(Cli, UsageErrorsExitTwoWithUsageOnStderr) {
  for (const std::string args :
       {"validate l3.qrw --bogus", "", "frobnicate", "check l3.qrw", "check l3.qrw --subset 5",
        "props l3.qrw --prop 2.1.8", "props l3.qrw --prop 7.7", "gen luk 1",
        "search --order 7", "search --order 3 --random", "search --order 2 --hunt nope",
        "search --order 2 --axioms W9", "props l3.qrw --p218-reading C"}) {
    const auto r = qrw(args);
    EXPECT_EQ(r.code, 2) << args;
    EXPECT_TRUE(r.out.empty()) << args;
    EXPECT_NE(r.err.find("error"), std::string::npos) << args;
  }
  EXPECT_NE(qrw("validate l3.qrw --bogus").err.find("Usage"), std::string::npos);
}

TEST(Cli, ParseAndLoadErrorsExitTwo) {
  const auto dir = scratch("bad");
  std::ofstream(dir / "short.qrw") << "qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\n";
  const auto r = qrw("validate '" + (dir / "short.qrw").string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("imp block"), std::string::npos);
  EXPECT_EQ(qrw("validate missing.qrw").code, 2);
}

TEST(Cli, EnumerationLimitFromEnvironment) {
  EXPECT_EQ(qrw("filters l3.qrw", "QRW_ENUM_LIMIT=2").code, 2);
  EXPECT_EQ(qrw("filters l3.qrw", "QRW_ENUM_LIMIT=3").code, 0);
}

TEST(Cli, FiltersListing) {
  EXPECT_EQ(qrw("filters l3.qrw").out, "{2}\n{0,1,2}\n");
  EXPECT_EQ(qrw("filters l3.qrw --implicative").out, "{0,1,2}\n");
}

TEST(Cli, JsonGoldenFiles) {
  expect_golden("validate_l3_broken.json", qrw("validate l3_broken.qrw --json").out);
  expect_golden("check_l3_unit.json", qrw("check l3.qrw --subset 2 --implicative --json").out);
  expect_golden("filters_bool4.json", qrw("filters bool4.qrw --json").out);
  expect_golden("props_l3.json", qrw("props l3.qrw --p218-reading B --json").out);
  expect_golden("search_order3.json", qrw("search --order 3 --json").out);
}

TEST(Cli, JsonIsStableAndCanonical) {
  for (const std::string args :
       {"validate l3_broken.qrw --json", "props l4.qrw --p218-reading A --json",
        "search --order 4 --json", "filters l5.qrw --json"}) {
    const auto a = qrw(args);
    EXPECT_EQ(a.out, qrw(args).out) << args;
    const auto parsed = nlohmann::ordered_json::parse(a.out);
    EXPECT_EQ(parsed.dump(2) + "\n", a.out) << args;
  }
  const auto doc = nlohmann::ordered_json::parse(qrw("validate l3.qrw --json").out);
  std::vector<std::string> order;
  for (const auto& [k, v] : doc.items()) order.push_back(k);
  EXPECT_EQ(order, (std::vector<std::string>{"command", "input", "classification", "strict_link",
                                             "diagnostics", "antisymmetry", "filters",
                                             "implicative_filters", "check", "prop_verdicts"}));
}

TEST(Cli, ExitCodesDoNotDependOnThreads) {
  for (const std::string base : {"search --order 3 --hunt filter-not-implicative",
                                 "search --order 2 --hunt non-antisymmetric-valid-model",
                                 "search --order 4 --hunt prop-2.1.9-disagreement"}) {
    const auto one = qrw(base + " --threads 1 --json");
    const auto many = qrw(base + " --threads 3 --json");
    EXPECT_EQ(one.code, many.code) << base;
    EXPECT_EQ(one.out, many.out) << base;
  }
}

TEST(Cli, SearchWritesModelsAndSidecars) {
  const auto models = scratch("models");
  EXPECT_EQ(qrw("search --order 4 --strict-link --out '" + models.string() + "'").code, 0);
  EXPECT_TRUE(fs::exists(models / "model_0000.qrw"));
  EXPECT_TRUE(fs::exists(models / "model_0001.qrw"));
  EXPECT_FALSE(fs::exists(models / "model_0002.qrw"));
  EXPECT_EQ(qrw("validate --strict-link '" + (models / "model_0001.qrw").string() + "'").code, 0);

  const auto hunts = scratch("hunts");
  const auto r = qrw("search --order 3 --hunt filter-not-implicative --json --out '" +
                     hunts.string() + "'");
  EXPECT_EQ(r.code, 1);
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_FALSE(summary["findings"].empty());
  ASSERT_TRUE(fs::exists(hunts / "finding_0000.qrw"));
  const auto sidecar = nlohmann::json::parse(slurp(hunts / "finding_0000.witness.json"));
  EXPECT_EQ(sidecar["hunt"], "filter-not-implicative");
  const auto subset = sidecar["subset"].get<std::vector<int>>();
  std::string arg;
  for (std::size_t i = 0; i < subset.size(); ++i) arg += (i ? "," : "") + std::to_string(subset[i]);
  EXPECT_EQ(qrw("check '" + (hunts / "finding_0000.qrw").string() + "' --subset " + arg).code, 0);
  EXPECT_EQ(
      qrw("check '" + (hunts / "finding_0000.qrw").string() + "' --implicative --subset " + arg)
          .code,
      1);
}

TEST(Cli, RandomSearch) {
  const auto a = qrw("search --order 5 --random --seed 7 --count 300 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, qrw("search --order 5 --random --seed 7 --count 300 --json --threads 2").out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["stats"]["candidates"], 300);
}
