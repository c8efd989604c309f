#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catlab/cli.hpp"

using namespace catlab;
using namespace catlab::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "catlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("catlab_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json strip_timing(json report) {
  for (auto& r : report["results"]) r.erase("ms");
  return report;
}

}  // namespace

TEST_CASE("build prints the matrix") {
  auto r = run({"build", "--family", "catalecticant", "-m", "3", "-r", "1"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("X1") != std::string::npos);
  CHECK(r.out.find("X4") != std::string::npos);

  auto bad = run({"build", "--family", "sub-hankel", "-m", "4", "-n", "4"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("semi-hankel") != std::string::npos);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "--family", "catalecticant", "-m", "3", "-r", "1", "--checks", "heights,linear-type"}).code ==
        kExitPass);
  auto normality = run({"check", "--family", "sub-hankel", "-m", "4", "-n", "5", "--checks", "normality"});
  CHECK(normality.code == kExitFail);
  CHECK(normality.out.find("lies in P^2") != std::string::npos);
  auto budget = run({"check", "--family", "catalecticant", "-m", "3", "-r", "1", "--checks", "linear-type",
                     "--max-basis", "2"});
  CHECK(budget.code == kExitBudget);
  CHECK(budget.out.find("budget_exceeded") != std::string::npos);
  CHECK(run({"check", "--family", "catalecticant", "-m", "3", "-r", "1", "--checks", "bogus"}).code == kExitUsage);
  CHECK(run({"check", "--family", "catalecticant", "-m", "3", "-r", "1", "--prime", "32004"}).code == kExitUsage);
  CHECK(run({"check", "--family", "semi-hankel", "-m", "3", "-n", "3", "--forms", "X1+"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("exit code precedence") {
  CHECK(exit_code_for({}) == kExitPass);
  CHECK(exit_code_for({Verdict::pass, Verdict::budget_exceeded}) == kExitBudget);
  CHECK(exit_code_for({Verdict::budget_exceeded, Verdict::fail, Verdict::pass}) == kExitFail);
}

TEST_CASE("json output and reproducibility") {
  std::vector<std::string> args{"check", "--family", "semi-hankel", "-m", "3", "-n", "3", "--seed", "5",
                                "--format", "json", "--checks", "heights,linear-type,cremona"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code != kExitUsage);
  auto ja = json::parse(a.out);
  auto jb = json::parse(b.out);
  CHECK(ja["version"] == kVersion);
  CHECK(ja["instance"]["label"] == "semi-hankel_m3_n3_s5");
  CHECK(ja["results"].size() == 3);
  CHECK(strip_timing(ja) == strip_timing(jb));
}

TEST_CASE("config file") {
  auto dir = scratch("config");
  write(dir / "run.toml",
        "family = \"catalecticant\"\nm = 3\nr = 1\nchecks = [\"heights\", \"ntf\"]\nrmax = 3\n"
        "[budget]\nmax_degree = 40\ntimeout = 60.0\n");
  auto c = load_config((dir / "run.toml").string());
  CHECK(c.spec.family == Family::catalecticant);
  CHECK(c.spec.m == 3);
  CHECK(c.spec.r == 1);
  CHECK(c.checks == std::vector<std::string>{"heights", "ntf"});
  CHECK(c.r_max == 3);
  CHECK(c.max_degree == 40);
  CHECK(c.timeout_seconds == doctest::Approx(60.0));

  auto out = dir / "report.json";
  auto r = run({"check", "--config", (dir / "run.toml").string(), "--out", out.string()});
  CHECK(r.code == kExitPass);
  auto report = json::parse(slurp(out));
  CHECK(report["results"].size() == 2);
  CHECK(report["config"]["checks"].size() == 2);

  write(dir / "bad.toml", "family = \"catalecticant\"\nm = 3\nr = 1\nchecks = [\"nope\"]\n");
  CHECK(run({"check", "--config", (dir / "bad.toml").string()}).code == kExitUsage);
  write(dir / "broken.toml", "family = \n");
  CHECK(run({"check", "--config", (dir / "broken.toml").string()}).code == kExitUsage);
}

TEST_CASE("default checks") {
  FamilySpec square{Family::semi_hankel, 4, 4, 0, {}, 1};
  CHECK(default_checks(square).size() == 7);
  FamilySpec sub{Family::sub_hankel, 4, 5, 0, {}, {}};
  CHECK(default_checks(sub).size() == 5);
}

TEST_CASE("grid expansion") {
  auto cat = expand_grid_entry(Family::catalecticant, {3, 4}, std::nullopt, std::nullopt, {});
  REQUIRE(cat.size() == 5);
  CHECK(cat[0].label == "catalecticant_m3_r1");
  CHECK(cat[4].label == "catalecticant_m4_r3");

  auto sub = expand_grid_entry(Family::sub_hankel, {4}, std::nullopt, std::nullopt, {});
  REQUIRE(sub.size() == 2);
  CHECK(sub[0].spec->n == 5);
  CHECK(sub[1].spec->n == 6);

  auto semi = expand_grid_entry(Family::semi_hankel, {4}, std::nullopt, std::nullopt, {1, 2});
  // n = 4, 5 need forms (two seeds each); n = 6 is the full Hankel matrix.
  REQUIRE(semi.size() == 5);
  CHECK(semi.back().spec->n == 6);
  CHECK(!semi.back().spec->seed);

  auto bad = expand_grid_entry(Family::sub_hankel, {4}, std::vector<int>{4, 9}, std::nullopt, {});
  REQUIRE(bad.size() == 2);
  CHECK(!bad[0].spec);
  CHECK(!bad[0].error.empty());
  CHECK(!bad[1].spec);

  auto unseeded = expand_grid_entry(Family::semi_hankel, {3}, std::vector<int>{3}, std::nullopt, {});
  REQUIRE(unseeded.size() == 1);
  CHECK(!unseeded[0].spec);
}

TEST_CASE("sweep writes reports and a deterministic summary") {
  auto dir = scratch("sweep");
  write(dir / "grid.toml",
        "checks = [\"normality\"]\nthreads = 2\n"
        "[[grid]]\nfamily = \"sub-hankel\"\nm = 4\nn = [5, 6]\n");
  auto s = load_sweep((dir / "grid.toml").string());
  REQUIRE(s.entries.size() == 2);

  std::ostringstream log;
  int code = run_sweep(s, (dir / "out").string(), log);
  // n = m + 1 fails with a witness, n = m + 2 is normal.
  CHECK(code == kExitFail);
  CHECK(fs::exists(dir / "out" / "sub-hankel_m4_n5.json"));
  CHECK(fs::exists(dir / "out" / "sub-hankel_m4_n6.json"));
  auto summary = slurp(dir / "out" / "summary.csv");
  CHECK(summary.rfind("instance,check,verdict,ms\n", 0) == 0);
  CHECK(summary.find("sub-hankel_m4_n5,normality,fail,") != std::string::npos);
  CHECK(summary.find("sub-hankel_m4_n6,normality,pass,") != std::string::npos);
  CHECK(summary.find("sub-hankel_m4_n5") < summary.find("sub-hankel_m4_n6"));

  auto strip = [](std::string csv) {
    std::string out;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  s.threads = 1;
  std::ostringstream log2;
  run_sweep(s, (dir / "again").string(), log2);
  CHECK(strip(summary) == strip(slurp(dir / "again" / "summary.csv")));
  auto first = json::parse(slurp(dir / "out" / "sub-hankel_m4_n5.json"));
  auto second = json::parse(slurp(dir / "again" / "sub-hankel_m4_n5.json"));
  CHECK(strip_timing(first) == strip_timing(second));

  auto text = run({"report", (dir / "out").string()});
  CHECK(text.code == kExitPass);
  CHECK(text.out.find("sub-hankel_m4_n5") != std::string::npos);
  auto csv = run({"report", (dir / "out").string(), "--format", "csv"});
  CHECK(strip(csv.out) == strip(summary));
  auto js = run({"report", (dir / "out" / "sub-hankel_m4_n6.json").string(), "--format", "json"});
  auto parsed = json::parse(js.out);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["results"][0]["verdict"] == "pass");
}

TEST_CASE("sweep edge cases") {
  auto dir = scratch("edges");
  write(dir / "empty.toml", "checks = [\"heights\"]\n");
  auto r = run({"sweep", (dir / "empty.toml").string(), "--out", (dir / "empty").string()});
  CHECK(r.code == kExitPass);
  CHECK(slurp(dir / "empty" / "summary.csv") == "instance,check,verdict,ms\n");

  write(dir / "invalid.toml",
        "checks = [\"heights\"]\n[[grid]]\nfamily = \"sub-hankel\"\nm = 4\nn = [4]\n");
  auto bad = run({"sweep", (dir / "invalid.toml").string(), "--out", (dir / "invalid").string()});
  CHECK(bad.code == kExitFail);
  CHECK(slurp(dir / "invalid" / "summary.csv").find(",,error,0") != std::string::npos);

  CHECK(run({"sweep", (dir / "missing.toml").string()}).code == kExitUsage);
}
