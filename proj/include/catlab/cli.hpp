#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catlab/checks.hpp"

namespace catlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kVersion = "catlab 1.0.0";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// heights, one-generic, linear-type, ntf, normality, cremona, symbolic
const std::vector<std::string>& check_names();

struct RunConfig {
  FamilySpec spec;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  bool rationals = false;
  std::vector<std::string> checks;  // empty: every check that applies
  int r_max = 2;
  std::size_t max_basis = 0;
  int max_degree = 0;
  double timeout_seconds = 0;
  std::string out;
  std::string format = "text";

  Budget budget() const;
};

nlohmann::json config_json(const RunConfig& config);

// TOML file mirroring RunConfig; keys as in config_json.
RunConfig load_config(const std::string& path);

// Checks that apply to a spec when none are requested.
std::vector<std::string> default_checks(const FamilySpec& spec);

struct RunOutcome {
  nlohmann::json report;
  int exit_code = kExitPass;
};

RunOutcome run_check(const RunConfig& config);

// pass < budget < fail in precedence.
int exit_code_for(const std::vector<Verdict>& verdicts);

struct GridEntry {
  std::optional<FamilySpec> spec;
  std::string label;
  std::string error;
};

struct SweepConfig {
  RunConfig base;
  std::vector<GridEntry> entries;
  std::size_t threads = 1;
};

SweepConfig load_sweep(const std::string& path);
std::vector<GridEntry> expand_grid_entry(Family family, const std::vector<int>& ms,
                                         const std::optional<std::vector<int>>& ns,
                                         const std::optional<std::vector<int>>& rs,
                                         const std::vector<std::uint64_t>& seeds);

// Writes <out_dir>/<label>.json per instance and <out_dir>/summary.csv.
int run_sweep(const SweepConfig& sweep, const std::string& out_dir, std::ostream& log);

std::string text_report(const nlohmann::json& report);
std::string csv_header();
std::string csv_rows(const nlohmann::json& report);

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace catlab::cli
