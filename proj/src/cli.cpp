#include "catlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <toml.hpp>

#include "catlab/cremona.hpp"
#include "catlab/parse.hpp"

namespace catlab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"heights", "one-generic", "linear-type", "ntf",
                                              "normality", "cremona", "symbolic"};
  return names;
}

Budget RunConfig::budget() const {
  Budget b;
  b.max_basis = max_basis;
  b.max_degree = max_degree;
  b.wall_clock_seconds = timeout_seconds;
  return b;
}

json config_json(const RunConfig& c) {
  json j = c.spec;
  j["field"] = c.rationals ? "rationals" : "prime";
  if (!c.rationals) j["prime"] = c.prime;
  j["checks"] = c.checks;
  j["rmax"] = c.r_max;
  j["budget"] = {{"max_basis", c.max_basis}, {"max_degree", c.max_degree}, {"timeout", c.timeout_seconds}};
  return j;
}

namespace {

std::vector<int> int_list(const toml::node& node, const std::string& key) {
  std::vector<int> out;
  if (auto v = node.value<int64_t>()) {
    out.push_back(static_cast<int>(*v));
  } else if (auto arr = node.as_array()) {
    for (const auto& x : *arr) {
      auto v = x.value<int64_t>();
      if (!v) throw UsageError("'" + key + "' must list integers");
      out.push_back(static_cast<int>(*v));
    }
  } else {
    throw UsageError("'" + key + "' must be an integer or a list of integers");
  }
  return out;
}

std::vector<std::string> string_list(const toml::node& node, const std::string& key) {
  std::vector<std::string> out;
  auto arr = node.as_array();
  if (!arr) throw UsageError("'" + key + "' must be a list of strings");
  for (const auto& x : *arr) {
    auto v = x.value<std::string>();
    if (!v) throw UsageError("'" + key + "' must be a list of strings");
    out.push_back(*v);
  }
  return out;
}

toml::table parse_toml(const std::string& path) {
  try {
    return toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << path << ": " << e.description() << " at line " << e.source().begin.line;
    throw UsageError(msg.str());
  }
}

// Keys shared by check and sweep configs.
void apply_common(const toml::table& t, RunConfig& c) {
  if (auto v = t["prime"].value<int64_t>()) c.prime = static_cast<std::uint32_t>(*v);
  if (auto v = t["rationals"].value<bool>()) c.rationals = *v;
  if (auto v = t["field"].value<std::string>()) {
    if (*v == "rationals") c.rationals = true;
    else if (*v != "prime") throw UsageError("field must be 'prime' or 'rationals'");
  }
  if (auto n = t.get("checks")) c.checks = string_list(*n, "checks");
  if (auto v = t["rmax"].value<int64_t>()) c.r_max = static_cast<int>(*v);
  if (auto v = t["out"].value<std::string>()) c.out = *v;
  if (auto v = t["format"].value<std::string>()) c.format = *v;
  if (auto b = t["budget"].as_table()) {
    if (auto v = (*b)["max_basis"].value<int64_t>()) c.max_basis = static_cast<std::size_t>(*v);
    if (auto v = (*b)["max_degree"].value<int64_t>()) c.max_degree = static_cast<int>(*v);
    if (auto v = (*b)["timeout"].value<double>()) c.timeout_seconds = *v;
  }
}

void validate_checks(const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
      std::string all;
      for (const auto& n : check_names()) all += (all.empty() ? "" : ", ") + n;
      throw UsageError("unknown check '" + c + "' (expected one of " + all + ")");
    }
  }
}

void validate_config(const RunConfig& c) {
  validate_checks(c.checks);
  if (c.r_max < 2) throw UsageError("rmax must be at least 2");
  if (c.format != "text" && c.format != "json") throw UsageError("format must be text or json");
  if (!c.rationals && !is_prime(c.prime)) throw UsageError(std::to_string(c.prime) + " is not prime");
}

template <class F>
json instance_json(const FamilyInstance<F>& inst) {
  json j = inst.spec;
  j["label"] = inst.spec.label();
  j["matrix"] = inst.matrix.to_strings();
  std::vector<std::string> forms;
  for (const auto& f : inst.forms) forms.push_back(f.to_string());
  j["forms"] = forms;
  return j;
}

CheckResult not_applicable(const std::string& name, const std::string& why) {
  CheckResult r;
  r.check = name;
  r.verdict = Verdict::fail;
  r.data = {{"error", "not applicable: " + why}};
  return r;
}

template <class F>
CheckResult run_one(const std::string& name, const FamilyInstance<F>& inst, const RunConfig& c) {
  const Budget budget = c.budget();
  const auto& m = inst.matrix;
  const bool square_map = inst.spec.n == inst.spec.m;
  try {
    if (name == "heights") return check_height_profile(m, budget);
    if (name == "one-generic") {
      OneGenericOptions options;
      options.seed = inst.spec.seed.value_or(1);
      return check_one_generic(m, options, budget);
    }
    if (name == "linear-type") return check_linear_type(m, budget);
    if (name == "ntf") return check_normally_torsionfree(m, c.r_max, budget);
    if (name == "normality") return check_normality(inst, budget);
    if (name == "cremona") {
      if (!square_map) return not_applicable(name, "the minors define a self-map only when n = m");
      return check_cremona(signed_maximal_minors(m), budget);
    }
    if (name == "symbolic") {
      if (!square_map) return not_applicable(name, "requires n = m");
      return check_symbolic_generation(m, budget);
    }
  } catch (const std::invalid_argument& e) {
    return not_applicable(name, e.what());
  }
  throw UsageError("unknown check '" + name + "'");
}

template <class F>
RunOutcome run_with_field(const RunConfig& c, const F& field) {
  auto inst = build_family(field, c.spec);
  auto checks = c.checks.empty() ? default_checks(inst.spec) : c.checks;
  RunOutcome out;
  out.report["version"] = kVersion;
  out.report["config"] = config_json(c);
  out.report["field"] = field.name();
  out.report["instance"] = instance_json(inst);
  out.report["results"] = json::array();
  std::vector<Verdict> verdicts;
  for (const auto& name : checks) {
    auto r = run_one(name, inst, c);
    verdicts.push_back(r.verdict);
    out.report["results"].push_back(r);
  }
  out.exit_code = exit_code_for(verdicts);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << ms;
  return s.str();
}

std::vector<std::uint64_t> seed_list(const toml::table& t) {
  std::vector<std::uint64_t> seeds;
  if (auto n = t.get("seeds")) {
    for (int s : int_list(*n, "seeds")) seeds.push_back(static_cast<std::uint64_t>(s));
  } else if (auto s = t["seed"].value<int64_t>()) {
    seeds.push_back(static_cast<std::uint64_t>(*s));
  }
  return seeds;
}

std::optional<std::vector<int>> int_list_or_all(const toml::table& t, const std::string& key) {
  auto n = t.get(key);
  if (!n) return std::nullopt;
  if (auto s = n->value<std::string>()) {
    if (*s == "all") return std::nullopt;
    throw UsageError("'" + key + "' must be a list of integers or \"all\"");
  }
  return int_list(*n, key);
}

FamilySpec make_spec(Family f, int m, int n, int r, std::optional<std::uint64_t> seed = {}) {
  FamilySpec s;
  s.family = f;
  s.m = m;
  s.n = n;
  s.r = r;
  s.seed = seed;
  return s;
}

std::string error_label(Family f, int m, int n, int r) {
  std::string s = family_name(f) + "_m" + std::to_string(m);
  if (n) s += "_n" + std::to_string(n);
  if (r) s += "_r" + std::to_string(r);
  return s;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  auto t = parse_toml(path);
  RunConfig c;
  if (auto v = t["family"].value<std::string>()) c.spec.family = parse_family(*v);
  else throw UsageError(path + ": missing 'family'");
  if (auto v = t["m"].value<int64_t>()) c.spec.m = static_cast<int>(*v);
  if (auto v = t["n"].value<int64_t>()) c.spec.n = static_cast<int>(*v);
  if (auto v = t["r"].value<int64_t>()) c.spec.r = static_cast<int>(*v);
  if (auto v = t["seed"].value<int64_t>()) c.spec.seed = static_cast<std::uint64_t>(*v);
  if (auto n = t.get("forms")) c.spec.forms = string_list(*n, "forms");
  apply_common(t, c);
  return c;
}

std::vector<std::string> default_checks(const FamilySpec& spec) {
  std::vector<std::string> out{"heights", "one-generic", "linear-type", "ntf", "normality"};
  if (spec.family == Family::semi_hankel && spec.n == spec.m) {
    out.push_back("cremona");
    out.push_back("symbolic");
  }
  return out;
}

int exit_code_for(const std::vector<Verdict>& verdicts) {
  bool fail = false, budget = false;
  for (auto v : verdicts) {
    fail = fail || v == Verdict::fail;
    budget = budget || v == Verdict::budget_exceeded;
  }
  return fail ? kExitFail : budget ? kExitBudget : kExitPass;
}

RunOutcome run_check(const RunConfig& config) {
  validate_config(config);
  if (config.rationals) return run_with_field(config, RationalField{});
  return run_with_field(config, PrimeField(config.prime));
}

std::vector<GridEntry> expand_grid_entry(Family family, const std::vector<int>& ms,
                                         const std::optional<std::vector<int>>& ns,
                                         const std::optional<std::vector<int>>& rs,
                                         const std::vector<std::uint64_t>& seeds) {
  std::vector<GridEntry> out;
  auto add = [&](FamilySpec spec) {
    GridEntry e;
    try {
      spec = validated(spec);
      e.label = spec.label();
      e.spec = spec;
    } catch (const FamilyError& err) {
      e.label = error_label(spec.family, spec.m, spec.n, spec.r);
      e.error = err.what();
    }
    out.push_back(std::move(e));
  };
  for (int m : ms) {
    switch (family) {
      case Family::catalecticant: {
        std::vector<int> r_values;
        if (rs) r_values = *rs;
        else for (int r = 1; r <= m - 1; ++r) r_values.push_back(r);
        for (int r : r_values) add(make_spec(family, m, 0, r));
        break;
      }
      case Family::sub_hankel:
      case Family::semi_hankel: {
        std::vector<int> n_values;
        if (ns) {
          n_values = *ns;
        } else {
          int lo = family == Family::sub_hankel ? m + 1 : m;
          for (int n = lo; n <= 2 * (m - 1); ++n) n_values.push_back(n);
        }
        for (int n : n_values) {
          bool needs_forms = family == Family::semi_hankel && 2 * (m - 1) - n > 0;
          if (!needs_forms) {
            add(make_spec(family, m, n, 0));
            continue;
          }
          if (seeds.empty()) {
            GridEntry e;
            e.label = error_label(family, m, n, 0);
            e.error = "semi-hankel needs seeds for its linear forms";
            out.push_back(e);
          }
          for (auto s : seeds) {
            add(make_spec(family, m, n, 0, s));
          }
        }
        break;
      }
    }
  }
  return out;
}

SweepConfig load_sweep(const std::string& path) {
  auto t = parse_toml(path);
  SweepConfig sweep;
  apply_common(t, sweep.base);
  validate_config(sweep.base);
  if (auto v = t["threads"].value<int64_t>()) sweep.threads = static_cast<std::size_t>(std::max<int64_t>(1, *v));
  if (const char* env = std::getenv("CATLAB_THREADS")) {
    try {
      sweep.threads = static_cast<std::size_t>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      throw UsageError("CATLAB_THREADS must be a positive integer");
    }
  }
  auto grid = t["grid"];
  if (!grid) return sweep;
  auto arr = grid.as_array();
  if (!arr) throw UsageError("'grid' must be an array of tables ([[grid]])");
  for (const auto& node : *arr) {
    auto entry = node.as_table();
    if (!entry) throw UsageError("'grid' must be an array of tables ([[grid]])");
    auto fam = (*entry)["family"].value<std::string>();
    if (!fam) throw UsageError("grid entry without 'family'");
    auto m_node = entry->get("m");
    if (!m_node) throw UsageError("grid entry without 'm'");
    auto family = parse_family(*fam);
    auto expanded = expand_grid_entry(family, int_list(*m_node, "m"), int_list_or_all(*entry, "n"),
                                      int_list_or_all(*entry, "r"), seed_list(*entry));
    sweep.entries.insert(sweep.entries.end(), expanded.begin(), expanded.end());
  }
  return sweep;
}

int run_sweep(const SweepConfig& sweep, const std::string& out_dir, std::ostream& log) {
  fs::create_directories(out_dir);
  const std::size_t count = sweep.entries.size();
  std::vector<json> reports(count);
  std::vector<int> codes(count, kExitPass);
  std::atomic<std::size_t> next{0};
  std::mutex io;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const auto& entry = sweep.entries[i];
      json report;
      int code = kExitFail;
      if (entry.spec) {
        RunConfig c = sweep.base;
        c.spec = *entry.spec;
        try {
          auto outcome = run_check(c);
          report = std::move(outcome.report);
          code = outcome.exit_code;
        } catch (const std::exception& e) {
          report = {{"version", kVersion}, {"config", config_json(c)}, {"error", e.what()},
                    {"instance", {{"label", entry.label}}}, {"results", json::array()}};
        }
      } else {
        report = {{"version", kVersion}, {"error", entry.error},
                  {"instance", {{"label", entry.label}}}, {"results", json::array()}};
      }
      std::lock_guard lock(io);
      std::ofstream(fs::path(out_dir) / (entry.label + ".json")) << report.dump(2) << "\n";
      log << entry.label << ": " << (code == kExitPass ? "pass" : code == kExitBudget ? "budget_exceeded" : "fail")
          << "\n";
      reports[i] = std::move(report);
      codes[i] = code;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < std::min(sweep.threads, std::max<std::size_t>(count, 1)); ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream csv(fs::path(out_dir) / "summary.csv");
  csv << csv_header();
  std::vector<Verdict> verdicts;
  for (std::size_t i = 0; i < count; ++i) {
    csv << csv_rows(reports[i]);
    if (codes[i] == kExitFail) verdicts.push_back(Verdict::fail);
    if (codes[i] == kExitBudget) verdicts.push_back(Verdict::budget_exceeded);
  }
  return exit_code_for(verdicts);
}

std::string csv_header() { return "instance,check,verdict,ms\n"; }

std::string csv_rows(const json& report) {
  std::string label = report.at("instance").value("label", "");
  std::string out;
  if (report.contains("error")) return csv_field(label) + ",,error,0\n";
  for (const auto& r : report.at("results")) {
    out += csv_field(label) + "," + r.at("check").get<std::string>() + "," +
           r.at("verdict").get<std::string>() + "," + format_ms(r.value("ms", 0.0)) + "\n";
  }
  return out;
}

namespace {

std::string shorten(const std::string& s) {
  constexpr std::size_t limit = 96;
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ... (" + std::to_string(s.size()) + " chars)";
}

json shortened(const json& j) {
  if (j.is_string()) return shorten(j.get<std::string>());
  if (!j.is_structured()) return j;
  json out = j;
  for (auto& [key, value] : out.items()) value = shortened(value);
  return out;
}

}  // namespace

std::string text_report(const json& report) {
  std::ostringstream s;
  const auto& inst = report.at("instance");
  s << inst.value("label", "?");
  if (report.contains("field")) s << " over " << report["field"].get<std::string>();
  s << "\n";
  if (report.contains("error")) {
    s << "  error: " << report["error"].get<std::string>() << "\n";
    return s.str();
  }
  const auto& forms = inst.value("forms", std::vector<std::string>{});
  for (std::size_t i = 0; i < forms.size(); ++i) s << "  L" << i + 1 << " = " << forms[i] << "\n";
  for (const auto& r : report.at("results")) {
    std::string name = r.at("check").get<std::string>();
    std::string verdict = r.at("verdict").get<std::string>();
    s << "  " << name << std::string(name.size() < 13 ? 13 - name.size() : 1, ' ') << verdict
      << std::string(verdict.size() < 17 ? 17 - verdict.size() : 1, ' ') << format_ms(r.value("ms", 0.0))
      << " ms\n";
    for (const auto& w : r.value("witnesses", std::vector<std::string>{})) s << "      witness: " << shorten(w) << "\n";
    if (r.contains("data") && !r["data"].empty()) {
      for (const auto& [key, value] : r["data"].items()) {
        s << "      " << key << ": " << (value.is_string() ? shorten(value.get<std::string>()) : shortened(value).dump()) << "\n";
      }
    }
  }
  return s.str();
}

namespace {

struct FamilyFlags {
  std::string family;
  int m = 0, n = 0, r = 0;
  std::vector<std::string> forms;
  std::uint64_t seed = 0;
  CLI::Option* family_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* forms_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void add_to(CLI::App* app) {
    family_opt = app->add_option("--family", family, "catalecticant | sub-hankel | semi-hankel");
    m_opt = app->add_option("-m", m, "number of rows");
    n_opt = app->add_option("-n", n, "number of variables");
    r_opt = app->add_option("-r", r, "catalecticant leap");
    forms_opt = app->add_option("--forms", forms, "semi-hankel linear forms, ';' separated")->delimiter(';');
    seed_opt = app->add_option("--seed", seed, "seed for random linear forms");
  }

  void apply(FamilySpec& spec) const {
    if (family_opt->count()) spec.family = parse_family(family);
    if (m_opt->count()) spec.m = m;
    if (n_opt->count()) spec.n = n;
    if (r_opt->count()) spec.r = r;
    if (forms_opt->count()) spec.forms = forms;
    if (seed_opt->count()) spec.seed = seed;
  }

  bool given() const { return family_opt->count() > 0; }
};

struct FieldFlags {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  bool rationals = false;
  CLI::Option* prime_opt = nullptr;
  CLI::Option* rationals_opt = nullptr;

  void add_to(CLI::App* app) {
    prime_opt = app->add_option("--prime", prime, "prime field characteristic (default 32003)");
    rationals_opt = app->add_flag("--rationals", rationals, "work over the rationals");
  }
  void apply(RunConfig& c) const {
    if (prime_opt->count()) c.prime = prime;
    if (rationals_opt->count()) c.rationals = rationals;
  }
};

template <class F>
void print_build(const FamilyInstance<F>& inst, const std::string& format, const std::string& field,
                 std::ostream& out) {
  if (format == "json") {
    out << json{{"instance", instance_json(inst)}, {"field", field}, {"version", kVersion}}.dump(2) << "\n";
    return;
  }
  out << inst.spec.label() << " over " << field << "\n" << inst.matrix.to_string();
  for (std::size_t i = 0; i < inst.forms.size(); ++i) {
    out << "L" << i + 1 << " = " << inst.forms[i].to_string() << "\n";
  }
}

std::vector<json> read_reports(const std::vector<std::string>& paths) {
  std::vector<json> out;
  auto read = [&](const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw UsageError("cannot read " + p.string());
    try {
      out.push_back(json::parse(in));
    } catch (const json::parse_error& e) {
      throw UsageError(p.string() + ": " + e.what());
    }
  };
  for (const auto& path : paths) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(path)) {
        if (e.path().extension() == ".json") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) read(f);
    } else {
      read(path);
    }
  }
  return out;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal ideals of Hankel-type matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* build = app.add_subcommand("build", "print a family matrix");
  FamilyFlags build_family_flags;
  FieldFlags build_field;
  std::string build_format = "text";
  build_family_flags.add_to(build);
  build_field.add_to(build);
  build->add_option("--format", build_format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "run checks on one instance");
  FamilyFlags check_family_flags;
  FieldFlags check_field;
  std::string config_path, out_path, format = "text";
  std::vector<std::string> checks;
  int rmax = 2, max_degree = 0;
  std::size_t max_basis = 0;
  double timeout = 0;
  check_family_flags.add_to(check);
  check_field.add_to(check);
  auto* config_opt = check->add_option("--config", config_path, "TOML run configuration");
  auto* checks_opt = check->add_option("--checks", checks, "comma separated check names")->delimiter(',');
  auto* rmax_opt = check->add_option("--rmax", rmax, "largest power for ntf");
  auto* degree_opt = check->add_option("--max-degree", max_degree, "basis degree cap");
  auto* basis_opt = check->add_option("--max-basis", max_basis, "basis size cap");
  auto* timeout_opt = check->add_option("--timeout", timeout, "seconds per check");
  auto* out_opt = check->add_option("--out", out_path, "write the JSON report here");
  auto* format_opt = check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "run a TOML parameter grid");
  std::string grid_path, sweep_out = "sweep_out";
  sweep->add_option("grid", grid_path, "TOML grid file")->required();
  sweep->add_option("--out", sweep_out, "output directory");

  auto* report = app.add_subcommand("report", "summarize JSON reports");
  std::vector<std::string> report_paths;
  std::string report_format = "text";
  report->add_option("files", report_paths, "report files or sweep directories")->required();
  report->add_option("--format", report_format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) {
      if (!build_family_flags.given()) throw UsageError("build needs --family");
      FamilySpec spec;
      build_family_flags.apply(spec);
      RunConfig c;
      build_field.apply(c);
      if (c.rationals) {
        print_build(build_family(RationalField{}, spec), build_format, RationalField{}.name(), out);
      } else {
        if (!is_prime(c.prime)) throw UsageError(std::to_string(c.prime) + " is not prime");
        PrimeField f(c.prime);
        print_build(build_family(f, spec), build_format, f.name(), out);
      }
      return kExitPass;
    }
    if (*check) {
      RunConfig c;
      if (config_opt->count()) c = load_config(config_path);
      else if (!check_family_flags.given()) throw UsageError("check needs --family or --config");
      check_family_flags.apply(c.spec);
      check_field.apply(c);
      if (checks_opt->count()) c.checks = checks;
      if (rmax_opt->count()) c.r_max = rmax;
      if (degree_opt->count()) c.max_degree = max_degree;
      if (basis_opt->count()) c.max_basis = max_basis;
      if (timeout_opt->count()) c.timeout_seconds = timeout;
      if (out_opt->count()) c.out = out_path;
      if (format_opt->count()) c.format = format;
      auto outcome = run_check(c);
      if (!c.out.empty()) {
        std::ofstream file(c.out);
        if (!file) throw std::runtime_error("cannot write " + c.out);
        file << outcome.report.dump(2) << "\n";
      }
      if (c.format == "json") out << outcome.report.dump(2) << "\n";
      else out << text_report(outcome.report);
      return outcome.exit_code;
    }
    if (*sweep) {
      auto s = load_sweep(grid_path);
      return run_sweep(s, sweep_out, out);
    }
    if (*report) {
      auto reports = read_reports(report_paths);
      if (report_format == "json") {
        out << json(reports).dump(2) << "\n";
      } else if (report_format == "csv") {
        out << csv_header();
        for (const auto& r : reports) out << csv_rows(r);
      } else {
        for (const auto& r : reports) out << text_report(r);
      }
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FamilyError& e) {
    err << "invalid family: " << e.what() << "\n";
    return kExitUsage;
  } catch (const catlab::ParseError& e) {
    err << "cannot parse polynomial: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace catlab::cli
