#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catlab/families.hpp"
#include "catlab/minors.hpp"

namespace catlab {

enum class Verdict { pass, fail, budget_exceeded };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& name);

struct CheckResult {
  std::string check;
  Verdict verdict = Verdict::fail;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> witnesses;
  double ms = 0;

  bool passed() const { return verdict == Verdict::pass; }
};

void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);

struct CheckReport {
  FamilySpec spec;
  std::string field;
  std::vector<CheckResult> results;
};

// Runs body with a restarted budget, timing it. BudgetExceeded becomes the
// budget_exceeded verdict with the reason in data.
CheckResult run_timed(const std::string& name, const Budget& budget,
                      const std::function<void(CheckResult&, const Budget&)>& body);

// ht(I_t(M)) for t = 1..m-1 against m-t+2 and ht(I_{m-1}) = 2.
template <class F>
CheckResult check_height_profile(const PolyMatrix<F>& m, const Budget& budget = {});

struct OneGenericOptions {
  bool certified = true;
  int trials = 200;
  std::uint64_t seed = 1;
};

template <class F>
CheckResult check_one_generic(const PolyMatrix<F>& m, const OneGenericOptions& options = {},
                              const Budget& budget = {});

// Rees ideal versus symmetric-algebra ideal. y_first puts the Y block before
// X in the comparison ring.
template <class F>
CheckResult check_linear_type(const PolyMatrix<F>& m, const Budget& budget = {},
                              bool y_first = false);

template <class F>
CheckResult check_normally_torsionfree(const PolyMatrix<F>& m, int r_max,
                                       const Budget& budget = {});

template <class F>
CheckResult check_normality(const FamilyInstance<F>& instance, const Budget& budget = {});

// Rees ideal of (g_1..g_k) in k[X, Y]: t eliminated from (Y_i - t g_i).
template <class F>
Ideal<F> rees_ideal(const std::vector<Polynomial<F>>& g, const std::string& y_prefix,
                    bool y_first, const Budget& budget);

}  // namespace catlab
