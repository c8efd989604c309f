#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catlab/checks.hpp"

namespace catlab {

// Graph ideal of X -> (g_1 : ... : g_k) in k[X, Y]; forms of one degree.
template <class F>
Ideal<F> graph_ideal(const std::vector<Polynomial<F>>& g, const Budget& budget = {});

template <class F>
struct InverseMap {
  bool birational = false;
  std::string note;
  RingPtr<F> y_ring;
  std::vector<Polynomial<F>> forms;  // in y_ring
  // Factors divided out of the signed minors of rho.
  std::vector<std::string> removed_factors;
};

// Inverse from the X-degree-1 part of the graph ideal.
template <class F>
InverseMap<F> inverse_map(const std::vector<Polynomial<F>>& g, const Budget& budget = {});

// D with inverse_i(g) = X_i D for every i; throws std::domain_error if no
// common D exists.
template <class F>
Polynomial<F> source_inversion_factor(const std::vector<Polynomial<F>>& g,
                                      const std::vector<Polynomial<F>>& inverse);

// E with g_i(inverse) = Y_i E for every i.
template <class F>
Polynomial<F> target_inversion_factor(const std::vector<Polynomial<F>>& g,
                                      const std::vector<Polynomial<F>>& inverse);

template <class F>
struct CremonaData {
  std::vector<Polynomial<F>> forms;
  std::vector<Polynomial<F>> inverse;
  Polynomial<F> source_factor;
  Polynomial<F> target_factor;
  Polynomial<F> jacobian_det;
  int degree = 0;
  int inverse_degree = 0;
  // jacobian_det = ratio * source_factor, when proportional.
  std::optional<typename F::value_type> ratio;
};

template <class F>
nlohmann::json cremona_json(const CremonaData<F>& data);

// Full pipeline. Throws std::domain_error when the map is not birational by
// the X-degree-1 criterion or the inversion factors are not common. The
// inverse is scaled so that D is monic.
template <class F>
CremonaData<F> cremona_data(const std::vector<Polynomial<F>>& g, const Budget& budget = {});

// det(Theta) = c D with c nonzero.
template <class F>
CheckResult check_inversion_factor_jacobian(const std::vector<Polynomial<F>>& g,
                                            const Budget& budget = {});

// Inverse, both inversion factors, degree bookkeeping and det(Theta) = c D.
template <class F>
CheckResult check_cremona(const std::vector<Polynomial<F>>& g, const Budget& budget = {});

// Symbolic powers below n-1 and the extra generator D at n-1 (n = m).
template <class F>
CheckResult check_symbolic_generation(const PolyMatrix<F>& m, const Budget& budget = {});

}  // namespace catlab
