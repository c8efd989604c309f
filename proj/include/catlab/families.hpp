#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "catlab/matrix.hpp"

namespace catlab {

enum class Family { catalecticant, sub_hankel, semi_hankel };

std::string family_name(Family family);
// Accepts "sub-hankel" and "sub_hankel" spellings.
Family parse_family(const std::string& name);

/// Parameters of one family instance. `forms` are semi-Hankel linear forms in
/// the polynomial grammar; when empty and a seed is set they are drawn at
/// random.
struct FamilySpec {
  Family family = Family::catalecticant;
  int m = 0;
  int n = 0;  // derived as (m-1)(r+1) for catalecticants
  int r = 0;  // catalecticant leap only
  std::vector<std::string> forms;
  std::optional<std::uint64_t> seed;

  // File-name friendly identifier, e.g. "sub-hankel_m4_n5".
  std::string label() const;
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fills in the derived n for catalecticants and checks the family's
// inequalities, naming the violated one.
FamilySpec validated(FamilySpec spec);

void to_json(nlohmann::json& j, const FamilySpec& spec);
void from_json(const nlohmann::json& j, FamilySpec& spec);

template <class F>
struct FamilyInstance {
  FamilySpec spec;
  RingPtr<F> ring;
  PolyMatrix<F> matrix;
  std::vector<Polynomial<F>> forms;
};

template <class F>
RingPtr<F> x_ring(const F& field, int n) {
  return make_ring(field, indexed_names("X", static_cast<std::size_t>(n)));
}

// entry(i,j) = X_{(i-1)r+j}; m x (m-1) in k[X_1..X_{(m-1)(r+1)}].
template <class F>
PolyMatrix<F> build_catalecticant(const RingPtr<F>& ring, int m, int r);
// v x w r-leap catalecticant, the general shape used in augmentation.
template <class F>
PolyMatrix<F> build_leap_matrix(const RingPtr<F>& ring, int rows, int cols, int r);
// Appends the missing Hankel rows; the original rows stay on top.
template <class F>
PolyMatrix<F> augment_to_hankel(const PolyMatrix<F>& c, int r);
// entry(i,j) = X_{i+j-1} when i+j-1 <= n, else 0.
template <class F>
PolyMatrix<F> build_sub_hankel(const RingPtr<F>& ring, int m, int n);
// entry(i,j) = X_{i+j-1} when i+j-1 <= n, else forms[i+j-2-n].
template <class F>
PolyMatrix<F> build_semi_hankel(const RingPtr<F>& ring, int m, int n,
                                const std::vector<Polynomial<F>>& forms);
// The first t columns.
template <class F>
PolyMatrix<F> leading_columns(const PolyMatrix<F>& matrix, std::size_t t);

// Deterministic in seed; redrawn until linearly independent.
template <class F>
std::vector<Polynomial<F>> random_linear_forms(std::size_t count, const RingPtr<F>& ring,
                                               std::uint64_t seed);
// Rank of the coefficient matrix of linear forms.
template <class F>
std::size_t linear_form_rank(const std::vector<Polynomial<F>>& forms);

template <class F>
FamilyInstance<F> build_family(const F& field, const FamilySpec& spec);

}  // namespace catlab
