#include "catlab/families.hpp"

#include <random>

#include "catlab/parse.hpp"

namespace catlab {

std::string family_name(Family family) {
  switch (family) {
    case Family::catalecticant:
      return "catalecticant";
    case Family::sub_hankel:
      return "sub-hankel";
    case Family::semi_hankel:
      return "semi-hankel";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string key = name;
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  if (key == "catalecticant") return Family::catalecticant;
  if (key == "sub-hankel") return Family::sub_hankel;
  if (key == "semi-hankel") return Family::semi_hankel;
  throw FamilyError("unknown family '" + name + "' (expected catalecticant, sub-hankel, semi-hankel)");
}

std::string FamilySpec::label() const {
  std::string s = family_name(family) + "_m" + std::to_string(m);
  if (family == Family::catalecticant) return s + "_r" + std::to_string(r);
  s += "_n" + std::to_string(n);
  if (family == Family::semi_hankel && forms.empty() && seed) s += "_s" + std::to_string(*seed);
  return s;
}

namespace {

std::string show(const char* what, int v) { return std::string(what) + "=" + std::to_string(v); }

}  // namespace

FamilySpec validated(FamilySpec spec) {
  const int m = spec.m, n = spec.n;
  switch (spec.family) {
    case Family::catalecticant: {
      if (m < 2) throw FamilyError("catalecticant requires m >= 2, got " + show("m", m));
      if (spec.r < 1 || spec.r > m - 1) {
        throw FamilyError("catalecticant requires 1 <= r <= m-1, got " + show("r", spec.r) + ", " +
                          show("m", m));
      }
      int derived = (m - 1) * (spec.r + 1);
      if (n != 0 && n != derived) {
        throw FamilyError("catalecticant requires n = (m-1)(r+1) = " + std::to_string(derived) +
                          ", got " + show("n", n));
      }
      spec.n = derived;
      if (!spec.forms.empty()) throw FamilyError("linear forms only apply to semi-hankel");
      break;
    }
    case Family::sub_hankel:
      if (m + 1 < 4) throw FamilyError("sub-hankel requires 4 <= m+1, got " + show("m", m));
      if (n == m) {
        throw FamilyError("sub-hankel requires m+1 <= n, got n = m = " + std::to_string(m) +
                          "; the n = m shape is the semi-hankel family");
      }
      if (m + 1 > n) {
        throw FamilyError("sub-hankel requires m+1 <= n, got " + show("m", m) + ", " + show("n", n));
      }
      if (n > 2 * (m - 1)) {
        throw FamilyError("sub-hankel requires n <= 2(m-1) = " + std::to_string(2 * (m - 1)) +
                          ", got " + show("n", n));
      }
      if (!spec.forms.empty()) throw FamilyError("linear forms only apply to semi-hankel");
      break;
    case Family::semi_hankel: {
      if (m < 3) throw FamilyError("semi-hankel requires 3 <= m, got " + show("m", m));
      if (m > n) throw FamilyError("semi-hankel requires m <= n, got " + show("m", m) + ", " + show("n", n));
      if (n > 2 * (m - 1)) {
        throw FamilyError("semi-hankel requires n <= 2(m-1) = " + std::to_string(2 * (m - 1)) +
                          ", got " + show("n", n));
      }
      auto needed = static_cast<std::size_t>(2 * (m - 1) - n);
      if (!spec.forms.empty() && spec.forms.size() != needed) {
        throw FamilyError("semi-hankel with m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                          " needs exactly 2(m-1)-n = " + std::to_string(needed) +
                          " linear forms, got " + std::to_string(spec.forms.size()));
      }
      break;
    }
  }
  return spec;
}

void to_json(nlohmann::json& j, const FamilySpec& spec) {
  j = nlohmann::json{{"family", family_name(spec.family)}, {"m", spec.m}, {"n", spec.n}};
  if (spec.family == Family::catalecticant) j["r"] = spec.r;
  j["forms"] = spec.forms;
  j["seed"] = spec.seed ? nlohmann::json(*spec.seed) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, FamilySpec& spec) {
  spec = FamilySpec{};
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.m = j.value("m", 0);
  spec.n = j.value("n", 0);
  spec.r = j.value("r", 0);
  if (j.contains("forms")) spec.forms = j.at("forms").get<std::vector<std::string>>();
  if (j.contains("seed") && !j.at("seed").is_null()) spec.seed = j.at("seed").get<std::uint64_t>();
}

namespace {

template <class F>
Polynomial<F> x_var(const RingPtr<F>& ring, int k) {
  auto index = ring->index_of("X" + std::to_string(k));
  if (!index) throw FamilyError("ring has no variable X" + std::to_string(k));
  return Polynomial<F>::variable(ring, *index);
}

}  // namespace

template <class F>
PolyMatrix<F> build_leap_matrix(const RingPtr<F>& ring, int rows, int cols, int r) {
  if (rows < 1 || cols < 1 || r < 1) throw FamilyError("leap matrix needs positive sizes and leap");
  PolyMatrix<F> out(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = x_var(ring, i * r + j + 1);
  }
  return out;
}

template <class F>
PolyMatrix<F> build_catalecticant(const RingPtr<F>& ring, int m, int r) {
  FamilySpec spec;
  spec.family = Family::catalecticant;
  spec.m = m;
  spec.r = r;
  validated(spec);
  return build_leap_matrix(ring, m, m - 1, r);
}

template <class F>
PolyMatrix<F> augment_to_hankel(const PolyMatrix<F>& c, int r) {
  const int v = static_cast<int>(c.rows()), w = static_cast<int>(c.cols());
  if (r < 1) throw FamilyError("leap must be positive");
  if (!(c == build_leap_matrix(c.ring(), v, w, r))) {
    throw FamilyError("input is not an r-leap catalecticant with r=" + std::to_string(r));
  }
  std::vector<std::vector<Polynomial<F>>> rows;
  for (int i = 0; i < v; ++i) {
    rows.emplace_back();
    for (int j = 0; j < w; ++j) rows.back().push_back(c(i, j));
  }
  // Rows of the v' x w Hankel matrix that start at X_s with s - 1 not a
  // multiple of r are the missing blocks.
  for (int s = 1; s <= (v - 1) * r + 1; ++s) {
    if ((s - 1) % r == 0) continue;
    rows.emplace_back();
    for (int j = 0; j < w; ++j) rows.back().push_back(x_var(c.ring(), s + j));
  }
  return PolyMatrix<F>(c.ring(), std::move(rows));
}

template <class F>
PolyMatrix<F> build_sub_hankel(const RingPtr<F>& ring, int m, int n) {
  FamilySpec spec;
  spec.family = Family::sub_hankel;
  spec.m = m;
  spec.n = n;
  validated(spec);
  PolyMatrix<F> out(ring, m, m - 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m - 1; ++j) {
      if (i + j - 1 <= n) out(i - 1, j - 1) = x_var(ring, i + j - 1);
    }
  }
  return out;
}

template <class F>
PolyMatrix<F> build_semi_hankel(const RingPtr<F>& ring, int m, int n,
                                const std::vector<Polynomial<F>>& forms) {
  FamilySpec spec;
  spec.family = Family::semi_hankel;
  spec.m = m;
  spec.n = n;
  validated(spec);
  if (forms.size() != static_cast<std::size_t>(2 * (m - 1) - n)) {
    throw FamilyError("semi-hankel needs exactly 2(m-1)-n = " + std::to_string(2 * (m - 1) - n) +
                      " linear forms, got " + std::to_string(forms.size()));
  }
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), ring)) throw FamilyError("linear form from another ring");
    if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) {
      throw FamilyError("semi-hankel entry '" + f.to_string() + "' is not a linear form");
    }
  }
  if (linear_form_rank(forms) != forms.size()) {
    throw FamilyError("semi-hankel linear forms are linearly dependent");
  }
  PolyMatrix<F> out(ring, m, m - 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m - 1; ++j) {
      int k = i + j - 1;
      out(i - 1, j - 1) = k <= n ? x_var(ring, k) : forms[k - n - 1];
    }
  }
  return out;
}

template <class F>
PolyMatrix<F> leading_columns(const PolyMatrix<F>& matrix, std::size_t t) {
  if (t < 1 || t > matrix.cols()) {
    throw std::out_of_range("leading_columns needs 1 <= t <= " + std::to_string(matrix.cols()));
  }
  std::vector<std::size_t> rows(matrix.rows()), cols(t);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < t; ++j) cols[j] = j;
  return matrix.submatrix(rows, cols);
}

template <class F>
std::size_t linear_form_rank(const std::vector<Polynomial<F>>& forms) {
  if (forms.empty()) return 0;
  const auto& ring = forms.front().ring();
  const F& field = ring->field();
  const std::size_t nv = ring->size();
  std::vector<std::vector<typename F::value_type>> a;
  for (const auto& f : forms) {
    std::vector<typename F::value_type> row(nv, field.zero());
    for (const auto& t : f.terms()) {
      if (t.monomial.degree() != 1) throw FamilyError("'" + f.to_string() + "' is not linear");
      for (std::size_t v = 0; v < nv; ++v) {
        if (t.monomial[v] == 1) row[v] = t.coeff;
      }
    }
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && field.is_zero(a[pivot][col])) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    auto inv = field.inv(a[rank][col]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (field.is_zero(a[i][col])) continue;
      auto factor = field.mul(a[i][col], inv);
      for (std::size_t k = col; k < nv; ++k) {
        a[i][k] = field.sub(a[i][k], field.mul(factor, a[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::vector<Polynomial<F>> random_linear_forms(std::size_t count, const RingPtr<F>& ring,
                                               std::uint64_t seed) {
  if (count > ring->size()) {
    throw FamilyError("cannot draw " + std::to_string(count) + " independent linear forms in " +
                      std::to_string(ring->size()) + " variables");
  }
  std::mt19937_64 rng(seed);
  const F& field = ring->field();
  for (;;) {
    std::vector<Polynomial<F>> forms;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t v = 0; v < ring->size(); ++v) {
        terms.push_back({Monomial::variable(v), field.sample(rng)});
      }
      forms.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
    }
    bool linear = std::all_of(forms.begin(), forms.end(), [](const auto& f) { return f.degree() == 1; });
    if (linear && linear_form_rank(forms) == count) return forms;
  }
}

template <class F>
FamilyInstance<F> build_family(const F& field, const FamilySpec& raw) {
  FamilySpec spec = validated(raw);
  auto ring = x_ring(field, spec.n);
  switch (spec.family) {
    case Family::catalecticant:
      return {spec, ring, build_catalecticant(ring, spec.m, spec.r), {}};
    case Family::sub_hankel:
      return {spec, ring, build_sub_hankel(ring, spec.m, spec.n), {}};
    case Family::semi_hankel: {
      auto needed = static_cast<std::size_t>(2 * (spec.m - 1) - spec.n);
      std::vector<Polynomial<F>> forms;
      if (!spec.forms.empty()) {
        for (const auto& text : spec.forms) forms.push_back(parse_polynomial(text, ring));
      } else if (needed > 0) {
        if (!spec.seed) throw FamilyError("semi-hankel needs explicit forms or a seed");
        forms = random_linear_forms(needed, ring, *spec.seed);
      }
      auto matrix = build_semi_hankel(ring, spec.m, spec.n, forms);
      return {spec, ring, std::move(matrix), std::move(forms)};
    }
  }
  throw FamilyError("unknown family");
}

#define CATLAB_INSTANTIATE_FAMILIES(F)                                                          \
  template PolyMatrix<F> build_catalecticant(const RingPtr<F>&, int, int);                      \
  template PolyMatrix<F> build_leap_matrix(const RingPtr<F>&, int, int, int);                   \
  template PolyMatrix<F> augment_to_hankel(const PolyMatrix<F>&, int);                          \
  template PolyMatrix<F> build_sub_hankel(const RingPtr<F>&, int, int);                         \
  template PolyMatrix<F> build_semi_hankel(const RingPtr<F>&, int, int,                         \
                                           const std::vector<Polynomial<F>>&);                  \
  template PolyMatrix<F> leading_columns(const PolyMatrix<F>&, std::size_t);                    \
  template std::vector<Polynomial<F>> random_linear_forms(std::size_t, const RingPtr<F>&,       \
                                                          std::uint64_t);                       \
  template std::size_t linear_form_rank(const std::vector<Polynomial<F>>&);                     \
  template FamilyInstance<F> build_family(const F&, const FamilySpec&);

CATLAB_INSTANTIATE_FAMILIES(PrimeField)
CATLAB_INSTANTIATE_FAMILIES(RationalField)

}  // namespace catlab
