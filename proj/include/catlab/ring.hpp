#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catlab/field.hpp"
#include "catlab/monomial.hpp"

namespace catlab {

/// k[x_1, ..., x_n] with named variables. Immutable; shared by pointer.
template <class F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> names);

  const F& field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // A name of the form base, base1, base2, ... not used in this ring.
  std::string fresh_name(const std::string& base) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names));
}

// {prefix}1 .. {prefix}count
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

// --- implementation ---

template <class F>
PolyRing<F>::PolyRing(F field, std::vector<std::string> names)
    : field_(std::move(field)), names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("ring has " + std::to_string(names_.size()) +
                                " variables; at most " + std::to_string(kMaxVariables) +
                                " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }
  }
}

template <class F>
std::optional<std::size_t> PolyRing<F>::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class F>
std::string PolyRing<F>::fresh_name(const std::string& base) const {
  if (!index_.contains(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!index_.contains(candidate)) return candidate;
  }
}

}  // namespace catlab
