#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grasslab/subspace.hpp"

namespace grasslab {

/// An ordered pair (first, second) of complementary subspaces: first has
/// dimension k, second has dimension n - k, and together they span V.
struct CompPair {
  Subspace first;
  Subspace second;

  /// Throws BadInput unless the two subspaces are complementary.
  static CompPair make(Subspace first, Subspace second);

  std::size_t k() const noexcept { return first.dim(); }
  std::size_t ambient() const noexcept { return first.ambient(); }
  const Field& field() const noexcept { return first.field(); }
  std::size_t hash() const noexcept { return first.hash() * 1000003u ^ second.hash(); }

  friend bool operator==(const CompPair&, const CompPair&) = default;
  friend std::strong_ordering operator<=>(const CompPair& a, const CompPair& b) noexcept {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

bool is_valid_pair(const Subspace& first, const Subspace& second);

/// (second, first).
CompPair opposite(const CompPair& a);

/// Compact textual key, stable across runs: each basis row as base-p digits,
/// rows joined by '.', components by '|'.
std::string pair_key(const CompPair& a);
std::string subspace_key(const Subspace& s);
/// Key of the lesser of a and opposite(a); identifies the opposite class.
std::string class_key(const CompPair& a);

/// Number of (n - k)-dimensional complements of a k-dimensional subspace.
std::uint64_t count_complements(const Subspace& s);
std::uint64_t pair_space_size(std::size_t n, std::size_t k, const Field& field);

/// Every complement of s, parametrized by linear maps from a coordinate
/// complement into s.
void for_each_complement(const Subspace& s, const std::function<void(const Subspace&)>& fn);

/// Every element of the complementary-pair space, first components in
/// Grassmannian order. Throws BudgetExceeded before starting when too large.
void for_each_pair(const Field& field, std::size_t n, std::size_t k, const std::function<void(const CompPair&)>& fn,
                   std::uint64_t budget = kDefaultBudget);
std::vector<CompPair> enumerate_pairs(const Field& field, std::size_t n, std::size_t k,
                                      std::uint64_t budget = kDefaultBudget);

enum class Incidence { None, Plus, Minus };
enum class Sign { Plus, Minus, Both };

/// Plus when first/first and second/second are incident, Minus when the
/// components are incident crosswise. Plus wins if both hold (which needs a
/// zero component).
Incidence incidence(const CompPair& alpha, const CompPair& gamma);
bool matches(Incidence inc, Sign sign);

/// The elements of one layer incident to a fixed pair. Membership is a
/// predicate; enumeration walks only the candidate components.
class IncidentSet {
 public:
  IncidentSet(CompPair center, std::size_t k, Sign sign);

  const CompPair& center() const noexcept { return center_; }
  std::size_t layer() const noexcept { return k_; }
  Sign sign() const noexcept { return sign_; }

  bool contains(const CompPair& x) const;
  void for_each(const std::function<void(const CompPair&)>& fn, std::uint64_t budget = kDefaultBudget) const;
  std::vector<CompPair> materialize(std::uint64_t budget = kDefaultBudget) const;

 private:
  void for_each_signed(bool plus, const std::function<void(const CompPair&)>& fn, std::uint64_t budget) const;

  CompPair center_;
  std::size_t k_;
  Sign sign_;
};

}  // namespace grasslab

template <>
struct std::hash<grasslab::CompPair> {
  std::size_t operator()(const grasslab::CompPair& a) const noexcept { return a.hash(); }
};
