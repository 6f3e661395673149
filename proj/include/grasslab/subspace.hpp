#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grasslab/matrix.hpp"

namespace grasslab {

/// Largest number of objects any enumeration may materialize by default.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 21;

/// A subspace of GF(p)^n held by its reduced row echelon basis. Two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  /// Row space of `rows`; rows.cols() is the ambient dimension.
  static Subspace span(Matrix rows);
  static Subspace zero(Field field, std::size_t n);
  static Subspace whole(Field field, std::size_t n);
  /// span(e_i : i in indices), indices zero-based.
  static Subspace coordinate(Field field, std::size_t n, std::span<const std::size_t> indices);
  static Subspace line(Field field, std::span<const Elem> vector);
  /// `basis` must already be RREF with no zero rows.
  static Subspace from_canonical(Matrix basis, std::vector<std::size_t> pivots);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }

  /// other is a subspace of *this.
  bool contains(const Subspace& other) const;
  bool contains_vector(std::span<const Elem> v) const;

  std::size_t hash() const noexcept { return basis_.hash(); }

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
  /// Pivot set first, then the entry string of the basis.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws AmbientMismatch unless both live in the same GF(p)^n.
void require_same_ambient(const Subspace& a, const Subspace& b);

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);
/// Vectors x with x . s = 0 for every s in the subspace.
Subspace annihilator(const Subspace& s);
/// Column-vector image {M x : x in s}.
Subspace image(const Matrix& m, const Subspace& s);
/// One subspace contains the other.
bool incident(const Subspace& a, const Subspace& b);
/// dim a + dim b = n and a + b = V.
bool complementary(const Subspace& a, const Subspace& b);
/// dim a - dim(a ∩ b); throws DimMismatch unless dimensions agree.
std::size_t distance(const Subspace& a, const Subspace& b);

std::uint64_t grassmannian_size(std::size_t n, std::size_t k, const Field& field);

/// Every k-dimensional subspace of GF(p)^n in increasing order. Throws
/// BudgetExceeded before doing any work when the count exceeds `budget`.
void for_each_subspace(const Field& field, std::size_t n, std::size_t k, const std::function<void(const Subspace&)>& fn,
                       std::uint64_t budget = kDefaultBudget);
std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t n, std::size_t k,
                                             std::uint64_t budget = kDefaultBudget);
/// All d-dimensional X with lower ⊆ X ⊆ upper.
void for_each_between(const Subspace& lower, const Subspace& upper, std::size_t d,
                      const std::function<void(const Subspace&)>& fn, std::uint64_t budget = kDefaultBudget);

}  // namespace grasslab

template <>
struct std::hash<grasslab::Subspace> {
  std::size_t operator()(const grasslab::Subspace& s) const noexcept { return s.hash(); }
};
