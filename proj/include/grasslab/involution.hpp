#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grasslab/comp_pair.hpp"

namespace grasslab {

/// A linear involution u (u² = I) over a field of odd characteristic,
/// together with its +1 and -1 eigenspaces.
class Involution {
 public:
  /// Throws CharTwo for p = 2 and BadInput unless u² = I.
  explicit Involution(Matrix u);

  const Matrix& matrix() const noexcept { return u_; }
  const Subspace& plus() const noexcept { return plus_; }
  const Subspace& minus() const noexcept { return minus_; }
  std::size_t k() const noexcept { return plus_.dim(); }

  friend bool operator==(const Involution& a, const Involution& b) noexcept { return a.u_ == b.u_; }

 private:
  Matrix u_;
  Subspace plus_;
  Subspace minus_;
};

/// The involution acting as +1 on pair.first and -1 on pair.second.
Involution pair_to_involution(const CompPair& pair);
CompPair involution_to_pair(const Involution& u);

bool commutes(const Involution& u, const Involution& v);

/// L u L⁻¹. Throws Singular unless L is invertible.
Involution conjugate(const Involution& u, const Matrix& l);
/// Transport of u through the duality x ↦ (D x)ᵀ: the result has +1 space
/// ann(D·minus(u)) and -1 space ann(D·plus(u)), matching the duality-induced
/// map on pairs. Throws Singular unless D is invertible.
Involution dual_conjugate(const Involution& u, const Matrix& d);
/// -u, whose eigenspaces are those of u swapped.
Involution negate(const Involution& u);

/// Vertices are the pairs of one layer; an edge joins two pairs whose
/// involutions commute.
struct CommutativityGraph {
  std::vector<CompPair> vertices;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists

  std::size_t edge_count() const;
};

/// Throws CharTwo for p = 2 and BudgetExceeded when the layer is too large.
CommutativityGraph build_commutativity_graph(const Field& field, std::size_t n, std::size_t k,
                                             std::uint64_t budget = kDefaultBudget);

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each a sorted
/// vertex list, in lexicographic order.
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<std::size_t>>& adjacency);

struct CommutativityReport {
  std::size_t vertices;
  std::size_t edges;
  std::size_t cliques;
  std::size_t base_subsets;
  bool equal;  // clique family == family of base subsets
};

CommutativityReport verify_commutativity_correspondence(const Field& field, std::size_t n, std::size_t k,
                                                        std::uint64_t budget = kDefaultBudget);

}  // namespace grasslab
