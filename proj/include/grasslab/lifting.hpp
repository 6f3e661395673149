#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "grasslab/comp_pair.hpp"

namespace grasslab {

/// β₁ = (Q₁, T₁), β₂ = (Q₂, T₂) on layer k - 1 with Q₁ + Q₂ = S and
/// T₁ ∩ T₂ = U for α = (S, U). With s₁..s_k the basis of S:
/// Q₁ = ⟨s₁..s_{k-1}⟩, Q₂ = ⟨s₂..s_k⟩, T₁ = U + ⟨s_k⟩, T₂ = U + ⟨s₁⟩.
struct LiftingBetas {
  CompPair beta1;
  CompPair beta2;
};

/// Requires k >= 2.
LiftingBetas lifting_betas(const CompPair& alpha);

/// G_k(β₁) ∩ G_k(β₂) restricted to the given sign, sorted.
std::vector<CompPair> lifting_intersection(const LiftingBetas& betas, std::size_t k, Sign sign,
                                           std::uint64_t budget = kDefaultBudget);

/// (first₁ + first₂, second₁ ∩ second₂): the pair the lifting identity
/// singles out from two images on layer k - 1.
CompPair lift_pair(const CompPair& gamma1, const CompPair& gamma2);

struct LiftingReport {
  std::size_t n = 0, k = 0;
  int p = 2;
  bool self_dual_layer = false;  // n = 2k: the expected set is {α, α^op}
  std::size_t samples = 0;
  std::size_t holds = 0;
  std::optional<CompPair> counterexample;

  bool pass() const { return samples > 0 && holds == samples; }
};

/// For sampled α checks G⁺(β₁) ∩ G⁺(β₂) = {α} when k < n - k, and
/// G(β₁) ∩ G(β₂) = {α, α^op} when n = 2k. Requires 2 <= k <= n - k.
LiftingReport verify_lifting_identity(const Field& field, std::size_t n, std::size_t k, std::size_t samples,
                                      std::uint64_t seed);

/// A configuration at n = 2k with Q₁ ⊂ T₂ and Q₂ ⊂ T₁ whose intersection
/// G(β₁) ∩ G(β₂) is strictly larger than {α, α^op}.
struct CrosswiseWitness {
  CompPair alpha;
  LiftingBetas betas;
  std::vector<CompPair> intersection;
  std::vector<CompPair> mixed;  // (+)-incident to one β and (-)-incident to the other
};

/// Searches sampled α (the standard one first). Requires n = 2k.
std::optional<CrosswiseWitness> find_crosswise_witness(const Field& field, std::size_t n, std::size_t attempts,
                                                       std::uint64_t seed);

struct OppositeSymmetryReport {
  std::size_t frames = 0;
  std::size_t elements = 0;
  std::size_t holds = 0;
  bool pass() const { return elements > 0 && holds == elements; }
};

/// Over every frame at n = 2k: the members of the base subset incident to α
/// and to α^op coincide, for each member α.
OppositeSymmetryReport verify_opposite_symmetry(const Field& field, std::size_t n,
                                                std::uint64_t budget = kDefaultBudget);

}  // namespace grasslab
