#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grasslab/field.hpp"

namespace grasslab {

/// Overlap sizes |B_k(a) ∩ B_k(b)| for pairs a, b of the 2-layer associated
/// with the standard base subset, split by the distance between a and b.
struct TwoLayerOverlapReport {
  std::size_t n, k;
  int p;
  std::int64_t c1_formula, c2_formula;
  std::int64_t c1_enum, c2_enum;
  bool orbit_invariant;      // every pair at a given distance gave the same count
  bool distinguishable;      // c1_enum != c2_enum
  bool c2_exceeds_c1;        // the strict inequality c2 > c1
  bool formulas_match;
  /// Formulas reproduced, counts invariant, and c2 > c1 as claimed.
  bool matches_claim() const { return formulas_match && orbit_invariant && c2_exceeds_c1; }
};

/// Requires 1 < k <= n - k and n >= 5; throws ParamOutOfRange otherwise.
TwoLayerOverlapReport verify_two_layer_overlaps(std::size_t n, std::size_t k, const Field& field);

struct LayerOverlapCount {
  std::size_t distance;
  std::int64_t formula;
  std::int64_t enumerated;
  std::size_t pairs_checked;
  bool invariant;
};

/// Same overlap count on the k-layer itself, for every distance 1..k.
struct LayerOverlapReport {
  std::size_t n, k;
  int p;
  std::vector<LayerOverlapCount> counts;
  bool c1_positive;
  bool c1_distinct;  // c1 differs from every c_i, i >= 2
  bool formulas_match;
  bool matches_claim() const { return formulas_match && c1_positive && c1_distinct; }
};

/// Requires 1 < k < n - k; throws ParamOutOfRange otherwise.
LayerOverlapReport verify_layer_overlaps(std::size_t n, std::size_t k, const Field& field);

}  // namespace grasslab
