#include "grasslab/overlap_counts.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "grasslab/base_subset.hpp"
#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

namespace {

using IndexSet = std::vector<std::size_t>;

std::size_t overlap(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

struct DistanceTally {
  std::int64_t value = -1;
  std::size_t pairs = 0;
  bool invariant = true;

  void record(std::size_t count) {
    const auto c = static_cast<std::int64_t>(count);
    if (pairs == 0)
      value = c;
    else if (value != c)
      invariant = false;
    ++pairs;
  }
};

/// Overlap counts of incident sets in `base`, keyed by the distance between
/// the two members of `layer` that define them.
std::map<std::size_t, DistanceTally> tally_overlaps(const BaseSubset& base, const BaseSubset& layer) {
  std::vector<IndexSet> sets;
  for (const auto& a : layer.members()) sets.push_back(incident_members(base, a));
  std::map<std::size_t, DistanceTally> out;
  for (std::size_t i = 0; i < layer.size(); ++i)
    for (std::size_t j = i + 1; j < layer.size(); ++j)
      out[pair_distance(layer.members()[i], layer.members()[j], layer)].record(overlap(sets[i], sets[j]));
  return out;
}

}  // namespace

TwoLayerOverlapReport verify_two_layer_overlaps(std::size_t n, std::size_t k, const Field& field) {
  if (n < 5 || k < 2 || 2 * k > n)
    throw Error(ErrorCode::ParamOutOfRange, "two-layer overlap counts need n >= 5 and 1 < k <= n - k, got n = " +
                                                std::to_string(n) + ", k = " + std::to_string(k));
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  const BaseSubset base(standard_frame(field, n), k);
  auto tally = tally_overlaps(base, base.associated(2));

  TwoLayerOverlapReport r{};
  r.n = n;
  r.k = k;
  r.p = field.p();
  r.c1_formula = binomial(nn - 3, kk - 3) + binomial(nn - 3, kk);
  r.c2_formula = binomial(nn - 4, kk - 4) + binomial(nn - 4, kk) + 2 * binomial(nn - 4, kk - 2);
  r.c1_enum = tally[1].value;
  r.c2_enum = tally[2].value;
  r.orbit_invariant = tally[1].invariant && tally[2].invariant;
  r.distinguishable = r.c1_enum != r.c2_enum;
  r.c2_exceeds_c1 = r.c2_enum > r.c1_enum;
  r.formulas_match = r.c1_enum == r.c1_formula && r.c2_enum == r.c2_formula;
  return r;
}

LayerOverlapReport verify_layer_overlaps(std::size_t n, std::size_t k, const Field& field) {
  if (k < 2 || 2 * k >= n)
    throw Error(ErrorCode::ParamOutOfRange, "layer overlap counts need 1 < k < n - k, got n = " + std::to_string(n) +
                                                ", k = " + std::to_string(k));
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  const BaseSubset base(standard_frame(field, n), k);
  auto tally = tally_overlaps(base, base);

  LayerOverlapReport r{};
  r.n = n;
  r.k = k;
  r.p = field.p();
  r.formulas_match = true;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t formula = i < k ? binomial(nn - kk - ii, kk) : binomial(nn - 2 * kk, kk) + 2;
    const DistanceTally& t = tally[i];
    r.counts.push_back({i, formula, t.value, t.pairs, t.invariant});
    r.formulas_match = r.formulas_match && t.invariant && t.value == formula;
  }
  const std::int64_t c1 = r.counts.front().enumerated;
  r.c1_positive = c1 > 0;
  r.c1_distinct = std::none_of(r.counts.begin() + 1, r.counts.end(),
                               [c1](const LayerOverlapCount& c) { return c.enumerated == c1; });
  return r;
}

}  // namespace grasslab
