#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grasslab/comp_pair.hpp"
#include "grasslab/frame.hpp"

namespace grasslab {

/// The C(n, k) complementary pairs spanned by the lines of one frame.
/// members()[i] is spanned by the frame lines in index_sets()[i] (first
/// component) and the remaining lines (second component).
class BaseSubset {
 public:
  BaseSubset(Frame frame, std::size_t k);

  const Frame& frame() const noexcept { return frame_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<CompPair>& members() const noexcept { return members_; }
  const std::vector<std::vector<std::size_t>>& index_sets() const noexcept { return index_sets_; }

  std::optional<std::size_t> index_of(const CompPair& a) const;
  bool contains(const CompPair& a) const { return index_of(a).has_value(); }

  /// Same frame, another layer.
  BaseSubset associated(std::size_t m) const { return BaseSubset(frame_, m); }

 private:
  Frame frame_;
  std::size_t k_;
  std::vector<CompPair> members_;
  std::vector<std::vector<std::size_t>> index_sets_;
};

/// Throws ParamOutOfRange unless 1 <= k <= n - 1.
BaseSubset base_subset(const Frame& frame, std::size_t k);

/// Indices of the members of `base` incident to `beta` (any layer).
std::vector<std::size_t> incident_members(const BaseSubset& base, const CompPair& beta, Sign sign = Sign::Both);

/// For each frame line, the intersection of every component of the chosen
/// members that contains that line.
struct InexactnessProfile {
  std::vector<Subspace> spans;
};

/// `subset` holds member indices of `base`. Throws EmptySet on an empty subset.
InexactnessProfile profile(const std::vector<std::size_t>& subset, const BaseSubset& base);
bool is_exact(const std::vector<std::size_t>& subset, const BaseSubset& base);

struct MaximalInexactSubset {
  std::vector<std::size_t> members;
  CompPair beta;  // element of the associated 2-layer whose incident set this is
};

/// One maximal inexact subset per element of the associated 2-layer, each
/// certified inexact, maximal under one-element extension, and pairwise
/// distinct. Completeness is certified by checking that the incident set of
/// every associated element of dimension >= 2 lies inside one of them.
/// Throws Unsupported for n < 5.
std::vector<MaximalInexactSubset> maximal_inexact_subsets(const BaseSubset& base);

/// d(first, first'). Throws DimMismatch for pairs of different layers.
std::size_t pair_distance(const CompPair& a, const CompPair& b);
/// Same, additionally checking d(first, first') = d(second, second') for two
/// members of one base subset.
std::size_t pair_distance(const CompPair& a, const CompPair& b, const BaseSubset& base);

}  // namespace grasslab
