#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasslab/oracle.hpp"

namespace grasslab {

/// The matching of 2-layer base subsets read off from f. assignment[i] is
/// the index in image.members() of f₂(domain.members()[i]).
struct F2Table {
  BaseSubset domain;
  BaseSubset image;
  std::vector<std::size_t> assignment;
  bool distance_certified = false;  // the overlap counts separate distances 1 and 2
  bool distance_preserving = false;
  std::vector<std::string> warnings;

  CompPair operator()(std::size_t i) const { return image.members()[assignment[i]]; }
};

/// Requires n >= 5 (DegenerateParams otherwise) and 2 <= k <= n - 2.
/// Throws NotABaseSubset when f breaks the base subset and AmbiguousMatch
/// when a maximal inexact subset has no unique counterpart.
F2Table build_f2(const MapOracle& f, const BaseSubset& base);

/// Lazy oracle g on layer k - 1 with f(G⁺(α)) = G⁺(g(α)) when k < n - k and
/// f(G(α)) = G(g(α)) when n = 2k. Requires 1 < k <= n - k; n = 2k needs
/// k >= 4 and throws DegenerateParams otherwise. Evaluation throws
/// NotInducedError when the images do not combine into a pair.
MapOracle build_g(const MapOracle& f);

/// The base subset of G⁺_k(α) (and, for n = 2k, of G_k(α)) built from a frame
/// of T for α = (Q, T) in layer k - 1.
struct IncidentBase {
  std::vector<Subspace> lines;   // frame of T, in walk order
  std::vector<CompPair> members;  // sorted
};

IncidentBase incident_base(const CompPair& alpha, std::size_t k, const std::vector<Subspace>& lines);

/// Shared members of two incident bases.
std::size_t shared_members(const IncidentBase& a, const IncidentBase& b);

/// A walk from the frame `from` of T to the frame `to`, replacing one frame
/// line per step, such that consecutive bases share at least 2 members when
/// k < n - k and at least 6 when n = 2k. The first entry uses `from`, the
/// last uses `to`.
std::vector<IncidentBase> chain_connect(const CompPair& alpha, std::size_t k, const std::vector<Subspace>& from,
                                        const std::vector<Subspace>& to);

/// Members two consecutive chain links must share.
std::size_t chain_link_threshold(std::size_t n, std::size_t k);

enum class InducerKind { Linear, Duality };

std::string_view to_string(InducerKind kind);

struct PointMapResult {
  InducerKind kind;
  Matrix matrix;  // normalized so the first nonzero entry is 1
  std::size_t checked = 0;
  bool exhaustive = false;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::uint64_t exhaustive_budget = 4096;  // verify every pair when the layer is no larger
};

/// Classifies g on layer 1 as linear or duality-induced and recovers the
/// inducer from the images of the coordinate lines and the all-ones line.
/// Throws NotInducedError when g disagrees with the recovered map.
PointMapResult recover_point_map(const MapOracle& g, const VerifyOptions& opts = {});

struct ReconstructOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 14;
  std::uint64_t point_budget = 4096;
  std::size_t lifting_samples = 100;
  bool preflight = true;  // match maximal inexact subsets before recursing
};

struct InducerReport {
  InducerKind kind = InducerKind::Linear;
  Matrix matrix{Field(2), 0, 0};
  std::size_t n = 0, k = 0;
  int p = 2;
  bool self_dual_layer = false;
  std::vector<std::string> op_component;  // class keys where f = induced ∘ op
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  bool exhaustive = false;
  std::size_t residual = 0;
  std::optional<CompPair> witness;
  std::size_t lifting_checked = 0;
  std::vector<std::string> warnings;

  static constexpr const char* scalar_note =
      "the inducing matrix is determined up to a nonzero scalar; it is normalized so its first nonzero entry is 1";
};

/// Recurses build_g down to layer 1, recovers the inducer there and checks
/// it against f on the original layer. Layers with k > n - k go through
/// opposite_conjugate first. Throws ParamOutOfRange for n < 3,
/// DegenerateParams for n = 2k in {4, 6} and NotInducedError when an
/// intermediate stage fails; a disagreement in the final check is reported
/// through residual and witness instead.
InducerReport reconstruct_inducer(const MapOracle& f, const ReconstructOptions& opts = {});

/// The oracle that a report describes, on layer k.
MapOracle inducer_oracle(InducerKind kind, const Matrix& m, std::size_t k);

}  // namespace grasslab
