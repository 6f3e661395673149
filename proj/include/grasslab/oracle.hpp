#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasslab/base_subset.hpp"
#include "grasslab/comp_pair.hpp"

namespace grasslab {

struct LayerParams {
  Field field;
  std::size_t n;
  std::size_t k;
};

enum class OracleKind { Table, InducedLinear, InducedDuality, OpTwisted, Derived };

std::string_view to_string(OracleKind kind);

/// A black-box transformation of one layer of complementary pairs. Evaluation
/// is a pure function, so one oracle may be shared between threads.
class MapOracle {
 public:
  using Eval = std::function<CompPair(const CompPair&)>;

  MapOracle(OracleKind kind, LayerParams params, Eval forward, Eval backward = {});

  OracleKind kind() const noexcept { return kind_; }
  const LayerParams& params() const noexcept { return params_; }
  const Field& field() const noexcept { return params_.field; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t k() const noexcept { return params_.k; }

  /// Throws DimMismatch for a pair outside the layer.
  CompPair operator()(const CompPair& a) const;
  bool invertible() const noexcept { return static_cast<bool>(backward_); }
  /// Throws Unsupported unless invertible().
  CompPair inverse(const CompPair& a) const;
  MapOracle inverse_oracle() const;

  /// Pairs every verification run includes besides its samples, such as the
  /// swapped set of an Op-twisted oracle or the entries of a table.
  const std::vector<CompPair>& probes() const noexcept { return *probes_; }
  MapOracle with_probes(std::vector<CompPair> probes) const;

  /// The generating matrix of an induced oracle.
  const std::optional<Matrix>& matrix() const noexcept { return matrix_; }
  MapOracle with_matrix(Matrix m) const;

 private:
  void require_layer(const CompPair& a) const;

  OracleKind kind_;
  LayerParams params_;
  Eval forward_;
  Eval backward_;
  std::shared_ptr<const std::vector<CompPair>> probes_;
  std::optional<Matrix> matrix_;
};

MapOracle identity_oracle(LayerParams params);

/// (S, U) ↦ (L·S, L·U). Throws Singular unless L is invertible.
MapOracle induced_from_linear(const Matrix& l, std::size_t k);
/// (S, U) ↦ (ann(D·U), ann(D·S)). Throws Singular unless D is invertible.
MapOracle induced_from_duality(const Matrix& d, std::size_t k);

/// inner ∘ Op_X, where Op_X swaps the pairs in X and fixes the rest.
/// Throws NotSelfDualLayer unless n = 2k and NotOppositeClosed unless X
/// contains the opposite of each of its members.
MapOracle op_twist(const MapOracle& inner, const std::vector<CompPair>& x);

/// Lookup table. With total = false, pairs missing from the table are fixed,
/// so the entries must permute their own domain. Throws BadInput when the
/// entries are not a bijection or leave the layer.
MapOracle table_oracle(LayerParams params, const std::vector<std::pair<CompPair, CompPair>>& entries, bool total);

/// p ∘ f ∘ p on layer n - k, with p the opposite map.
MapOracle opposite_conjugate(const MapOracle& f);

/// `count` distinct random opposite classes with both members of each listed.
/// Requires n = 2k.
std::vector<CompPair> random_opposite_classes(const Field& field, std::size_t n, std::size_t count, std::uint64_t seed);

struct SweepMode {
  bool exhaustive = false;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;

  static SweepMode all(std::uint64_t budget = kDefaultBudget) { return {true, 0, 0, budget}; }
  static SweepMode sampled(std::size_t count, std::uint64_t seed) { return {false, count, seed, kDefaultBudget}; }
};

struct SweepVerdict {
  bool pass = true;
  std::size_t frames_checked = 0;
  std::optional<Frame> witness;
  std::string reason;
};

/// Checks that f, and f⁻¹ when available, carries each tested frame's base
/// subset onto a base subset. Exhaustive mode throws BudgetExceeded when the
/// frame count is over budget.
SweepVerdict preserves_base_subsets(const MapOracle& f, const SweepMode& mode);

/// The frame whose base subset is exactly `image`. Lines are found by
/// refining the whole space against every component. Throws NotABaseSubset.
Frame recover_frame(const std::vector<CompPair>& image);

/// f applied to every member.
std::vector<CompPair> image_of(const MapOracle& f, const std::vector<CompPair>& members);

}  // namespace grasslab
