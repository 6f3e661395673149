#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grasslab/subspace.hpp"

namespace grasslab {

/// n lines of GF(p)^n spanning the whole space. Lines are kept sorted, so
/// equal frames compare equal regardless of the order they were given in.
class Frame {
 public:
  /// Throws Singular unless the lines form a frame.
  explicit Frame(std::vector<Subspace> lines);

  const std::vector<Subspace>& lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const Field& field() const noexcept { return lines_.front().field(); }
  std::size_t ambient() const noexcept { return lines_.front().ambient(); }
  /// Row i spans line i.
  Matrix representative() const;
  /// Span of the lines with the given indices.
  Subspace span_of(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const Frame& a, const Frame& b) noexcept { return a.lines_ == b.lines_; }

 private:
  std::vector<Subspace> lines_;
};

/// n one-dimensional subspaces whose representatives are linearly independent
/// and number exactly the ambient dimension.
bool is_frame(const std::vector<Subspace>& lines);
/// Frame of the row lines of an invertible n×n matrix; throws Singular otherwise.
Frame frame_from_matrix(const Matrix& b);
Frame standard_frame(const Field& field, std::size_t n);

/// Every frame of GF(p)^n exactly once. Throws BudgetExceeded up front.
void for_each_frame(const Field& field, std::size_t n, const std::function<void(const Frame&)>& fn,
                    std::uint64_t budget = kDefaultBudget);

}  // namespace grasslab
