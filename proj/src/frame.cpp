#include "grasslab/frame.hpp"

#include <algorithm>
#include <string>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

bool is_frame(const std::vector<Subspace>& lines) {
  if (lines.empty()) return false;
  const std::size_t n = lines.front().ambient();
  if (lines.size() != n) return false;
  Matrix rep(lines.front().field(), 0, n);
  for (const auto& l : lines) {
    if (l.dim() != 1 || l.ambient() != n || !(l.field() == lines.front().field())) return false;
    rep.append_rows(l.basis());
  }
  return rank(rep) == n;
}

Frame::Frame(std::vector<Subspace> lines) : lines_(std::move(lines)) {
  if (!is_frame(lines_)) throw Error(ErrorCode::Singular, "lines are not in general position or miscounted");
  std::sort(lines_.begin(), lines_.end());
}

Matrix Frame::representative() const {
  Matrix rep(field(), 0, ambient());
  for (const auto& l : lines_) rep.append_rows(l.basis());
  return rep;
}

Subspace Frame::span_of(const std::vector<std::size_t>& indices) const {
  Matrix m(field(), 0, ambient());
  for (auto i : indices) m.append_rows(lines_.at(i).basis());
  return Subspace::span(std::move(m));
}

Frame frame_from_matrix(const Matrix& b) {
  if (!b.square()) throw Error(ErrorCode::Singular, "frame matrix must be square");
  if (!is_invertible(b)) throw Error(ErrorCode::Singular, "frame matrix rows are dependent");
  std::vector<Subspace> lines;
  lines.reserve(b.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) lines.push_back(Subspace::span(b.row_block(r, 1)));
  return Frame(std::move(lines));
}

Frame standard_frame(const Field& field, std::size_t n) { return frame_from_matrix(Matrix::identity(field, n)); }

void for_each_frame(const Field& field, std::size_t n, const std::function<void(const Frame&)>& fn,
                    std::uint64_t budget) {
  const std::uint64_t count = frame_count(n, static_cast<std::uint64_t>(field.p()));
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(count) + " frames exceed budget " + std::to_string(budget));
  const auto points = enumerate_grassmannian(field, n, 1, budget);
  // Lines are chosen in increasing order, each outside the span of the
  // previous ones, so every unordered frame appears once.
  std::vector<std::size_t> chosen;
  std::vector<Subspace> spans{Subspace::zero(field, n)};
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == n) {
      std::vector<Subspace> lines;
      for (auto i : chosen) lines.push_back(points[i]);
      fn(Frame(std::move(lines)));
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      if (spans.back().contains(points[i])) continue;
      chosen.push_back(i);
      spans.push_back(spans.back() + points[i]);
      rec(i + 1);
      spans.pop_back();
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace grasslab
