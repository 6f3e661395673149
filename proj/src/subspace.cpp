#include "grasslab/subspace.hpp"

#include <algorithm>
#include <string>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

Subspace Subspace::span(Matrix rows) {
  auto pivots = rref_in_place(rows);
  return Subspace(std::move(rows), std::move(pivots));
}

Subspace Subspace::zero(Field field, std::size_t n) { return Subspace(Matrix(field, 0, n), {}); }

Subspace Subspace::whole(Field field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, n), std::move(piv));
}

Subspace Subspace::coordinate(Field field, std::size_t n, std::span<const std::size_t> indices) {
  Matrix m(field, indices.size(), n);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= n) throw Error(ErrorCode::ParamOutOfRange, "coordinate index out of range");
    m.set(r, indices[r], 1);
  }
  return span(std::move(m));
}

Subspace Subspace::line(Field field, std::span<const Elem> vector) {
  Matrix m(field, 0, vector.size());
  m.append_row(vector);
  return span(std::move(m));
}

Subspace Subspace::from_canonical(Matrix basis, std::vector<std::size_t> pivots) {
  return Subspace(std::move(basis), std::move(pivots));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  if (other.dim() == 0) return true;
  Matrix work = vstack(basis_, other.basis_);
  const std::size_t d = dim();
  for (std::size_t r = d; r < work.rows(); ++r) {
    for (std::size_t i = 0; i < d; ++i) work.add_scaled_row(r, i, field().neg(work(r, pivots_[i])));
    if (!work.row_is_zero(r)) return false;
  }
  return true;
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  Matrix work = basis_;
  work.append_row(v);
  const std::size_t r = dim();
  for (std::size_t i = 0; i < r; ++i) work.add_scaled_row(r, i, field().neg(work(r, pivots_[i])));
  return work.row_is_zero(r);
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.basis_ <=> b.basis_;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw Error(ErrorCode::AmbientMismatch, "subspaces of GF(" + std::to_string(a.field().p()) + ")^" +
                                                std::to_string(a.ambient()) + " and GF(" +
                                                std::to_string(b.field().p()) + ")^" + std::to_string(b.ambient()));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(s.field(), s.ambient());
  Matrix k = kernel(s.basis());
  auto pivots = rref_in_place(k);
  return Subspace::from_canonical(std::move(k), std::move(pivots));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return annihilator(annihilator(a) + annihilator(b));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return 0;
  return a.dim() + b.dim() - rank(vstack(a.basis(), b.basis()));
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw Error(ErrorCode::AmbientMismatch, "image: matrix width differs from ambient");
  if (s.dim() == 0) return Subspace::zero(s.field(), m.rows());
  return Subspace::span(s.basis() * transpose(m));
}

bool incident(const Subspace& a, const Subspace& b) {
  return a.dim() <= b.dim() ? b.contains(a) : a.contains(b);
}

bool complementary(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a.dim() + b.dim() == a.ambient() && intersection_dim(a, b) == 0;
}

std::size_t distance(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimMismatch, "distance between subspaces of dimension " + std::to_string(a.dim()) +
                                            " and " + std::to_string(b.dim()));
  return a.dim() - intersection_dim(a, b);
}

std::uint64_t grassmannian_size(std::size_t n, std::size_t k, const Field& field) {
  return gaussian_binomial(n, k, static_cast<std::uint64_t>(field.p()));
}

void for_each_subspace(const Field& field, std::size_t n, std::size_t k, const std::function<void(const Subspace&)>& fn,
                       std::uint64_t budget) {
  if (k > n) throw Error(ErrorCode::ParamOutOfRange, "subspace dimension exceeds ambient dimension");
  const std::uint64_t count = grassmannian_size(n, k, field);
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded, "Grassmannian holds " + std::to_string(count) +
                                               " subspaces, budget is " + std::to_string(budget));
  const Elem top = static_cast<Elem>(field.p() - 1);
  for (const auto& pivots : combinations(n, k)) {
    Matrix templ(field, k, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < k; ++i) {
      templ.set(i, pivots[i], 1);
      is_pivot[pivots[i]] = true;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);
    Matrix cur = templ;
    while (true) {
      fn(Subspace::from_canonical(cur, pivots));
      // Odometer with the last free position varying fastest keeps the
      // entry strings in lexicographic order.
      std::size_t pos = free.size();
      while (pos > 0) {
        auto [r, c] = free[pos - 1];
        if (cur(r, c) < top) {
          cur.set(r, c, static_cast<Elem>(cur(r, c) + 1));
          break;
        }
        cur.set(r, c, 0);
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t n, std::size_t k, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, k, [&](const Subspace& s) { out.push_back(s); }, budget);
  return out;
}

void for_each_between(const Subspace& lower, const Subspace& upper, std::size_t d,
                      const std::function<void(const Subspace&)>& fn, std::uint64_t budget) {
  require_same_ambient(lower, upper);
  if (d < lower.dim() || d > upper.dim() || !upper.contains(lower)) return;
  const Field& f = lower.field();
  // Extend a basis of `lower` to one of `upper`; the extra rows span a
  // complement C, and X <-> (X ∩ ...) corresponds to subspaces of C.
  Matrix ext(f, 0, lower.ambient());
  Subspace acc = lower;
  for (std::size_t r = 0; r < upper.dim() && acc.dim() < upper.dim(); ++r) {
    auto v = upper.basis().row(r);
    if (acc.contains_vector(v)) continue;
    ext.append_row(v);
    acc = acc + Subspace::line(f, v);
  }
  const std::size_t extra = ext.rows();
  for_each_subspace(
      f, extra, d - lower.dim(),
      [&](const Subspace& y) {
        if (y.dim() == 0) {
          fn(lower);
          return;
        }
        fn(Subspace::span(vstack(lower.basis(), y.basis() * ext)));
      },
      budget);
}

}  // namespace grasslab
