#include "grasslab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "grasslab/error.hpp"

namespace grasslab {

namespace {

std::size_t stride_for(const Field& f, std::size_t cols) {
  return f.is_binary() ? (cols + 63) / 64 : cols;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::AmbientMismatch, std::string(op) + ": matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), stride_(stride_for(field, cols)) {
  if (field_.is_binary())
    bits_.assign(rows_ * stride_, 0);
  else
    vals_.assign(rows_ * stride_, 0);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<long long>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::BadInput, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                           " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.reduce(rows[r][c]));
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Elem v) noexcept {
  if (field_.is_binary()) {
    std::uint64_t& w = bits_[r * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = (v & 1u) ? (w | bit) : (w & ~bit);
  } else {
    vals_[r * stride_ + c] = v;
  }
}

std::vector<Elem> Matrix::row(std::size_t r) const {
  std::vector<Elem> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

std::vector<std::vector<long long>> Matrix::to_rows() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  if (field_.is_binary())
    std::swap_ranges(bits_.begin() + a * stride_, bits_.begin() + (a + 1) * stride_, bits_.begin() + b * stride_);
  else
    std::swap_ranges(vals_.begin() + a * stride_, vals_.begin() + (a + 1) * stride_, vals_.begin() + b * stride_);
}

void Matrix::scale_row(std::size_t r, Elem s) noexcept {
  if (field_.is_binary()) {
    if (s == 0) std::fill_n(bits_.begin() + r * stride_, stride_, 0);
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) vals_[r * stride_ + c] = field_.mul(vals_[r * stride_ + c], s);
}

void Matrix::add_scaled_row(std::size_t dst, std::size_t src, Elem s) noexcept {
  if (s == 0) return;
  if (field_.is_binary()) {
    for (std::size_t w = 0; w < stride_; ++w) bits_[dst * stride_ + w] ^= bits_[src * stride_ + w];
    return;
  }
  Elem* d = vals_.data() + dst * stride_;
  const Elem* o = vals_.data() + src * stride_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (o[c] != 0) d[c] = field_.add(d[c], field_.mul(o[c], s));
}

bool Matrix::row_is_zero(std::size_t r) const noexcept {
  if (field_.is_binary())
    return std::all_of(bits_.begin() + r * stride_, bits_.begin() + (r + 1) * stride_,
                       [](std::uint64_t w) { return w == 0; });
  return std::all_of(vals_.begin() + r * stride_, vals_.begin() + (r + 1) * stride_, [](Elem e) { return e == 0; });
}

bool Matrix::is_zero() const noexcept {
  if (field_.is_binary()) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  return std::all_of(vals_.begin(), vals_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix out(field_, count, cols_);
  if (field_.is_binary())
    std::copy_n(bits_.begin() + first * stride_, count * stride_, out.bits_.begin());
  else
    std::copy_n(vals_.begin() + first * stride_, count * stride_, out.vals_.begin());
  return out;
}

void Matrix::truncate_rows(std::size_t count) {
  if (count >= rows_) return;
  rows_ = count;
  if (field_.is_binary())
    bits_.resize(rows_ * stride_);
  else
    vals_.resize(rows_ * stride_);
}

void Matrix::append_row(std::span<const Elem> entries) {
  const std::size_t r = rows_++;
  if (field_.is_binary())
    bits_.resize(rows_ * stride_, 0);
  else
    vals_.resize(rows_ * stride_, 0);
  for (std::size_t c = 0; c < cols_ && c < entries.size(); ++c) set(r, c, field_.reduce(entries[c]));
}

void Matrix::append_rows(const Matrix& other) {
  require_same_field(*this, other, "append_rows");
  if (other.cols_ != cols_) throw Error(ErrorCode::DimMismatch, "append_rows: column counts differ");
  rows_ += other.rows_;
  if (field_.is_binary())
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  else
    vals_.insert(vals_.end(), other.vals_.begin(), other.vals_.end());
}

std::size_t Matrix::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(field_.p()));
  mix(rows_);
  mix(cols_);
  if (field_.is_binary())
    for (auto w : bits_) mix(w);
  else
    for (auto e : vals_) mix(e);
  return static_cast<std::size_t>(h);
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_ && a.vals_ == b.vals_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept {
  if (auto c = a.field_.p() <=> b.field_.p(); c != 0) return c;
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  if (!a.field_.is_binary()) {
    return std::lexicographical_compare_three_way(a.vals_.begin(), a.vals_.end(), b.vals_.begin(), b.vals_.end());
  }
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    const std::uint64_t d = a.bits_[i] ^ b.bits_[i];
    if (d == 0) continue;
    const std::uint64_t lowest = d & (~d + 1);
    return (a.bits_[i] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    m.scale_row(r, f.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.add_scaled_row(i, r, f.neg(m(i, c)));
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

RrefResult rref(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = rref_in_place(reduced);
  const std::size_t rank = pivots.size();
  Matrix full(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) full.set(i, c, reduced(i, c));
  return {std::move(full), std::move(pivots), rank};
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy).size();
}

Matrix kernel(const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref_in_place(reduced);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(f, 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced(i, free));
    out.append_row(v);
  }
  rref_in_place(out);
  return out;
}

Matrix invert(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::Singular, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix has rank below " + std::to_string(n));
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug(r, n + c));
  return out;
}

bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m(r, c));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "multiply: inner dimensions differ");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  // out.row(i) = sum_j a(i,j) * b.row(j), reusing the row kernel.
  Matrix acc = vstack(Matrix(f, 1, b.cols()), b);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    acc.scale_row(0, 0);
    for (std::size_t j = 0; j < a.cols(); ++j) acc.add_scaled_row(0, j + 1, a(i, j));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(i, c, acc(0, c));
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimMismatch, "add: shapes differ");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().add(a(r, c), b(r, c)));
  return out;
}

Matrix operator-(const Matrix& a) { return scaled(a, a.field().neg(1)); }

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix scaled(const Matrix& m, Elem s) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) out.scale_row(r, s);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  Matrix out = top;
  out.append_rows(bottom);
  return out;
}

Matrix normalize_scalar(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return scaled(m, m.field().inv(m(r, c)));
  return m;
}

}  // namespace grasslab
