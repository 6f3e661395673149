#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grasslab/field.hpp"

namespace grasslab {

/// Dense matrix over GF(p). Rows are bit-packed into 64-bit words when
/// p = 2 and stored one byte per entry otherwise.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Entries are reduced mod p. All rows must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols,
                          const std::vector<std::vector<long long>>& rows);

  const Field& field() const noexcept { return field_; }
  int p() const noexcept { return field_.p(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept {
    if (field_.is_binary()) return static_cast<Elem>((bits_[r * stride_ + c / 64] >> (c % 64)) & 1u);
    return vals_[r * stride_ + c];
  }
  void set(std::size_t r, std::size_t c, Elem v) noexcept;

  std::vector<Elem> row(std::size_t r) const;
  std::vector<std::vector<long long>> to_rows() const;

  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void scale_row(std::size_t r, Elem s) noexcept;
  /// row[dst] += s * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, Elem s) noexcept;
  bool row_is_zero(std::size_t r) const noexcept;
  bool is_zero() const noexcept;

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Keep only the first `count` rows.
  void truncate_rows(std::size_t count);
  void append_row(std::span<const Elem> entries);
  void append_rows(const Matrix& other);

  std::size_t hash() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;
  /// Shape first, then entries in row-major order.
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) noexcept;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> vals_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so `reduced`
/// has the input's shape.
RrefResult rref(const Matrix& m);
/// Reduces in place and drops zero rows; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(const Matrix& m);

/// RREF basis of {x : m x = 0}, one basis vector per row.
Matrix kernel(const Matrix& m);

/// Throws Error(Singular) when m is not invertible.
Matrix invert(const Matrix& m);
bool is_invertible(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scaled(const Matrix& m, Elem s);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Divides by the first nonzero entry of the first nonzero row, making the
/// representative of the projective class unique.
Matrix normalize_scalar(const Matrix& m);

}  // namespace grasslab

template <>
struct std::hash<grasslab::Matrix> {
  std::size_t operator()(const grasslab::Matrix& m) const noexcept { return m.hash(); }
};
