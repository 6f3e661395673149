#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasslab/error.hpp"
#include "grasslab/matrix.hpp"
#include "grasslab/random.hpp"
#include "oracles.hpp"

using namespace grasslab;

namespace {

Matrix from(int p, std::size_t cols, std::vector<std::vector<long long>> rows) {
  return Matrix::from_rows(Field(p), cols, rows);
}

}  // namespace

TEST_CASE("field rejects unsupported moduli") {
  CHECK_THROWS_AS(Field(4), Error);
  CHECK_THROWS_AS(Field(17), Error);
  CHECK_THROWS_AS(Field(1), Error);
  for (int p : {2, 3, 5, 7, 11, 13}) {
    const Field f(p);
    for (int a = 1; a < p; ++a) CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
  }
}

TEST_CASE("from_rows reduces entries") {
  const Matrix m = from(3, 2, {{4, -1}, {3, 5}});
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 2);
}

TEST_CASE("rref of the identity") {
  const Matrix id = Matrix::identity(Field(2), 3);
  const auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);
}

TEST_CASE("rref of duplicate rows") {
  const auto r = rref(from(2, 2, {{1, 1}, {1, 1}}));
  CHECK(r.reduced == from(2, 2, {{1, 1}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with the minor-expansion rank on random 4x4 over GF(3)") {
  const Field f(3);
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(f, 4, 4, rng);
    // Force some rank deficiency now and then.
    if (t % 3 == 0)
      for (std::size_t c = 0; c < 4; ++c) m.set(3, c, f.add(m(0, c), m(1, c)));
    if (t % 7 == 0)
      for (std::size_t c = 0; c < 4; ++c) m.set(2, c, f.mul(2, m(1, c)));
    CHECK(rref(m).rank == oracle::minor_rank(oracle::rows_of(m), 3));
  }
}

TEST_CASE("rref keeps the row space and has increasing pivots") {
  Rng rng(5);
  for (int p : {2, 3, 5}) {
    const Field f(p);
    for (int t = 0; t < 30; ++t) {
      const Matrix m = random_matrix(f, 3, 5, rng);
      const auto r = rref(m);
      for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
      CHECK(r.rank == r.pivots.size());
      CHECK(oracle::span_set(oracle::rows_of(m), p, 5) == oracle::span_set(oracle::rows_of(r.reduced), p, 5));
    }
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(6);
  for (int p : {2, 3, 7}) {
    const Field f(p);
    for (int t = 0; t < 40; ++t) {
      const Matrix m = random_matrix(f, 1 + rng.below(5), 1 + rng.below(70), rng);
      const Matrix once = rref(m).reduced;
      CHECK(rref(once).reduced == once);
    }
  }
}

TEST_CASE("kernel of identity and zero") {
  CHECK(kernel(Matrix::identity(Field(2), 4)).rows() == 0);
  const Matrix k = kernel(Matrix(Field(2), 2, 3));
  CHECK(k.rows() == 3);
  CHECK(k == Matrix::identity(Field(2), 3));
}

TEST_CASE("kernel of random 3x5 over GF(3) matches an exhaustive null-vector scan") {
  const Field f(3);
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(f, 3, 5, rng);
    const Matrix k = kernel(m);
    for (std::size_t r = 0; r < k.rows(); ++r)
      for (std::size_t i = 0; i < 3; ++i) {
        int s = 0;
        for (std::size_t c = 0; c < 5; ++c) s += m(i, c) * k(r, c);
        CHECK(s % 3 == 0);
      }
    oracle::VecSet nulls;
    const auto rows = oracle::rows_of(m);
    for (oracle::Code x = 0; x < 243; ++x) {
      const auto v = oracle::decode(x, 3, 5);
      bool zero = true;
      for (const auto& row : rows) zero = zero && oracle::dot(row, v, 3) == 0;
      if (zero) nulls.insert(x);
    }
    CHECK(oracle::span_set(oracle::rows_of(k), 3, 5) == nulls);
    CHECK(k.rows() == 5 - rank(m));
    CHECK(rref(k).reduced == k);
  }
}

TEST_CASE("rank plus nullity equals column count") {
  Rng rng(23);
  for (int p : {2, 3, 13}) {
    const Field f(p);
    for (int t = 0; t < 50; ++t) {
      const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(100);
      const Matrix m = random_matrix(f, rows, cols, rng);
      CHECK(rank(m) + kernel(m).rows() == cols);
    }
  }
}

TEST_CASE("invert examples") {
  const Matrix id = Matrix::identity(Field(5), 4);
  CHECK(invert(id) == id);
  const Matrix swap = from(3, 2, {{0, 1}, {1, 0}});
  CHECK(invert(swap) == swap);
  CHECK_THROWS_AS(invert(from(2, 2, {{1, 1}, {1, 1}})), Error);
  try {
    invert(from(3, 2, {{1, 2}, {2, 1}}));
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
}

TEST_CASE("inverse of random invertible 5x5 over GF(2) multiplies to the identity") {
  const Field f(2);
  Rng rng(29);
  const Matrix id = Matrix::identity(f, 5);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_invertible(f, 5, rng);
    const Matrix inv = invert(m);
    CHECK(m * inv == id);
    CHECK(inv * m == id);
  }
}

TEST_CASE("inverse is two-sided over odd fields and wide bit-packed rows") {
  Rng rng(31);
  for (int p : {3, 7, 11}) {
    const Field f(p);
    for (int t = 0; t < 20; ++t) {
      const Matrix m = random_invertible(f, 6, rng);
      CHECK(invert(m) * m == Matrix::identity(f, 6));
      CHECK(m * invert(m) == Matrix::identity(f, 6));
    }
  }
  const Field f2(2);
  const Matrix big = random_invertible(f2, 70, rng);
  CHECK(big * invert(big) == Matrix::identity(f2, 70));
}

TEST_CASE("normalize_scalar makes the first nonzero entry one") {
  const Matrix m = from(5, 2, {{0, 3}, {2, 4}});
  const Matrix n = normalize_scalar(m);
  CHECK(n(0, 1) == 1);
  CHECK(n == normalize_scalar(scaled(m, 4)));
}

TEST_CASE("transpose and arithmetic") {
  const Matrix a = from(7, 3, {{1, 2, 3}, {4, 5, 6}});
  CHECK(transpose(transpose(a)) == a);
  CHECK(transpose(a).rows() == 3);
  CHECK((a - a).is_zero());
  CHECK(a + (-a) == Matrix(Field(7), 2, 3));
  CHECK(vstack(a, a).rows() == 4);
}
