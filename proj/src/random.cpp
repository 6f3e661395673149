#include "grasslab/random.hpp"

namespace grasslab {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.element(f));
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, Rng& rng) {
  while (true) {
    Subspace s = Subspace::span(random_matrix(f, k, n, rng));
    if (s.dim() == k) return s;
  }
}

CompPair random_pair(const Field& f, std::size_t n, std::size_t k, Rng& rng) {
  const Subspace s = random_subspace(f, n, k, rng);
  while (true) {
    Subspace u = random_subspace(f, n, n - k, rng);
    if (intersection_dim(s, u) == 0) return CompPair{s, std::move(u)};
  }
}

Frame random_frame(const Field& f, std::size_t n, Rng& rng) { return frame_from_matrix(random_invertible(f, n, rng)); }

}  // namespace grasslab
