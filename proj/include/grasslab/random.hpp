#pragma once

#include <cstdint>
#include <random>

#include "grasslab/comp_pair.hpp"
#include "grasslab/frame.hpp"

namespace grasslab {

/// Seeded source for every sampled check. mt19937_64 is fully specified, and
/// values are drawn by plain modular reduction, so a seed reproduces the same
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Elem element(const Field& f) { return static_cast<Elem>(below(static_cast<std::uint64_t>(f.p()))); }

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);
Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, Rng& rng);
CompPair random_pair(const Field& f, std::size_t n, std::size_t k, Rng& rng);
Frame random_frame(const Field& f, std::size_t n, Rng& rng);

}  // namespace grasslab
