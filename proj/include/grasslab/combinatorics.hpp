#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace grasslab {

/// C(a, b), zero when b < 0 or b > a.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// Saturates at UINT64_MAX instead of overflowing.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// Number of k-dimensional subspaces of GF(q)^n, saturating on overflow.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Every k-subset of {0..n-1} as an increasing index list, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// |GL(n, q)|, saturating.
std::uint64_t general_linear_order(std::size_t n, std::uint64_t q);

/// Number of frames (unordered n-sets of lines spanning the space) of GF(q)^n.
std::uint64_t frame_count(std::size_t n, std::uint64_t q);

}  // namespace grasslab
