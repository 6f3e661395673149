#include "grasslab/combinatorics.hpp"

#include <limits>

namespace grasslab {

namespace {
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; only additions and multiplications.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      const std::uint64_t a = row[j - 1];
      const std::uint64_t b = saturating_mul(saturating_pow(q, j), row[j]);
      row[j] = (a > kSat - b) ? kSat : a + b;
    }
  }
  return row[k];
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t general_linear_order(std::size_t n, std::uint64_t q) {
  std::uint64_t r = 1;
  const std::uint64_t qn = saturating_pow(q, n);
  for (std::size_t i = 0; i < n; ++i) r = saturating_mul(r, qn - saturating_pow(q, i));
  return r;
}

std::uint64_t frame_count(std::size_t n, std::uint64_t q) {
  std::uint64_t denom = saturating_pow(q - 1, n);
  for (std::size_t i = 2; i <= n; ++i) denom = saturating_mul(denom, i);
  return general_linear_order(n, q) / denom;
}

}  // namespace grasslab
