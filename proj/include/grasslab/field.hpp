#pragma once

#include <array>
#include <cstdint>

namespace grasslab {

using Elem = std::uint8_t;

/// The prime field GF(p) for 2 <= p <= 13. Elements are least nonnegative
/// residues.
class Field {
 public:
  static constexpr int kMaxPrime = 13;

  /// Throws Error(ParamOutOfRange) unless p is a prime in [2, 13].
  explicit Field(int p);

  int p() const noexcept { return p_; }
  bool is_binary() const noexcept { return p_ == 2; }

  Elem reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    int s = a + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    int s = a - b;
    return static_cast<Elem>(s < 0 ? s + p_ : s);
  }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }
  /// Multiplicative inverse; inv(0) is 0 and must not be relied upon.
  Elem inv(Elem a) const noexcept { return inverse_[a]; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

  static bool is_supported_prime(int p) noexcept;

 private:
  int p_;
  std::array<Elem, kMaxPrime + 1> inverse_{};
};

}  // namespace grasslab
