#pragma once

#include <compare>
#include <cstdint>

namespace goodprime {

/// a + bφ in ℤ[φ], φ² = φ + 1.
struct ZPhi {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr ZPhi() = default;
  constexpr ZPhi(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  static constexpr ZPhi phi() { return {0, 1}; }

  friend constexpr ZPhi operator+(ZPhi x, ZPhi y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr ZPhi operator-(ZPhi x, ZPhi y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr ZPhi operator-(ZPhi x) { return {-x.a, -x.b}; }
  friend constexpr ZPhi operator*(ZPhi x, ZPhi y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr bool operator==(ZPhi, ZPhi) = default;
  friend constexpr auto operator<=>(ZPhi, ZPhi) = default;  // lexicographic, for use as a map key

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  /// Sign of the real number a + bφ = ((2a + b) + b√5) / 2.
  constexpr int sign() const {
    const std::int64_t x = 2 * a + b, y = b;
    if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
    if (x <= 0 && y <= 0) return -1;
    // Opposite signs: compare x² with 5y².
    const __int128 lhs = static_cast<__int128>(x) * x, rhs = static_cast<__int128>(5) * y * y;
    if (lhs == rhs) return 0;
    return (x > 0) == (lhs > rhs) ? 1 : -1;
  }
};

}  // namespace goodprime
