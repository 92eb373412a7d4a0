#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "atlab/rational.hpp"

namespace atlab {

/// Seeded generator for exact-rational test points. Uses raw mt19937_64
/// output only (std distributions are not portable across standard
/// libraries), so a seed pins the sample stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // modulo bias is irrelevant for test-point generation
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (gen_() & 1u) != 0; }

  /// Rational with |numerator| <= max_num, 1 <= denominator <= max_den.
  Rational rational(long long max_num, long long max_den, bool allow_negative = true) {
    long long num = int_in(allow_negative ? -max_num : 0, max_num);
    long long den = int_in(1, max_den);
    return Rational(num, den);
  }

  /// Generic weight pair; y can be negative (including y < -1).
  std::pair<Rational, Rational> xy_generic(long long max_num = 6, long long max_den = 5) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
  }

  /// A point on the decoupled submanifold (y+1)^2 - x^2 = 1, parametrized by
  /// t in (0,1):  x = 2t/(1-t^2),  y+1 = (1+t^2)/(1-t^2).
  std::pair<Rational, Rational> xy_decoupled(long long max_den = 12) {
    long long q = int_in(3, max_den);
    long long p = int_in(1, q - 1);
    Rational t(p, q);
    Rational d = 1 - t * t;
    Rational x = 2 * t / d;
    Rational y = (1 + t * t) / d - 1;
    return {x, y};
  }

  /// x >= 0, y >= 0, (y+1)^2 - x^2 <= 1: shrink the y of a decoupled point.
  std::pair<Rational, Rational> xy_negative_coupling_region(long long max_den = 12) {
    auto [x, y] = xy_decoupled(max_den);
    long long q = int_in(1, 8);
    long long p = int_in(0, q);
    return {x, y * Rational(p, q)};
  }

  /// Uniformly chosen subset of {0,..,n-1} as a bitmask.
  std::uint32_t subset_mask(int n) { return static_cast<std::uint32_t>(bits() & ((1u << n) - 1u)); }

  double unit_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace atlab
