#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "h2plus/errors.h"

namespace h2plus {

/// Angular momentum quantum number stored as twice its value, so that
/// j in {0, 1/2, 1, 3/2, ...} and projections m are represented exactly.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int integer_value) : twice_(2 * integer_value) {}  // NOLINT implicit

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return !is_integer(); }
  constexpr bool is_nonnegative() const { return twice_ >= 0; }
  /// Integer value; only meaningful when is_integer().
  constexpr int as_int() const { return twice_ / 2; }
  /// Multiplicity 2j + 1.
  constexpr int multiplicity() const { return twice_ + 1; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr bool operator==(const HalfInt&) const = default;
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(as_int());
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return HalfInt::from_twice(h.twice() < 0 ? -h.twice() : h.twice()); }

/// True when both values are integers or both are half-odd.
constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.twice() - b.twice()) % 2) == 0; }

/// Triangle rule |a - b| <= c <= a + b with a + b + c integer.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  const int s = a.twice() + b.twice() + c.twice();
  if (s % 2 != 0) return false;
  const int d = a.twice() - b.twice();
  return c.twice() >= (d < 0 ? -d : d) && c.twice() <= a.twice() + b.twice();
}

/// (-1)^n for an integer-valued HalfInt; throws on a half-odd exponent.
inline int phase(HalfInt n) {
  if (!n.is_integer()) throw InputError("phase exponent " + n.str() + " is not an integer");
  return (n.as_int() % 2 == 0) ? 1 : -1;
}

namespace literals {
/// 3_half == 3/2, 2_half == 1.
constexpr HalfInt operator""_half(unsigned long long twice) { return HalfInt::from_twice(static_cast<int>(twice)); }
}  // namespace literals

}  // namespace h2plus
