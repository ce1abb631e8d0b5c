#pragma once

#include <compare>
#include <string>
#include <tuple>

namespace gln {

// Exact half-integer; stores twice the value so all arithmetic stays integral.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int t) : twice(t) {}

  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  // 0 for integers, 1 for half-odd-integers.
  constexpr int parity() const { return ((twice % 2) + 2) % 2; }

  constexpr HalfInt succ() const { return HalfInt(twice + 2); }
  constexpr HalfInt pred() const { return HalfInt(twice - 2); }
  constexpr HalfInt operator-() const { return HalfInt(-twice); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

// Cuspidal line label plus the degree of the underlying supercuspidal.
struct LineId {
  std::string label = "1";
  int base_degree = 1;

  friend auto operator<=>(const LineId& x, const LineId& y) {
    return std::tie(x.label, x.base_degree) <=> std::tie(y.label, y.base_degree);
  }
  friend bool operator==(const LineId&, const LineId&) = default;
};

// Exponents on one line interact only when they differ by an integer, so the
// working key carries the parity class alongside the line.
struct LineKey {
  LineId line{};
  int parity = 0;

  friend auto operator<=>(const LineKey& x, const LineKey& y) {
    return std::tie(x.line, x.parity) <=> std::tie(y.line, y.parity);
  }
  friend bool operator==(const LineKey&, const LineKey&) = default;
};

}  // namespace gln
