#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gln {

// Polynomial in q with integer coefficients, index = exponent.
class KlPoly {
 public:
  KlPoly() = default;  // zero
  explicit KlPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static KlPoly one() { return KlPoly({1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  std::int64_t eval_at_one() const;

  KlPoly& operator+=(const KlPoly& o);
  KlPoly& operator-=(const KlPoly& o);
  // this += f * q^shift * scale
  void add_shifted(const KlPoly& f, int shift, std::int64_t scale);
  KlPoly times_q(int shift) const;
  friend KlPoly operator*(const KlPoly& f, const KlPoly& g);

  std::string str() const;

  friend bool operator==(const KlPoly&, const KlPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace gln
