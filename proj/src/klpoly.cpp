#include "gln/klpoly.hpp"

#include <algorithm>

namespace gln {

std::int64_t KlPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto c : c_) s += c;
  return s;
}

KlPoly& KlPoly::operator+=(const KlPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

KlPoly& KlPoly::operator-=(const KlPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

void KlPoly::add_shifted(const KlPoly& f, int shift, std::int64_t scale) {
  if (f.is_zero() || scale == 0) return;
  if (f.c_.size() + shift > c_.size()) c_.resize(f.c_.size() + shift, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i) c_[i + shift] += scale * f.c_[i];
  trim();
}

KlPoly KlPoly::times_q(int shift) const {
  if (is_zero()) return KlPoly();
  std::vector<std::int64_t> out(c_.size() + shift, 0);
  std::copy(c_.begin(), c_.end(), out.begin() + shift);
  return KlPoly(std::move(out));
}

std::string KlPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out;
}

void KlPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

KlPoly operator*(const KlPoly& f, const KlPoly& g) {
  if (f.is_zero() || g.is_zero()) return KlPoly();
  std::vector<std::int64_t> out(f.c_.size() + g.c_.size() - 1, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i)
    for (std::size_t j = 0; j < g.c_.size(); ++j)
      out[i + j] += f.c_[i] * g.c_[j];
  return KlPoly(std::move(out));
}

}  // namespace gln
