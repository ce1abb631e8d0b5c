#pragma once

#include <vector>

#include "gln/errors.hpp"
#include "gln/halfint.hpp"

namespace gln {

class InfinitesimalParameter;

// Segment [a,b] of exponents on one cuspidal line; a <= b, b - a integral.
struct Segment {
  LineId line{};
  HalfInt a{};
  HalfInt b{};

  Segment() = default;
  Segment(LineId l, HalfInt lo, HalfInt hi);

  int length() const { return (b.twice - a.twice) / 2 + 1; }
  LineKey key() const { return LineKey{line, a.parity()}; }
  bool contains(HalfInt x) const { return a <= x && x <= b && x.parity() == a.parity(); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Listing order: end descending, then start ascending, then line.
bool canonical_segment_less(const Segment& s, const Segment& t);

bool precedes(const Segment& d1, const Segment& d2);
bool linked(const Segment& d1, const Segment& d2);

// Always held in canonical order; Delta_i never precedes Delta_j for i < j.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  long degree() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  // Total order used for deterministic orbit listings.
  bool lex_less(const Multisegment& other) const;

 private:
  std::vector<Segment> segs_;
};

Multisegment canonicalize(std::vector<Segment> segs);
InfinitesimalParameter support(const Multisegment& ms);
Multisegment concat(const Multisegment& x, const Multisegment& y);
Multisegment negate_exponents(const Multisegment& ms);

}  // namespace gln
