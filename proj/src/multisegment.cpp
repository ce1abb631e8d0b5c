#include "gln/multisegment.hpp"

#include <algorithm>
#include <tuple>

#include "gln/infparam.hpp"

namespace gln {

Segment::Segment(LineId l, HalfInt lo, HalfInt hi) : line(std::move(l)), a(lo), b(hi) {
  if (b < a || (b.twice - a.twice) % 2 != 0)
    throw ParseError("segment endpoints must satisfy a <= b with b - a integral");
}

bool canonical_segment_less(const Segment& s, const Segment& t) {
  return std::make_tuple(-s.b.twice, s.a.twice, s.line.label, s.line.base_degree) <
         std::make_tuple(-t.b.twice, t.a.twice, t.line.label, t.line.base_degree);
}

bool precedes(const Segment& d1, const Segment& d2) {
  if (d1.line != d2.line) return false;
  if ((d2.a.twice - d1.a.twice) % 2 != 0) return false;  // no integral shift
  // Strict shift to the right with the union still a segment; containment in
  // either direction is excluded by the strict endpoint inequalities.
  return d2.a > d1.a && d2.b > d1.b && d2.a.twice <= d1.b.twice + 2;
}

bool linked(const Segment& d1, const Segment& d2) {
  return precedes(d1, d2) || precedes(d2, d1);
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end(), canonical_segment_less);
}

long Multisegment::degree() const {
  long n = 0;
  for (const auto& s : segs_) n += static_cast<long>(s.line.base_degree) * s.length();
  return n;
}

bool Multisegment::lex_less(const Multisegment& other) const {
  return std::lexicographical_compare(segs_.begin(), segs_.end(),
                                      other.segs_.begin(), other.segs_.end(),
                                      canonical_segment_less);
}

Multisegment canonicalize(std::vector<Segment> segs) {
  return Multisegment(std::move(segs));
}

InfinitesimalParameter support(const Multisegment& ms) {
  InfinitesimalParameter lambda;
  for (const auto& s : ms.segments())
    for (HalfInt x = s.a; x <= s.b; x = x.succ()) lambda.add(s.line, x);
  return lambda;
}

Multisegment concat(const Multisegment& x, const Multisegment& y) {
  std::vector<Segment> all = x.segments();
  all.insert(all.end(), y.segments().begin(), y.segments().end());
  return Multisegment(std::move(all));
}

Multisegment negate_exponents(const Multisegment& ms) {
  std::vector<Segment> out;
  out.reserve(ms.size());
  for (const auto& s : ms.segments()) out.emplace_back(s.line, -s.b, -s.a);
  return Multisegment(std::move(out));
}

}  // namespace gln
