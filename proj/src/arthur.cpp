#include "gln/arthur.hpp"

#include <algorithm>
#include <tuple>

#include "gln/errors.hpp"

namespace gln {

ArthurComponent::ArthurComponent(LineId l, int aa, int bb)
    : line(std::move(l)), a(aa), b(bb) {
  if (a < 1 || b < 1) throw ParseError("Arthur component needs a >= 1 and b >= 1");
}

static bool comp_less(const ArthurComponent& x, const ArthurComponent& y) {
  return std::make_tuple(x.line.label, x.line.base_degree, -x.a, -x.b) <
         std::make_tuple(y.line.label, y.line.base_degree, -y.a, -y.b);
}

ArthurParameter::ArthurParameter(std::vector<ArthurComponent> comps)
    : comps_(std::move(comps)) {
  if (comps_.empty()) throw ParseError("Arthur parameter needs at least one component");
  std::sort(comps_.begin(), comps_.end(), comp_less);
}

long ArthurParameter::degree() const {
  long n = 0;
  for (const auto& c : comps_) n += c.degree();
  return n;
}

Multisegment phi_of(const ArthurComponent& comp) {
  std::vector<Segment> segs;
  segs.reserve(comp.b);
  for (int j = 0; j < comp.b; ++j) {
    int center2 = 2 * j - (comp.b - 1);
    segs.emplace_back(comp.line, HalfInt(center2 - (comp.a - 1)),
                      HalfInt(center2 + (comp.a - 1)));
  }
  return Multisegment(std::move(segs));
}

Multisegment phi_of(const ArthurParameter& psi) {
  std::vector<Segment> segs;
  for (const auto& comp : psi.components()) {
    auto part = phi_of(comp);
    segs.insert(segs.end(), part.segments().begin(), part.segments().end());
  }
  return Multisegment(std::move(segs));
}

InfinitesimalParameter infinitesimal(const ArthurParameter& psi) {
  InfinitesimalParameter lambda;
  for (const auto& comp : psi.components())
    for (int p = -(comp.a - 1); p <= comp.a - 1; p += 2)
      for (int q = -(comp.b - 1); q <= comp.b - 1; q += 2)
        lambda.add(comp.line, HalfInt(p + q));
  return lambda;
}

ArthurParameter psi_hat(const ArthurParameter& psi) {
  std::vector<ArthurComponent> comps;
  comps.reserve(psi.components().size());
  for (const auto& c : psi.components()) comps.emplace_back(c.line, c.b, c.a);
  return ArthurParameter(std::move(comps));
}

Multisegment pi_of(const ArthurParameter& psi) { return phi_of(psi); }

std::vector<std::pair<int, ArthurParameter>> levi_of(const ArthurParameter& psi) {
  std::vector<std::pair<int, ArthurParameter>> blocks;
  blocks.reserve(psi.components().size());
  for (const auto& c : psi.components())
    blocks.emplace_back(c.degree(), ArthurParameter({c}));
  return blocks;
}

}  // namespace gln
