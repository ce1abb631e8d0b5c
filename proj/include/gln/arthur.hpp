#pragma once

#include <utility>
#include <vector>

#include "gln/infparam.hpp"
#include "gln/multisegment.hpp"

namespace gln {

// One factor of an Arthur parameter: line tensor S_a (Deligne SL2) tensor
// S_b (Arthur SL2), centered at exponent zero.
struct ArthurComponent {
  LineId line{};
  int a = 1;
  int b = 1;

  ArthurComponent() = default;
  ArthurComponent(LineId l, int aa, int bb);

  int degree() const { return line.base_degree * a * b; }

  friend bool operator==(const ArthurComponent&, const ArthurComponent&) = default;
};

// Kept sorted by (line, a desc, b desc); must be non-empty.
class ArthurParameter {
 public:
  explicit ArthurParameter(std::vector<ArthurComponent> comps);

  const std::vector<ArthurComponent>& components() const { return comps_; }
  long degree() const;

  friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;

 private:
  std::vector<ArthurComponent> comps_;
};

// Langlands parameter of psi: each component (a,b) contributes b segments of
// length a centered at the b weights of the Arthur SL2.
Multisegment phi_of(const ArthurParameter& psi);
Multisegment phi_of(const ArthurComponent& comp);

InfinitesimalParameter infinitesimal(const ArthurParameter& psi);

// Swap the two SL2 factors.
ArthurParameter psi_hat(const ArthurParameter& psi);

// Langlands quotient attached to psi, named by its multisegment.
Multisegment pi_of(const ArthurParameter& psi);

// Levi blocks: one GL(a*b*base_degree) factor per component, canonical order.
std::vector<std::pair<int, ArthurParameter>> levi_of(const ArthurParameter& psi);

}  // namespace gln
