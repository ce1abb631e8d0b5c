#pragma once

#include "gln/infparam.hpp"
#include "gln/multisegment.hpp"
#include "gln/perm.hpp"

namespace gln {

// Maximal-length representative of the double coset of S_e \ S_N / S_e
// attached to a multisegment with support lambda.  Multiple lines concatenate
// block-diagonally in line-key order.
Permutation encode(const InfinitesimalParameter& lambda, const Multisegment& ms);

}  // namespace gln
