#pragma once

#include <string>

#include "gln/arthur.hpp"
#include "gln/infparam.hpp"
#include "gln/multisegment.hpp"

namespace gln {

// Literal grammar:
//   ms   := seg ("+" seg)* | "0"
//   seg  := "[" half ("," half)? "]" ("@" label)?
//   half := int | int "/2"
//   psi  := comp ("+" comp)*
//   comp := "(a=" int ",b=" int ")" ("@" label)?
// Omitted labels default to line "1".
Multisegment parse_multisegment(const std::string& text);
ArthurParameter parse_arthur(const std::string& text);

// A lambda literal is any multisegment literal; its support is taken.
InfinitesimalParameter parse_lambda(const std::string& text);

std::string render(const Segment& s);
std::string render(const Multisegment& ms);
std::string render(const InfinitesimalParameter& lambda);
std::string render(const ArthurComponent& c);
std::string render(const ArthurParameter& psi);

}  // namespace gln
