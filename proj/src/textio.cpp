#include "gln/textio.hpp"

#include <cctype>
#include <sstream>

#include "gln/errors.hpp"

namespace gln {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool try_eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void eat(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }
  void eat(const std::string& word) {
    skip_ws();
    if (s_.compare(i_, word.size(), word) != 0) fail("expected '" + word + "'");
    i_ += word.size();
  }
  long integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected an integer");
    return std::stol(s_.substr(start, i_ - start));
  }
  HalfInt half() {
    long n = integer();
    std::size_t save = i_;
    if (try_eat('/')) {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '2') {
        ++i_;
        return HalfInt(static_cast<int>(n));
      }
      i_ = save;
      fail("only halves with denominator 2 are supported");
    }
    return HalfInt(static_cast<int>(2 * n));
  }
  std::string label() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
            s_[i_] == '.' || s_[i_] == '-'))
      ++i_;
    if (i_ == start) fail("expected a line label after '@'");
    return s_.substr(start, i_ - start);
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

Segment parse_segment(Cursor& cur) {
  cur.eat('[');
  HalfInt a = cur.half();
  HalfInt b = a;
  if (cur.try_eat(',')) b = cur.half();
  cur.eat(']');
  LineId line;
  if (cur.try_eat('@')) line.label = cur.label();
  if (b < a || (b.twice - a.twice) % 2 != 0)
    cur.fail("segment endpoints must satisfy a <= b with b - a integral");
  return Segment(line, a, b);
}

}  // namespace

Multisegment parse_multisegment(const std::string& text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.try_eat('0')) {
    if (!cur.done()) cur.fail("trailing input after \"0\"");
    return Multisegment();
  }
  std::vector<Segment> segs;
  segs.push_back(parse_segment(cur));
  while (cur.try_eat('+')) segs.push_back(parse_segment(cur));
  if (!cur.done()) cur.fail("trailing input");
  return Multisegment(std::move(segs));
}

ArthurParameter parse_arthur(const std::string& text) {
  Cursor cur(text);
  std::vector<ArthurComponent> comps;
  do {
    cur.eat('(');
    cur.eat(std::string("a"));
    cur.eat('=');
    long a = cur.integer();
    cur.eat(',');
    cur.eat(std::string("b"));
    cur.eat('=');
    long b = cur.integer();
    cur.eat(')');
    LineId line;
    if (cur.try_eat('@')) line.label = cur.label();
    if (a < 1 || b < 1) cur.fail("component needs a >= 1 and b >= 1");
    comps.emplace_back(line, static_cast<int>(a), static_cast<int>(b));
  } while (cur.try_eat('+'));
  if (!cur.done()) cur.fail("trailing input");
  return ArthurParameter(std::move(comps));
}

InfinitesimalParameter parse_lambda(const std::string& text) {
  return support(parse_multisegment(text));
}

std::string render(const Segment& s) {
  std::string out = "[" + s.a.str();
  if (s.b != s.a) out += "," + s.b.str();
  out += "]";
  if (!(s.line == LineId{})) out += "@" + s.line.label;
  return out;
}

std::string render(const Multisegment& ms) {
  if (ms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += "+";
    out += render(ms.segments()[i]);
  }
  return out;
}

std::string render(const InfinitesimalParameter& lambda) {
  if (lambda.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, xs] : lambda.lines()) {
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
      if (!first) out += "+";
      first = false;
      out += "[" + it->str() + "]";
      if (!(key.line == LineId{})) out += "@" + key.line.label;
    }
  }
  return out;
}

std::string render(const ArthurComponent& c) {
  std::string out = "(a=" + std::to_string(c.a) + ",b=" + std::to_string(c.b) + ")";
  if (!(c.line == LineId{})) out += "@" + c.line.label;
  return out;
}

std::string render(const ArthurParameter& psi) {
  std::string out;
  for (std::size_t i = 0; i < psi.components().size(); ++i) {
    if (i) out += "+";
    out += render(psi.components()[i]);
  }
  return out;
}

}  // namespace gln
