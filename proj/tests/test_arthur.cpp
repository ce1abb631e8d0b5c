#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gln/arthur.hpp"
#include "gln/errors.hpp"
#include "gln/textio.hpp"
#include "util.hpp"

using namespace gln;

TEST_CASE("parse and render parameters") {
  ArthurParameter psi = parse_arthur("(a=2,b=2)");
  CHECK(psi.components().size() == 1);
  CHECK(psi.degree() == 4);
  CHECK(render(psi) == "(a=2,b=2)");

  ArthurParameter two = parse_arthur("(a=1,b=1)+(a=2,b=3)");
  CHECK(two.degree() == 7);
  CHECK(render(two) == "(a=2,b=3)+(a=1,b=1)");
  CHECK(parse_arthur(render(two)) == two);

  CHECK(render(parse_arthur("(a=1,b=2)@rho")) == "(a=1,b=2)@rho");
  for (const char* bad : {"", "(a=0,b=1)", "(a=1)", "(a=1,b=-2)", "(a=1,b=1)+"})
    CHECK_THROWS_AS(parse_arthur(bad), ParseError);
}

TEST_CASE("langlands parameter of a component") {
  CHECK(render(phi_of(parse_arthur("(a=1,b=1)"))) == "[0]");
  CHECK(render(phi_of(parse_arthur("(a=3,b=1)"))) == "[-1,1]");
  CHECK(render(phi_of(parse_arthur("(a=1,b=3)"))) == "[1]+[0]+[-1]");
  CHECK(render(phi_of(parse_arthur("(a=2,b=2)"))) == "[0,1]+[-1,0]");
  CHECK(render(phi_of(parse_arthur("(a=2,b=1)"))) == "[-1/2,1/2]");
  CHECK(render(phi_of(parse_arthur("(a=1,b=2)"))) == "[1/2]+[-1/2]");
  CHECK(render(phi_of(parse_arthur("(a=3,b=2)"))) == "[-1/2,3/2]+[-3/2,1/2]");
  CHECK(phi_of(parse_arthur("(a=2,b=2)+(a=1,b=1)")) ==
        parse_multisegment("[0,1]+[-1,0]+[0]"));
}

TEST_CASE("degree and infinitesimal parameter") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& psi : testutil::one_line_psis(n)) {
      CHECK(psi.degree() == n);
      CHECK(phi_of(psi).degree() == n);
      CHECK(infinitesimal(psi) == support(phi_of(psi)));
      CHECK(pi_of(psi) == phi_of(psi));
    }
}

TEST_CASE("sl2 swap is an involution") {
  ArthurParameter psi = parse_arthur("(a=2,b=3)+(a=1,b=1)");
  ArthurParameter hat = psi_hat(psi);
  CHECK(render(hat) == "(a=3,b=2)+(a=1,b=1)");
  CHECK(psi_hat(hat) == psi);
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : testutil::one_line_psis(n)) {
      CHECK(psi_hat(psi_hat(p)) == p);
      CHECK(psi_hat(p).degree() == p.degree());
    }
}

TEST_CASE("levi blocks") {
  ArthurParameter psi = parse_arthur("(a=1,b=1)+(a=2,b=2)+(a=2,b=1)");
  auto levi = levi_of(psi);
  REQUIRE(levi.size() == 3);
  CHECK(levi[0].first == 4);
  CHECK(render(levi[0].second) == "(a=2,b=2)");
  CHECK(levi[1].first == 2);
  CHECK(render(levi[1].second) == "(a=2,b=1)");
  CHECK(levi[2].first == 1);
  CHECK(render(levi[2].second) == "(a=1,b=1)");

  long total = 0;
  for (const auto& [n, factor] : levi) {
    CHECK(factor.degree() == n);
    total += n;
  }
  CHECK(total == psi.degree());
}

TEST_CASE("component ordering is canonical") {
  ArthurParameter x = parse_arthur("(a=1,b=2)+(a=2,b=1)");
  ArthurParameter y = parse_arthur("(a=2,b=1)+(a=1,b=2)");
  CHECK(x == y);
  CHECK(x.components()[0].a == 2);
}
