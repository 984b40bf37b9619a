#include <doctest.h>

#include "coclass/errors.hpp"
#include "coclass/presentation.hpp"

using coclass::Word;

TEST_CASE("presentation parsing") {
  const auto p = coclass::parse_presentation(
      "gens x y\n"
      "x^3  # cube\n"
      "let s2 = [y,x]\n"
      "rel s2^3\n"
      "[s2,x] = 1\n"
      "xyX = y\n");
  CHECK(p.generator_count() == 2);
  REQUIRE(p.relators.size() == 4);
  CHECK(p.relators[0] == Word{1, 1, 1});
  CHECK(p.relators[1].size() == 12);
  CHECK(p.relators[3] == Word{1, 2, -1, -2});
}

TEST_CASE("commutators are left-normed") {
  const auto p = coclass::parse_presentation("gens a b\n[a,b,a]\n");
  const Word a{1}, b{2};
  CHECK(p.relators[0] ==
        coclass::free_reduce(coclass::commutator(coclass::commutator(a, b), a)));
}

TEST_CASE("presentation errors") {
  CHECK_THROWS_AS(coclass::parse_presentation("x^3"), coclass::ParseError);
  CHECK_THROWS_AS(coclass::parse_presentation("gens x\nz^3"), coclass::ParseError);
  CHECK_THROWS_AS(coclass::parse_presentation("gens x\n[x"), coclass::ParseError);
  CHECK_THROWS_AS(coclass::parse_presentation("gens x\nx^"), coclass::ParseError);
  coclass::Presentation bad{{"x"}, {{1, 2}}};
  CHECK_THROWS_AS(bad.validate(), coclass::InvalidPresentation);
}

TEST_CASE("format round trip") {
  const auto p = coclass::parse_presentation("gens x y\nx^3\n[y,x]^3\nY^2 x^-1\n");
  const auto q = coclass::parse_presentation(coclass::format_presentation(p));
  CHECK(p.relators == q.relators);
  CHECK(coclass::format_word({1, 1, -2}, p.generator_names) == "x^2 y^-1");
}
