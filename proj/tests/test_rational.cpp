#include <doctest.h>

#include <string>

#include <cfknot/errors.hpp>
#include <cfknot/parse.hpp>
#include <cfknot/rational.hpp>

using namespace cfknot;

TEST_CASE("construction reduces and fixes the sign") {
  CHECK(ProjectiveRational(4, 14) == ProjectiveRational(2, 7));
  CHECK(ProjectiveRational(-4, 14).str() == "-2/7");
  CHECK(ProjectiveRational(4, -14).str() == "-2/7");
  CHECK(ProjectiveRational(-4, -14).str() == "2/7");
  CHECK(ProjectiveRational(0, -5).str() == "0/1");
  CHECK(ProjectiveRational(9, 3).str() == "3/1");
}

TEST_CASE("zero over zero is rejected") {
  CHECK_THROWS_AS(ProjectiveRational(0, 0), PreconditionError);
}

TEST_CASE("infinity has exactly one representative") {
  CHECK(ProjectiveRational(7, 0) == ProjectiveRational::infinity());
  CHECK(ProjectiveRational(-7, 0) == ProjectiveRational::infinity());
  CHECK(ProjectiveRational::infinity().str() == "1/0");
  CHECK(ProjectiveRational::infinity().is_infinity());
  CHECK_FALSE(ProjectiveRational(1, 2).is_infinity());
}

TEST_CASE("default value is zero") {
  CHECK(ProjectiveRational() == ProjectiveRational(0, 1));
  CHECK(ProjectiveRational().is_zero());
}

TEST_CASE("equality is structural on canonical forms") {
  CHECK(ProjectiveRational(2, 7) == ProjectiveRational(-2, -7));
  CHECK(ProjectiveRational(2, 7) != ProjectiveRational(2, 9));
  CHECK(ProjectiveRational(1, 2) != ProjectiveRational(-1, 2));
}

TEST_CASE("parse_rational accepts fractions and bare integers") {
  CHECK(parse_rational("2/7") == ProjectiveRational(2, 7));
  CHECK(parse_rational("-2/7") == ProjectiveRational(-2, 7));
  CHECK(parse_rational("5") == ProjectiveRational(5, 1));
  CHECK(parse_rational("1/0") == ProjectiveRational::infinity());
}

TEST_CASE("parse_rational names the offending token") {
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  try {
    parse_rational("x/7");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
}
