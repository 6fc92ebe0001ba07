#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include <cfknot/curves.hpp>
#include <cfknot/errors.hpp>
#include <cfknot/parse.hpp>

using namespace cfknot;

namespace {

CurveClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-20, 20);
  for (;;) {
    const int m = dist(rng);
    const int n = dist(rng);
    if (m == 0 && n == 0) continue;
    if (std::gcd(std::abs(m), std::abs(n)) != 1) continue;
    return CurveClass(m, n);
  }
}

TwistWord random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length_dist(1, 6);
  std::uniform_int_distribution<int> exponent_dist(-4, 4);
  TwistWord word;
  const int length = length_dist(rng);
  for (int i = 0; i < length; ++i) {
    int exponent = 0;
    while (exponent == 0) {
      exponent = exponent_dist(rng);
    }
    word.letters.push_back({random_class(rng), exponent});
  }
  return word;
}

}  // namespace

TEST_CASE("curve classes canonicalize up to global sign") {
  CHECK(CurveClass(1, -2) == CurveClass(-1, 2));
  CHECK(CurveClass(-1, 0) == CurveClass::a());
  CHECK(CurveClass(0, -1) == CurveClass::b());
  CHECK_THROWS_AS(CurveClass(0, 0), PreconditionError);
  CHECK_THROWS_AS(CurveClass(2, 4), PreconditionError);
}

TEST_CASE("slope identification round trips") {
  const CurveClass c(3, 10);
  CHECK(CurveClass::from_slope(c.slope()) == c);
  CHECK(CurveClass::a().slope() == ProjectiveRational::infinity());
  CHECK(CurveClass::b().slope() == ProjectiveRational(0, 1));
}

TEST_CASE("curve_from_cf on the named examples") {
  CHECK(curve_from_cf({{3, -2}}) == CurveClass(2, 7));
  CHECK(curve_from_cf({{3, -2, 0}}) == CurveClass(1, 3));
  CHECK(curve_from_cf({{0}}) == CurveClass::a());
}

TEST_CASE("intersection numbers") {
  CHECK(intersection(CurveClass::a(), CurveClass::b()) == 1);
  CHECK(intersection(CurveClass(2, 7), CurveClass(1, 3)) == 1);
  CHECK(intersection(CurveClass(2, 7), CurveClass(2, 7)) == 0);
}

TEST_CASE("intersection is symmetric and unoriented") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const CurveClass c1 = random_class(rng);
    const CurveClass c2 = random_class(rng);
    const Int expected = abs(c1.m() * c2.n() - c1.n() * c2.m());
    CHECK(intersection(c1, c2) == expected);
    CHECK(intersection(c2, c1) == expected);
    // Any raw sign choice of either argument gives the same number.
    CHECK(abs((-c1.m()) * c2.n() - (-c1.n()) * c2.m()) == expected);
    CHECK(abs(c1.m() * (-c2.n()) - c1.n() * (-c2.m())) == expected);
    CHECK((intersection(c1, c2) == 0) == (c1 == c2));
  }
}

TEST_CASE("knot_class closed form") {
  CHECK(knot_class(FamilyParams(3, 2, 0)) == CurveClass(1, 3));
  CHECK(knot_class(FamilyParams(3, 2, 5)) == CurveClass(11, 38));
  CHECK(knot_class(FamilyParams(3, 2, 1)) == CurveClass(3, 10));
  CHECK(knot_class(FamilyParams(3, 2, 1)) == curve_from_cf({{3, -2, 1}}));
  // Negative twist counts flip into the canonical representative.
  CHECK(knot_class(FamilyParams(3, 2, -1)) == CurveClass(-1, -4));
  CHECK(knot_class(FamilyParams(3, 2, -1)) == curve_from_cf({{3, -2, -1}}));
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(FamilyParams(2, 2, 5), PreconditionError);
  CHECK_THROWS_AS(FamilyParams(3, 1, 5), PreconditionError);
  CHECK_NOTHROW(FamilyParams(3, 2, -7));
}

TEST_CASE("twist action on the named examples") {
  const TwistWord word = parse_twist_word("b^-3 a^2 b^-5");
  CHECK(apply_twist_word(word, CurveClass::a()) == CurveClass(11, 38));

  for (int k : {-3, 1, 7}) {
    CHECK(apply_twist_word({{{CurveClass::a(), k}}}, CurveClass::a()) ==
          CurveClass::a());
  }
  CHECK(apply_twist_word({{{CurveClass::b(), -1}}}, CurveClass::a()) ==
        CurveClass(1, 1));
}

TEST_CASE("zero exponents are rejected by the action") {
  CHECK_THROWS_AS(apply_twist_word({{{CurveClass::b(), 0}}}, CurveClass::a()),
                  PreconditionError);
}

TEST_CASE("family word, continued fraction and closed form agree") {
  for (int r = 3; r <= 6; ++r) {
    for (int s = 2; s <= 4; ++s) {
      for (int n = 0; n <= 8; ++n) {
        const FamilyParams params(r, s, n);
        const CurveClass expected = knot_class(params);
        CHECK(curve_from_cf(family_cf(params)) == expected);
        CHECK(apply_twist_word(family_twist_word(params), CurveClass::a()) ==
              expected);
      }
    }
  }
}

TEST_CASE("family word omits the zero twist") {
  CHECK(family_twist_word(FamilyParams(3, 2, 0)).letters.size() == 2);
  CHECK(family_twist_word(FamilyParams(3, 2, 5)).letters.size() == 3);
}

TEST_CASE("intersections across the family") {
  for (int r = 3; r <= 6; ++r) {
    for (int s = 2; s <= 4; ++s) {
      const CurveClass ktw = ktw_class(r, s);
      const CurveClass k0 = k0_class(r);
      CHECK(intersection(ktw, k0) == 1);
      for (int n = 0; n <= 8; ++n) {
        const CurveClass kn = knot_class(FamilyParams(r, s, n));
        CHECK(intersection(ktw, kn) == 1);
        CHECK(intersection(k0, kn) == n);
      }
    }
  }
}

TEST_CASE("linearity identity on raw pairs") {
  CHECK(twist_linearity_check(FamilyParams(3, 2, 5)));
  CHECK(twist_linearity_check(FamilyParams(3, 2, 0)));
  CHECK(twist_linearity_check(FamilyParams(10, 7, 19)));
  CHECK(twist_linearity_check(FamilyParams(5, 3, -11)));
}

TEST_CASE("twist words invert") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    const TwistWord word = random_word(rng);
    const CurveClass start = random_class(rng);
    const CurveClass image = apply_twist_word(word, start);
    CHECK(apply_twist_word(word.inverse(), image) == start);
  }
}

TEST_CASE("parse_twist_word rejects malformed letters") {
  CHECK_THROWS_AS(parse_twist_word("b^"), ParseError);
  CHECK_THROWS_AS(parse_twist_word("^3"), ParseError);
  CHECK_THROWS_AS(parse_twist_word("q^3"), ParseError);
  CHECK_NOTHROW(parse_twist_word("2/7^3 b^-1"));
}
