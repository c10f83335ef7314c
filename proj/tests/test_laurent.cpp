#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "semiflag/laurent.hpp"

using namespace semiflag;

TEST_CASE("arithmetic and canonical form") {
  LaurentPoly v = LaurentPoly::monomial(1);
  LaurentPoly p = v * v - 3;
  CHECK(p.to_string() == "v^2 - 3");
  CHECK(p.to_json() == "{\"0\":-3,\"2\":1}");
  CHECK((p - p).is_zero());
  CHECK((v + v.bar()) * (v - v.bar()) == v * v - v.bar() * v.bar());
  CHECK(LaurentPoly::monomial(-2, -1).to_string() == "-v^-2");
  CHECK((LaurentPoly(2) * v.shift(2)).to_string() == "2v^3");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::from_map({{2, 1}, {0, -3}}) == p);
  CHECK(p.bar().to_string() == "-3 + v^-2");
}

TEST_CASE("degree predicates") {
  CHECK(LaurentPoly::monomial(1).in_positive_part());
  CHECK_FALSE(LaurentPoly(1).in_positive_part());
  CHECK((LaurentPoly(1) + LaurentPoly::monomial(-2, 2)).in_nonneg_v_minus_2());
  CHECK_FALSE(LaurentPoly::monomial(-1).in_nonneg_v_minus_2());
  CHECK_FALSE(LaurentPoly::monomial(2).in_nonneg_v_minus_2());
}

TEST_CASE("overflow is detected") {
  LaurentPoly big = LaurentPoly(std::int64_t(1) << 62);
  CHECK_THROWS_AS(big * 4, std::overflow_error);
}
