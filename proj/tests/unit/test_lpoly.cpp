#include <doctest.h>

#include <limits>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/lpoly.hpp"

using hz::LPoly;

TEST_CASE("lpoly arithmetic and rendering") {
  const LPoly L = LPoly::monomial(1);
  CHECK((LPoly(1) + L + LPoly::monomial(2, 2)).str() == "1 + L + 2L^2");
  CHECK(LPoly::torus_cell(1, 1) == L * L - L);
  CHECK(LPoly::torus_cell(2, 0).str() == "1 - 2L + L^2");
  CHECK((L - L).is_zero());
  CHECK(LPoly().str() == "0");
  CHECK((L * L * L).eval(3) == 27);
  CHECK((-L).str() == "-L");
  CHECK(LPoly::monomial(2, 3).latex() == "3\\mathbb{L}^{2}");
  CHECK(LPoly::from_coeffs({0, 0, 0}).degree() == -1);
}

TEST_CASE("lpoly overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(hz::checked_add(big, 1), hz::Error);
  CHECK_THROWS_AS(hz::checked_mul(big, 2), hz::Error);
  CHECK(hz::checked_mul(-3, 4) == -12);
}
