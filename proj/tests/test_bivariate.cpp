#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polar/local.hpp"
#include "polar/series.hpp"

using namespace polar;

namespace {

Bivariate M(long c, int i, int j) { return Bivariate::monomial(Algebraic(c), i, j); }

Bivariate random_bivariate(std::mt19937_64& rng, int max_dy) {
  std::uniform_int_distribution<int> coef(-10, 10), deg(1, max_dy), dx(0, 3);
  Bivariate f;
  const int dy = deg(rng);
  for (int j = 0; j <= dy; ++j)
    for (int i = 0; i <= 3; ++i)
      if (dx(rng) >= i) f.add_term(i, j, Algebraic(coef(rng)));
  if (f.degree_y() < 1) f.add_term(0, 1, Algebraic(1));
  return f;
}

}  // namespace

TEST_CASE("resultant_y examples") {
  const Bivariate y = Bivariate::y(), x = Bivariate::x();
  // f(0) up to the Sylvester sign convention
  CHECK(resultant_y(M(1, 0, 2) - M(1, 3, 0), y) == APoly::monomial(Algebraic(-1), 3));
  CHECK(resultant_y(M(1, 0, 2) - M(1, 3, 0), y) == oracle::sylvester_resultant(M(1, 0, 2) - M(1, 3, 0), y));
  CHECK(x_order(resultant_y(y - x, y + x)) == 1);
  const Bivariate f = M(1, 0, 3) - M(1, 11, 0);
  CHECK(x_order(resultant_y(f.derivative_x(), f.derivative_y())) == 20);
  CHECK_THROWS_AS(resultant_y(x, x + Bivariate(1)), std::invalid_argument);
}

TEST_CASE("subresultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Bivariate f = random_bivariate(rng, 4), g = random_bivariate(rng, 4);
    CHECK(resultant_y(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    const Bivariate f = random_bivariate(rng, 3), g = random_bivariate(rng, 2), h = random_bivariate(rng, 2);
    CHECK(resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h));
  }
}

TEST_CASE("local intersection numbers") {
  const Bivariate x = Bivariate::x(), y = Bivariate::y();
  const Bivariate cusp = M(1, 0, 2) - M(1, 3, 0);
  CHECK(local_intersection(cusp.derivative_x(), cusp.derivative_y()) == 2);
  CHECK(local_intersection(cusp, y) == 3);
  CHECK(local_intersection(cusp, x) == 2);
  CHECK(local_intersection(x, y) == 1);
  // away from the origin
  CHECK(local_intersection(y - Bivariate(1), x) == 0);
  const Bivariate f = M(1, 0, 3) - M(1, 11, 0);
  CHECK(local_intersection(f.derivative_x(), f.derivative_y()) == 20);
  // neither germ y-general: x^2 and x - x y
  CHECK(local_intersection(x * x, x + x * y + M(1, 0, 5)) == 10);
  CHECK_THROWS_AS(local_intersection(x * y, x * (y + x)), NonIsolatedSingularityError);
}

TEST_CASE("truncated series orders") {
  const auto a = TruncatedSeries({0, 0, 3, 1}, 10);
  const auto b = TruncatedSeries({0, 1}, 6);
  CHECK(a.order() == 2);
  CHECK((a * b).order() == 3);
  CHECK((a * b).precision() == 8);
  CHECK_THROWS_AS(TruncatedSeries({0, 0}, 5).order(), TruncationError);
  // y^2 - x^3 on (t^2, t^3)
  const Bivariate cusp = M(1, 0, 2) - M(1, 3, 0);
  const auto s = compose(cusp, TruncatedSeries::monomial(1, 2), TruncatedSeries::monomial(1, 3));
  CHECK(s.is_structural_zero());
}
