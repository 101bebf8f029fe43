#include <random>

#include "doctest.h"
#include "polar/algebraic.hpp"

using namespace polar;

namespace {

APoly P(std::initializer_list<Rational> cs) {
  std::vector<Algebraic> v;
  for (const auto& c : cs) v.emplace_back(c);
  return APoly(std::move(v));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("univariate gcd and squarefree decomposition over Q") {
  // (z-1)^2 (z+2)
  APoly p = P({2, -3, 0, 1});
  auto sq = squarefree_decomposition(p);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == P({2, 1}));
  CHECK(sq[0].second == 1);
  CHECK(sq[1].first == P({-1, 1}));
  CHECK(sq[1].second == 2);
  CHECK(gcd(p, p.derivative()) == P({-1, 1}));
}

TEST_CASE("subresultant resultant of small polynomials") {
  // Res(z^2 - 2, z - 3) = 9 - 2
  CHECK(subresultant_resultant(P({-2, 0, 1}), P({-3, 1})) == Algebraic(7));
  // Res(z - 3, z^2 - 2) = 7 as well (degrees 1,2)
  CHECK(subresultant_resultant(P({-3, 1}), P({-2, 0, 1})) == Algebraic(7));
  // common root
  CHECK(is_structural_zero(subresultant_resultant(P({-1, 0, 1}), P({-1, 1}))));
}

TEST_CASE("adjoin_root") {
  auto lin = adjoin_root(nullptr, P({-3, 1}));
  CHECK(lin.level == nullptr);
  CHECK(lin.root == Algebraic(3));

  auto sq2 = adjoin_root(nullptr, P({-2, 0, 1}), "r");
  REQUIRE(sq2.level);
  CHECK(sq2.level->degree() == 2);
  CHECK(sq2.root * sq2.root == Algebraic(2));

  // 4 z^3 - 12, i.e. a root of z^3 - 3
  auto cube = adjoin_root(nullptr, P({-12, 0, 0, 4}), "w");
  CHECK(cube.level->degree() == 3);
  CHECK(pow(cube.root, 3) == Algebraic(3));

  CHECK_THROWS_AS(adjoin_root(nullptr, P({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("tower arithmetic laws") {
  auto a = adjoin_root(nullptr, P({-2, 0, 1}), "s");
  auto b = adjoin_root(a.level, APoly({Algebraic(-3), Algebraic(0), Algebraic(1)}), "u");
  const Algebraic s = a.root, u = b.root;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&] { return Algebraic(d(rng)) + Algebraic(d(rng)) * s + (Algebraic(d(rng)) + Algebraic(d(rng)) * s) * u; };
  for (int trial = 0; trial < 30; ++trial) {
    Algebraic x = rnd(), y = rnd(), z = rnd();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_structural_zero()) CHECK(x * inverse(x) == Algebraic(1));
  }
  CHECK(u * u * s * s == Algebraic(6));
}

TEST_CASE("D5 split on a reducible defining polynomial") {
  // z^2 - 1 is squarefree but reducible: z - 1 is a zero divisor.
  auto r = adjoin_root_unchecked(nullptr, P({-1, 0, 1}), "e");
  const Algebraic zd = r.root - Algebraic(1);
  try {
    (void)inverse(zd);
    FAIL("expected a split");
  } catch (const TowerSplit& split) {
    CHECK(split.first().degree() + split.second().degree() == 2);
    CHECK(split.first() * split.second() == P({-1, 0, 1}));
    for (const APoly* f : {&split.first(), &split.second()}) {
      LevelRemap map = make_component(split.level(), *f);
      Algebraic img = remap(zd, map);
      CHECK(img.is_rational());
    }
  }
  CHECK_THROWS_AS(is_zero(zd), TowerSplit);
}

TEST_CASE("is_squarefree examples") {
  // z^4 - 3 z^2 - (c - 1)
  auto q = [](Rational c) { return P({Rational(1 - c), 0, -3, 0, 1}); };
  CHECK(is_squarefree(q(0)));
  CHECK_FALSE(is_squarefree(q(Rational(-5, 4))));
  CHECK_FALSE(is_squarefree(P({0, 0, 1})));

  // over a reducible level: y^2 - e^2 where e^2 = 1 is y^2 - 1 everywhere.
  auto r = adjoin_root_unchecked(nullptr, P({-1, 0, 1}), "e");
  const Algebraic e = r.root;
  APoly sq({Algebraic(0) - e - Algebraic(1), Algebraic(0), Algebraic(1)});  // y^2 - (e+1)
  // on e = 1: y^2 - 2 squarefree; on e = -1: y^2, not squarefree
  CHECK_FALSE(is_squarefree(sq));
}
