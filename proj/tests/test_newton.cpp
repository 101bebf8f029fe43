#include "doctest.h"
#include "polar/equisingularity.hpp"
#include "polar/implicit.hpp"
#include "polar/newton.hpp"
#include "polar/puiseux.hpp"

#include <random>

using namespace polar;

namespace {

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Bivariate mono(long c, int i, int j) { return Bivariate::monomial(Algebraic(c), i, j); }

// f(a x, b y)
Bivariate scaled_xy(const Bivariate& f, const Rational& a, const Rational& b) {
  Bivariate out;
  for (const auto& [k, c] : f.terms())
    out += Bivariate::monomial(c * pow(Algebraic(a), k.first) * pow(Algebraic(b), k.second), k.first, k.second);
  return out;
}

NumericalSemigroup S(std::vector<int> g) { return NumericalSemigroup(std::move(g)); }

// Lower convex hull of a point set, checked by brute force: a point of the
// support is a vertex iff no pair of other support points dominates it.
std::vector<LatticePoint> hull_by_brute_force(const Bivariate& f) {
  std::vector<LatticePoint> pts;
  for (const auto& [k, c] : f.terms()) pts.push_back(k);
  std::vector<LatticePoint> out;
  for (const auto& p : pts) {
    bool inside = false;
    for (const auto& q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second) inside = true;
    for (std::size_t a = 0; a < pts.size() && !inside; ++a)
      for (std::size_t b = 0; b < pts.size() && !inside; ++b) {
        const auto& u = pts[a];
        const auto& v = pts[b];
        if (u == p || v == p || u.first >= p.first || v.first <= p.first) continue;
        // p on or above the segment uv (Newton diagram with the positive quadrant added)
        const long lhs = static_cast<long>(p.second - u.second) * (v.first - u.first);
        const long rhs = static_cast<long>(v.second - u.second) * (p.first - u.first);
        if (lhs >= rhs) inside = true;
      }
    if (!inside) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Newton polygon vertices and side polynomials") {
  // y^3 + x^4 y + x^11 = y (y^2 + x^4) + x^11
  const Bivariate f = mono(1, 0, 3) + mono(1, 4, 1) + mono(1, 11, 0);
  const NewtonPolygon np = newton_polygon(f);
  CHECK(np.vertices == std::vector<LatticePoint>{{0, 3}, {4, 1}, {11, 0}});
  REQUIRE(np.sides.size() == 2);
  CHECK(np.sides[0].inclination() == Q(2));
  CHECK(np.sides[1].inclination() == Q(7));
  CHECK(is_newton_nondegenerate(f));
  const auto s1 = S({1});
  CHECK(nondegenerate_type(np) == EquisingularityType({s1, s1, s1}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
  // the point (8,1) lies above the segment from (0,3) to (11,0)
  CHECK(newton_polygon(mono(1, 0, 3) - mono(1, 11, 0) + mono(1, 8, 1)).sides.size() == 1);
  // (y^2 - x^3)^2 has a double root on its only side
  const Bivariate g = mono(1, 0, 2) - mono(1, 3, 0);
  CHECK_FALSE(is_newton_nondegenerate(g * g));
  CHECK_THROWS_AS(is_newton_nondegenerate(mono(1, 1, 0) * g), AxisFactorError);
}

TEST_CASE("polygon of a product is the Minkowski sum") {
  std::mt19937_64 rng(3);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int round = 0; round < 30; ++round) {
    Bivariate f, g;
    for (int i = 0; i < 4; ++i) f += mono(pick(5) + 1, pick(7), pick(4));
    for (int i = 0; i < 4; ++i) g += mono(pick(5) + 1, pick(7), pick(4));
    if (f.is_zero() || g.is_zero()) continue;
    const NewtonPolygon a = newton_polygon(f), b = newton_polygon(g), ab = newton_polygon(f * g);
    CHECK(ab.vertices == hull_by_brute_force(f * g));
    // slopes of the product are the union of the slopes, heights add per slope
    std::map<Rational, int> want, got;
    for (const auto& s : a.sides) want[s.inclination()] += s.height();
    for (const auto& s : b.sides) want[s.inclination()] += s.height();
    for (const auto& s : ab.sides) got[s.inclination()] += s.height();
    CHECK(got == want);
    if (got != want) MESSAGE(f.to_string() << " | " << g.to_string());
    CHECK(ab.x_power == a.x_power + b.x_power);
    CHECK(ab.y_power == a.y_power + b.y_power);
  }
}

TEST_CASE("types are invariant under diagonal scaling") {
  const std::vector<Bivariate> germs = {
      mono(1, 0, 3) - mono(1, 11, 0) + mono(1, 8, 1),
      mono(1, 0, 4) - mono(2, 3, 2) + mono(1, 6, 0) - mono(4, 5, 1) - mono(1, 7, 0),
      polar_curve(implicitize(PuiseuxBranch(5, {{12, 1}, {21, 1}})), Algebraic(2), Algebraic(-3)),
  };
  for (const auto& f : germs) {
    const EquisingularityType t = equisingularity_type(f);
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{Q(2), Q(3)}, {Q(-1, 5), Q(7)}, {Q(9, 4), Q(-2, 3)}}) {
      CHECK(equisingularity_type(scaled_xy(f, a, b)) == t);
      CHECK(equisingularity_type_by_expansion(scaled_xy(f, a, b)) == t);
    }
  }
}

TEST_CASE("polygon reading agrees with the expansion") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    Bivariate f = mono(1, 0, 2 + static_cast<int>(rng() % 3)) + mono(1, 3 + static_cast<int>(rng() % 9), 0);
    for (int i = 0; i < 2; ++i) {
      const long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) f += mono(c, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 2));
    }
    if (!is_newton_nondegenerate(f)) continue;
    CHECK(nondegenerate_type(newton_polygon(f)) == equisingularity_type_by_expansion(f));
    ++checked;
  }
  CHECK(checked > 15);
}

TEST_CASE("canonical order of types") {
  const auto a = S({1}), b = S({2, 5}), c = S({3, 7});
  const EquisingularityType t1({a, b, c}, {{0, 2, 3}, {2, 0, 5}, {3, 5, 0}});
  const EquisingularityType t2({c, a, b}, {{0, 3, 5}, {3, 0, 2}, {5, 2, 0}});
  const EquisingularityType t3({b, c, a}, {{0, 5, 2}, {5, 0, 3}, {2, 3, 0}});
  CHECK(t1 == t2);
  CHECK(t2 == t3);
  const EquisingularityType again(t1.branches(), t1.intersections());
  CHECK(again == t1);
  CHECK(again.intersections() == t1.intersections());
  CHECK(t1.to_string() == t3.to_string());
  // same branches, different pairing
  const EquisingularityType t4({a, b, c}, {{0, 3, 2}, {3, 0, 5}, {2, 5, 0}});
  CHECK(t4 != t1);
  CHECK(((t1 < t4) != (t4 < t1)));
}
