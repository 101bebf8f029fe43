#include "polar/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polar {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const Bivariate& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  NewtonPolygon np;
  np.x_power = f.x_power();
  np.y_power = f.y_power();
  std::vector<LatticePoint> pts;
  for (const auto& [k, c] : f.terms()) pts.push_back(k);
  std::sort(pts.begin(), pts.end());
  // lowest point of each column
  pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first == b.first; }), pts.end());
  // endpoint Z: lowest j, then lowest i
  LatticePoint z = pts.front();
  for (const auto& p : pts)
    if (p.second < z.second || (p.second == z.second && p.first < z.first)) z = p;
  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    if (p.first > z.first) break;
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  np.vertices = hull;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    Side side{hull[s], hull[s + 1], APoly()};
    const int n = side.height(), m = side.width();
    std::vector<Algebraic> pc(static_cast<std::size_t>(n) + 1);
    for (const auto& [k, c] : f.terms()) {
      if (k.second < side.end.second || k.second > side.start.second) continue;
      if (static_cast<long>(k.first - side.start.first) * n == static_cast<long>(side.start.second - k.second) * m)
        pc[static_cast<std::size_t>(k.second - side.end.second)] = c;
    }
    side.side_polynomial = APoly(std::move(pc));
    np.sides.push_back(std::move(side));
  }
  return np;
}

bool is_newton_nondegenerate(const Bivariate& f) {
  const NewtonPolygon np = newton_polygon(f);
  if (np.x_power > 0) throw AxisFactorError("x divides the polynomial");
  if (np.y_power > 0) throw AxisFactorError("y divides the polynomial");
  for (const auto& side : np.sides)
    if (!is_squarefree(side.side_polynomial)) return false;
  return true;
}

EquisingularityType nondegenerate_type(const NewtonPolygon& np) {
  if (np.x_power > 1) throw NotReducedError("x^2 divides the polynomial");
  if (np.y_power > 1) throw NotReducedError("y^2 divides the polynomial");
  struct B {
    int n, m, r;  // side height, width, gcd; axis: x -> n=0, y -> m=0 markers
    int kind;     // 0 side, 1 factor x, 2 factor y
  };
  std::vector<B> bs;
  std::vector<NumericalSemigroup> semis;
  for (const auto& side : np.sides) {
    const int n = side.height(), m = side.width();
    if (n <= 0 || m <= 0) throw std::invalid_argument("inconsistent Newton polygon side");
    const int r = std::gcd(n, m);
    for (int k = 0; k < r; ++k) {
      bs.push_back({n, m, r, 0});
      const int a = n / r, b = m / r;
      semis.push_back((a == 1 || b == 1) ? NumericalSemigroup({1}) : NumericalSemigroup({a, b}));
    }
  }
  if (np.x_power == 1) {
    bs.push_back({0, 0, 1, 1});
    semis.push_back(NumericalSemigroup({1}));
  }
  if (np.y_power == 1) {
    bs.push_back({0, 0, 1, 2});
    semis.push_back(NumericalSemigroup({1}));
  }
  const std::size_t N = bs.size();
  std::vector<std::vector<int>> I(N, std::vector<int>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const B& p = bs[i];
      const B& q = bs[j];
      int v;
      if (p.kind == 0 && q.kind == 0) {
        v = std::min(p.m * q.n, q.m * p.n) / (p.r * q.r);
      } else if (p.kind != 0 && q.kind != 0) {
        v = 1;
      } else {
        const B& s = p.kind == 0 ? p : q;
        const int axis = p.kind == 0 ? q.kind : p.kind;
        v = axis == 1 ? s.n / s.r : s.m / s.r;  // x = 0 meets at ord x(t); y = 0 at ord y(t)
      }
      I[i][j] = v;
    }
  return EquisingularityType(std::move(semis), std::move(I));
}

}  // namespace polar
