#pragma once

#include <utility>
#include <vector>

#include "polar/bivariate.hpp"
#include "polar/estype.hpp"

namespace polar {

using LatticePoint = std::pair<int, int>;  // (i, j) for x^i y^j

/// Compact side from `start` (larger j) to `end` (smaller j).
struct Side {
  LatticePoint start;
  LatticePoint end;
  /// p_L(z) = z^(-j_end) f_L(1, z)
  APoly side_polynomial;

  int height() const noexcept { return start.second - end.second; }
  int width() const noexcept { return end.first - start.first; }
  /// width / height
  Rational inclination() const { return make_rational(width(), height()); }
};

struct NewtonPolygon {
  std::vector<LatticePoint> vertices;  // increasing i
  std::vector<Side> sides;
  /// Largest powers of x and y dividing the polynomial.
  int x_power = 0;
  int y_power = 0;
};

NewtonPolygon newton_polygon(const Bivariate& f);

/// Every side polynomial squarefree. Throws AxisFactorError when x | f or y | f.
bool is_newton_nondegenerate(const Bivariate& f);

/// Type of a non-degenerate germ read off its polygon, axis factors x and y
/// included as smooth branches. Throws NotReducedError for x^2 or y^2 factors.
EquisingularityType nondegenerate_type(const NewtonPolygon& np);

}  // namespace polar
