#pragma once

#include "polar/bivariate.hpp"

namespace polar {

/// Local intersection number I_0(f, g) of two germs at the origin, computed
/// from the Weierstrass polynomial of one of them and the determinant of
/// multiplication by the other, over K[[x]] truncated at a growing x-precision.
/// Throws NonIsolatedSingularityError when f and g share a component through
/// the origin.
int local_intersection(const Bivariate& f, const Bivariate& g);

/// ord_x of a polynomial in x, deciding coefficients by dynamic evaluation.
/// Returns -1 for zero.
int x_order(const APoly& p);

/// Smallest j with f(0, y) having a nonzero y^j coefficient, -1 when x | f.
int y_order_at_origin(const Bivariate& f);

/// Shear parameters tried, in order, when a linear change of coordinates is
/// needed for genericity.
const std::vector<Rational>& shear_parameters();

}  // namespace polar
