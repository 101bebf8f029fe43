#pragma once

#include "polar/bivariate.hpp"
#include "polar/branch.hpp"

namespace polar {

/// Monic Weierstrass equation of a polynomial parametrization: the
/// characteristic polynomial in y of multiplication by y(t) on
/// K[x][t]/(t^n - x/x_coeff). Verified to vanish on the branch.
Bivariate implicitize(const PuiseuxBranch& b);

/// a f_x + b f_y
Bivariate polar_curve(const Bivariate& f, const Algebraic& a, const Algebraic& b);

/// Milnor number I_0(f_x, f_y), computed under two different shears
/// y -> y + r x which must agree.
int milnor_number(const Bivariate& f);

}  // namespace polar
