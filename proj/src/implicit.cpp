#include "polar/implicit.hpp"

#include <stdexcept>

#include "polar/local.hpp"

namespace polar {

namespace {

using Matrix = std::vector<std::vector<APoly>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<APoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

Bivariate implicitize(const PuiseuxBranch& b) {
  if (!b.is_exact()) throw std::invalid_argument("implicitize needs a polynomial parametrization");
  const int n = b.n;
  const Algebraic xinv = inverse(b.x_coeff);
  // M[r][c]: coefficient of t^r in y(t) * t^c, over K[x], using t^n = x / x_coeff
  Matrix M(static_cast<std::size_t>(n), std::vector<APoly>(static_cast<std::size_t>(n)));
  for (int col = 0; col < n; ++col)
    for (const auto& [i, c] : b.y_terms) {
      const int e = i + col;
      const int q = e / n, r = e % n;
      M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] += APoly::monomial(c * pow(xinv, q), q);
    }
  // Faddeev-LeVerrier: charpoly = sum coef[k] y^k, coef[n] = 1
  std::vector<APoly> coef(static_cast<std::size_t>(n) + 1);
  coef[static_cast<std::size_t>(n)] = APoly(1);
  Matrix Mk(static_cast<std::size_t>(n), std::vector<APoly>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    Mk = multiply(M, Mk);
    for (int d = 0; d < n; ++d) Mk[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] += coef[static_cast<std::size_t>(n - k + 1)];
    const Matrix MMk = multiply(M, Mk);
    APoly tr;
    for (int d = 0; d < n; ++d) tr += MMk[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)];
    coef[static_cast<std::size_t>(n - k)] = tr.scaled(Algebraic(Rational(-1, k)));
  }
  Bivariate f = Bivariate::from_poly_in_y(Poly<APoly>(std::move(coef)));
  const TruncatedSeries check = compose(f, b.x_series(), b.y_series());
  if (!check.is_structural_zero()) {
    for (const auto& c : check.coeffs())
      if (!is_zero(c)) throw std::logic_error("implicit equation does not vanish on the branch");
  }
  return f;
}

Bivariate polar_curve(const Bivariate& f, const Algebraic& a, const Algebraic& b) {
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("polar direction (0:0)");
  return f.derivative_x().scaled(a) + f.derivative_y().scaled(b);
}

int milnor_number(const Bivariate& f) {
  if (f.is_zero()) throw NonIsolatedSingularityError("Milnor number of the zero polynomial");
  const auto& rs = shear_parameters();
  int result = -1;
  for (int attempt = 0; attempt < 2; ++attempt) {
    // y -> y + r x keeps f_y(0, y), so a y-general partial stays y-general
    const Bivariate g = f.shear_y(Algebraic(rs[static_cast<std::size_t>(attempt)]));
    const int mu = local_intersection(g.derivative_x(), g.derivative_y());
    if (result >= 0 && mu != result) throw std::logic_error("Milnor number differs between shears");
    result = mu;
  }
  return result;
}

}  // namespace polar
