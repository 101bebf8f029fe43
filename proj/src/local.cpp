#include "polar/local.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

namespace {

// Elements of K[x]/(x^B) are APolys truncated at B.
struct Trunc {
  int B;
  APoly mul(const APoly& a, const APoly& b) const { return (a.truncated(B) * b.truncated(B)).truncated(B); }
  APoly inv(const APoly& a) const {
    // a(0) must be a unit.
    const Algebraic a0inv = inverse(a.coeff(0));
    std::vector<Algebraic> r(static_cast<std::size_t>(B));
    r[0] = a0inv;
    for (int n = 1; n < B; ++n) {
      Algebraic s;
      for (int k = 1; k <= std::min(n, a.degree()); ++k) s = s + a.coeff(k) * r[static_cast<std::size_t>(n - k)];
      r[static_cast<std::size_t>(n)] = -s * a0inv;
    }
    return APoly(std::move(r));
  }
};

// Polynomials in y with coefficients in K[x]/x^B, dense low to high.
using YPoly = std::vector<APoly>;

// Weierstrass polynomial of f (y-general of order k) modulo x^B, returned as
// the k low coefficients (the monic y^k is implicit).
YPoly weierstrass(const Bivariate& f, int k, int B) {
  // f = sum_e f_e(y) x^e
  const int dy = f.degree_y();
  std::vector<APoly> fe(static_cast<std::size_t>(B));
  for (int e = 0; e < B; ++e) {
    std::vector<Algebraic> row(static_cast<std::size_t>(dy + 1));
    for (const auto& [key, c] : f.terms())
      if (key.first == e) row[static_cast<std::size_t>(key.second)] = c;
    fe[static_cast<std::size_t>(e)] = APoly(std::move(row));
  }
  // u0 = f_0 / y^k, inverse of u0 modulo y^k
  std::vector<Algebraic> u0c(fe[0].coeffs().begin() + k, fe[0].coeffs().end());
  const APoly u0(u0c);
  const Trunc ty{k};
  const APoly u0inv = ty.inv(u0);
  std::vector<APoly> W(static_cast<std::size_t>(B)), U(static_cast<std::size_t>(B));
  W[0] = APoly::monomial(Algebraic(1), k);
  U[0] = u0;
  for (int e = 1; e < B; ++e) {
    APoly E = fe[static_cast<std::size_t>(e)];
    for (int a = 1; a < e; ++a) E = E - W[static_cast<std::size_t>(a)] * U[static_cast<std::size_t>(e - a)];
    APoly We = ty.mul(E, u0inv);
    APoly rest = E - We * u0;
    // rest is divisible by y^k
    std::vector<Algebraic> rc;
    for (int i = k; i <= rest.degree(); ++i) rc.push_back(rest.coeff(i));
    for (int i = 0; i < std::min(k, rest.degree() + 1); ++i)
      if (!rest.coeff(i).is_structural_zero() && !is_zero(rest.coeff(i))) throw std::logic_error("Weierstrass lifting failed");
    W[static_cast<std::size_t>(e)] = We;
    U[static_cast<std::size_t>(e)] = APoly(std::move(rc));
  }
  // transpose: coefficient of y^i as a polynomial in x
  YPoly out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<Algebraic> col(static_cast<std::size_t>(B));
    for (int e = 1; e < B; ++e) col[static_cast<std::size_t>(e)] = W[static_cast<std::size_t>(e)].coeff(i);
    out[static_cast<std::size_t>(i)] = APoly(std::move(col));
  }
  return out;
}

// Multiply r (deg < k) by y and reduce modulo y^k + sum w_i y^i.
YPoly times_y(const YPoly& r, const YPoly& w, const Trunc& tx) {
  const std::size_t k = w.size();
  YPoly out(k);
  const APoly top = r.size() == k ? r[k - 1] : APoly();
  for (std::size_t i = k; i-- > 1;) out[i] = i - 1 < r.size() ? r[i - 1] : APoly();
  for (std::size_t i = 0; i < k; ++i) out[i] = out[i] - tx.mul(top, w[i]);
  return out;
}

// g reduced modulo W, as a vector of length k.
YPoly reduce(const Bivariate& g, const YPoly& w, const Trunc& tx) {
  const std::size_t k = w.size();
  YPoly acc(k);
  // Horner in y from the top.
  for (int j = g.degree_y(); j >= 0; --j) {
    acc = times_y(acc, w, tx);
    acc[0] = acc[0] + g.coeff_of_y(j).truncated(tx.B);
  }
  return acc;
}

int valuation_d5(const APoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (!is_zero(p.coeff(i))) return i;
  return -1;
}

// ord_x det of a k x k matrix over K[x]/x^B; -1 when undetermined.
int det_order(std::vector<std::vector<APoly>> m, const Trunc& tx) {
  const std::size_t k = m.size();
  int total = 0;
  for (std::size_t step = 0; step < k; ++step) {
    int best = -1;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = step; r < k; ++r)
      for (std::size_t c = step; c < k; ++c) {
        const int v = valuation_d5(m[r][c]);
        if (v >= 0 && (best < 0 || v < best)) best = v, br = r, bc = c;
      }
    if (best < 0) return -1;
    std::swap(m[step], m[br]);
    for (auto& row : m) std::swap(row[step], row[bc]);
    total += best;
    if (total >= tx.B) return -1;
    // pivot = x^best * u
    const APoly& piv = m[step][step];
    std::vector<Algebraic> uc(piv.coeffs().begin() + best, piv.coeffs().end());
    const APoly uinv = tx.inv(APoly(std::move(uc)));
    for (std::size_t r = step + 1; r < k; ++r) {
      const APoly& a = m[r][step];
      if (a.is_zero()) continue;
      std::vector<Algebraic> ac;
      for (int i = best; i <= a.degree(); ++i) ac.push_back(a.coeff(i));
      const APoly factor = tx.mul(APoly(std::move(ac)), uinv);
      for (std::size_t c = step; c < k; ++c) m[r][c] = m[r][c] - tx.mul(factor, m[step][c]);
    }
  }
  return total;
}

int total_degree(const Bivariate& f) {
  int d = 0;
  for (const auto& [k, c] : f.terms()) d = std::max(d, k.first + k.second);
  return d;
}

int intersection_y_general(const Bivariate& f, int k, const Bivariate& g) {
  const int bound = total_degree(f) * total_degree(g);
  for (int B = 16;; B *= 2) {
    const int prec = std::min(B, bound + 1);
    const Trunc tx{prec};
    const YPoly w = weierstrass(f, k, prec);
    std::vector<std::vector<APoly>> m(static_cast<std::size_t>(k));
    YPoly col = reduce(g, w, tx);
    std::vector<YPoly> cols;
    for (int j = 0; j < k; ++j) {
      cols.push_back(col);
      col = times_y(col, w, tx);
    }
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[static_cast<std::size_t>(r)].push_back(cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    const int ord = det_order(std::move(m), tx);
    if (ord >= 0) return ord;
    if (prec > bound) throw NonIsolatedSingularityError("germs share a component through the origin");
  }
}

}  // namespace

const std::vector<Rational>& shear_parameters() {
  static const std::vector<Rational> values = {Rational(1), Rational(-2), Rational(3), Rational(1, 2),
                                               Rational(-5, 3), Rational(7), Rational(-3, 4), Rational(11, 5)};
  return values;
}

int x_order(const APoly& p) { return valuation_d5(p); }

int y_order_at_origin(const Bivariate& f) {
  int best = -1;
  for (const auto& [k, c] : f.terms())
    if (k.first == 0 && (best < 0 || k.second < best) && !is_zero(c)) best = k.second;
  return best;
}

int local_intersection(const Bivariate& f, const Bivariate& g) {
  if (f.is_zero() || g.is_zero()) throw NonIsolatedSingularityError("intersection with the zero germ");
  if (!is_zero(f.coeff(0, 0)) || !is_zero(g.coeff(0, 0))) return 0;
  int k = y_order_at_origin(f);
  if (k >= 0) return intersection_y_general(f, k, g);
  k = y_order_at_origin(g);
  if (k >= 0) return intersection_y_general(g, k, f);
  for (const auto& r : shear_parameters()) {
    const Bivariate fs = f.shear_x(Algebraic(r));
    k = y_order_at_origin(fs);
    if (k >= 0) return intersection_y_general(fs, k, g.shear_x(Algebraic(r)));
  }
  throw std::logic_error("no shear made the germ y-general");
}

}  // namespace polar
