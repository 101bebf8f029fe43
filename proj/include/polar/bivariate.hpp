#pragma once

#include <map>
#include <string>
#include <utility>

#include "polar/algebraic.hpp"

namespace polar {

/// Sparse polynomial in x, y with tower coefficients. Keys are (i, j) for
/// x^i y^j; no stored coefficient is structurally zero.
class Bivariate {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Algebraic>;

  Bivariate() = default;
  Bivariate(const Algebraic& c);  // NOLINT(google-explicit-constructor)
  Bivariate(int c) : Bivariate(Algebraic(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Bivariate(Terms terms);

  static Bivariate monomial(const Algebraic& c, int i, int j);
  static Bivariate x() { return monomial(Algebraic(1), 1, 0); }
  static Bivariate y() { return monomial(Algebraic(1), 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Algebraic coeff(int i, int j) const;
  void add_term(int i, int j, const Algebraic& c);

  int degree_x() const;
  int degree_y() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  /// Lowest-degree homogeneous part.
  Bivariate tangent_cone() const;

  Bivariate operator-() const;
  friend Bivariate operator+(const Bivariate& a, const Bivariate& b);
  friend Bivariate operator-(const Bivariate& a, const Bivariate& b);
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
  Bivariate& operator+=(const Bivariate& o) { return *this = *this + o; }
  Bivariate& operator-=(const Bivariate& o) { return *this = *this - o; }
  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Bivariate& a, const Bivariate& b) { return !(a == b); }

  Bivariate scaled(const Algebraic& s) const;
  Bivariate derivative_x() const;
  Bivariate derivative_y() const;
  /// f(x + r*y, y)
  Bivariate shear_x(const Algebraic& r) const;
  /// f(x, y + r*x)
  Bivariate shear_y(const Algebraic& r) const;
  /// f(y, x)
  Bivariate swapped() const;
  /// Drops every term x^i y^j with i >= n.
  Bivariate truncated_x(int n) const;
  /// Largest k with x^k | f, and likewise for y.
  int x_power() const;
  int y_power() const;
  /// Exact division by x^a y^b (requires divisibility).
  Bivariate divided_by_monomial(int a, int b) const;

  /// f as a polynomial in y whose coefficients are polynomials in x.
  Poly<APoly> as_poly_in_y() const;
  static Bivariate from_poly_in_y(const Poly<APoly>& p);
  /// f(x, 0..): coefficient polynomial of y^j in x.
  APoly coeff_of_y(int j) const;

  LevelPtr top_level() const;
  std::string to_string() const;

 private:
  void cleanup();
  Terms terms_;
};

Algebraic binomial(int n, int k);

/// Res_y(f, g) as a polynomial in x, by the subresultant sequence.
APoly resultant_y(const Bivariate& f, const Bivariate& g);

}  // namespace polar
