#pragma once

#include <climits>
#include <vector>

#include "polar/algebraic.hpp"
#include "polar/bivariate.hpp"

namespace polar {

/// Power series in t known modulo t^precision. A precision of kExact means
/// the stored coefficients are the whole (polynomial) series.
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  TruncatedSeries() : prec_(kExact) {}
  TruncatedSeries(std::vector<Algebraic> coeffs, int precision);
  static TruncatedSeries exact(std::vector<Algebraic> coeffs) { return TruncatedSeries(std::move(coeffs), kExact); }
  static TruncatedSeries constant(const Algebraic& c, int precision = kExact) { return TruncatedSeries({c}, precision); }
  static TruncatedSeries monomial(const Algebraic& c, int e, int precision = kExact);

  int precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExact; }
  const std::vector<Algebraic>& coeffs() const noexcept { return c_; }
  Algebraic coeff(int k) const;
  /// Structurally zero modulo t^precision.
  bool is_structural_zero() const noexcept { return c_.empty(); }
  /// Lowest index with a structurally nonzero coefficient; a lower bound for
  /// the true order. precision() when none.
  int structural_order() const;

  /// True order, deciding zero-ness of coefficients by dynamic evaluation.
  /// Throws TruncationError when the series vanishes modulo t^precision.
  int order() const;
  /// Coefficient at order().
  Algebraic leading_coefficient() const;

  TruncatedSeries truncated(int precision) const;
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Algebraic& s) const;
  /// Multiplication by t^k.
  TruncatedSeries shifted(int k) const;
  TruncatedSeries derivative() const;
  /// Power with e >= 0.
  TruncatedSeries power(int e) const;

 private:
  void trim();
  std::vector<Algebraic> c_;
  int prec_;
};

/// 1/s modulo t^precision; the constant term must be a unit.
TruncatedSeries inverse_series(const TruncatedSeries& s, int precision);

/// f(x(t), y(t)) modulo t^precision (precision may be kExact when both series
/// are exact).
TruncatedSeries compose(const Bivariate& f, const TruncatedSeries& x, const TruncatedSeries& y,
                        int precision = TruncatedSeries::kExact);

}  // namespace polar
