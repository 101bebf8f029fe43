#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polar/algebraic.hpp"
#include "polar/semigroup.hpp"
#include "polar/series.hpp"

namespace polar {

/// Parametrized branch x = x_coeff * t^n, y = sum c_i t^i, the y-series being
/// valid modulo t^truncation_order (kExact for a polynomial parametrization).
struct PuiseuxBranch {
  int n = 1;
  Algebraic x_coeff = Algebraic(1);
  std::map<int, Algebraic> y_terms;
  int truncation_order = TruncatedSeries::kExact;

  PuiseuxBranch() = default;
  PuiseuxBranch(int n_, std::map<int, Algebraic> terms, int truncation = TruncatedSeries::kExact,
                Algebraic x_coefficient = Algebraic(1));

  bool is_exact() const noexcept { return truncation_order >= TruncatedSeries::kExact; }
  TruncatedSeries x_series(int precision = TruncatedSeries::kExact) const;
  TruncatedSeries y_series(int precision = TruncatedSeries::kExact) const;
  /// Lowest exponent with a nonzero coefficient (dynamic evaluation); -1 if none.
  int y_order() const;
  /// beta_0 = n, beta_1, ... ; throws TruncationError when the gcd chain
  /// has not reached 1 below truncation_order.
  std::vector<int> characteristic_exponents() const;
  LevelPtr top_level() const;
  std::string to_string() const;

  friend bool operator==(const PuiseuxBranch& a, const PuiseuxBranch& b) {
    return a.n == b.n && a.x_coeff == b.x_coeff && a.y_terms == b.y_terms && a.truncation_order == b.truncation_order;
  }
};

NumericalSemigroup semigroup_of_branch(const PuiseuxBranch& b);

struct DifferentialValues {
  NumericalSemigroup gamma;
  std::vector<int> extra;  // Lambda \ Gamma, increasing
  std::optional<int> lambda;
};

/// Values nu(w) = ord_t(w pulled back) + 1 of Kaehler differentials below the
/// conductor. `margin` widens the generation and elimination bound c + margin
/// (defaults to n).
DifferentialValues differential_values(const PuiseuxBranch& b, std::optional<int> margin = std::nullopt);

std::optional<int> zariski_invariant(const DifferentialValues& d);

/// Normal forms b1, b2 (same v0, v1 and support) are analytically equivalent
/// iff some zeta with zeta^(lambda - v1) = 1 has c_i = zeta^(i - v1) c'_i for
/// all i. Throws IncomparableNormalFormsError for different shapes.
bool normal_form_equivalent(const PuiseuxBranch& b1, const PuiseuxBranch& b2, int lambda);

}  // namespace polar
