#pragma once

#include <compare>
#include <string>
#include <vector>

namespace polar {

/// Numerical semigroup with minimal generators, conductor and gap set.
class NumericalSemigroup {
 public:
  NumericalSemigroup() : NumericalSemigroup(std::vector<int>{1}) {}
  /// Any generating set with gcd 1; it is reduced to the minimal one.
  explicit NumericalSemigroup(std::vector<int> generators);

  /// Semigroup of a plane branch from its characteristic exponents
  /// beta_0 = multiplicity < beta_1 < ... .
  static NumericalSemigroup from_characteristic(const std::vector<int>& betas);

  const std::vector<int>& generators() const noexcept { return gens_; }
  int conductor() const noexcept { return conductor_; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }
  int multiplicity() const noexcept { return gens_.front(); }
  bool is_smooth() const noexcept { return gens_.size() == 1; }
  int genus() const noexcept { return static_cast<int>(gens_.size()) - 1; }
  bool contains(int v) const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }
  friend auto operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.multiplicity() != b.multiplicity()) return a.multiplicity() <=> b.multiplicity();
    return a.gens_ <=> b.gens_;
  }

 private:
  std::vector<int> gens_;
  int conductor_ = 0;
  std::vector<int> gaps_;
};

/// Conductor of a plane-branch semigroup from its generators:
/// sum (n_k - 1) v_k - v_0 + 1 with n_k = e_{k-1}/e_k.
int plane_branch_conductor(const std::vector<int>& generators);

}  // namespace polar
