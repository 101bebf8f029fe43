#pragma once

// Exact arithmetic in towers of algebraic extensions of Q, with dynamic
// evaluation: a tower level is Q-algebra K[z]/(p) for a monic squarefree p
// over the level below, which need not be irreducible. Whenever an inversion
// meets a zero divisor the level cannot proceed as a field; a TowerSplit is
// thrown carrying the coprime factorization p = g * h that was discovered.
// Whoever created the level catches it and continues on each component.

#include <memory>
#include <string>
#include <vector>

#include "polar/errors.hpp"
#include "polar/poly.hpp"
#include "polar/rational.hpp"

namespace polar {

class TowerLevel;
using LevelPtr = std::shared_ptr<const TowerLevel>;

/// Element of a tower. Rationals carry a null level. An element whose level
/// is L is a polynomial of degree >= 1 in L's generator, reduced modulo L's
/// defining polynomial, with coefficients living in L's ancestors.
class Algebraic {
 public:
  Algebraic() = default;
  Algebraic(int v) : q_(v) {}                   // NOLINT(google-explicit-constructor)
  Algebraic(long v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
  Algebraic(Rational v) : q_(std::move(v)) {}   // NOLINT(google-explicit-constructor)

  /// The generator of `level` as an element.
  static Algebraic generator(const LevelPtr& level);
  /// Builds sum coeffs[k] * gen^k, reducing modulo the defining polynomial.
  static Algebraic from_coefficients(const LevelPtr& level, std::vector<Algebraic> coeffs);

  const LevelPtr& level() const noexcept { return level_; }
  bool is_rational() const noexcept { return level_ == nullptr; }
  /// Requires is_rational().
  const Rational& rational() const;
  /// Coefficients in the generator of level(); empty for rationals.
  const std::vector<Algebraic>& coefficients() const noexcept { return c_; }
  /// Coefficient vector with respect to `level` (which must be level() or a
  /// descendant), padded to the degree of that level.
  std::vector<Algebraic> coordinates(const LevelPtr& level) const;

  bool is_structural_zero() const noexcept { return !level_ && sgn(q_) == 0; }
  bool is_one() const noexcept { return !level_ && q_ == 1; }

  Algebraic operator-() const;
  friend Algebraic operator+(const Algebraic& a, const Algebraic& b);
  friend Algebraic operator-(const Algebraic& a, const Algebraic& b);
  friend Algebraic operator*(const Algebraic& a, const Algebraic& b);
  friend Algebraic operator/(const Algebraic& a, const Algebraic& b);
  Algebraic& operator+=(const Algebraic& o) { return *this = *this + o; }
  Algebraic& operator-=(const Algebraic& o) { return *this = *this - o; }
  Algebraic& operator*=(const Algebraic& o) { return *this = *this * o; }

  /// Structural equality; representations are canonical.
  friend bool operator==(const Algebraic& a, const Algebraic& b);
  friend bool operator!=(const Algebraic& a, const Algebraic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  static Algebraic make(const LevelPtr& level, std::vector<Algebraic> coeffs);
  LevelPtr level_;
  Rational q_;
  std::vector<Algebraic> c_;
};

using APoly = Poly<Algebraic>;

class TowerLevel {
 public:
  TowerLevel(std::string name, LevelPtr parent, APoly defining);

  const std::string& name() const noexcept { return name_; }
  const LevelPtr& parent() const noexcept { return parent_; }
  /// Monic, degree >= 2.
  const APoly& defining_polynomial() const noexcept { return defining_; }
  int degree() const noexcept { return defining_.degree(); }
  int depth() const noexcept { return depth_; }
  /// Product of the degrees of this level and all its ancestors.
  int total_degree() const noexcept { return total_degree_; }

 private:
  std::string name_;
  LevelPtr parent_;
  APoly defining_;
  int depth_;
  int total_degree_;
};

/// True when `ancestor` is null, equal to `level`, or on its parent chain.
bool is_ancestor_or_self(const LevelPtr& ancestor, const LevelPtr& level);
/// The deeper of two comparable levels; throws std::logic_error otherwise.
LevelPtr common_level(const LevelPtr& a, const LevelPtr& b);
/// Chain from the outermost level down to `level` (root first).
std::vector<LevelPtr> level_chain(const LevelPtr& level);

/// Thrown when a zero divisor is met: the defining polynomial of `level`
/// factors as first * second (both monic, coprime, positive degree).
class TowerSplit : public std::exception {
 public:
  TowerSplit(LevelPtr level, APoly first, APoly second)
      : level_(std::move(level)), first_(std::move(first)), second_(std::move(second)) {}
  const LevelPtr& level() const noexcept { return level_; }
  const APoly& first() const noexcept { return first_; }
  const APoly& second() const noexcept { return second_; }
  const char* what() const noexcept override { return "tower split on zero divisor"; }

 private:
  LevelPtr level_;
  APoly first_;
  APoly second_;
};

/// Inverse; throws TowerSplit on zero divisors, std::domain_error on zero.
Algebraic inverse(const Algebraic& a);
/// Dynamic-evaluation zero test: true for zero, false for units, TowerSplit
/// otherwise.
bool is_zero(const Algebraic& a);
Algebraic pow(const Algebraic& a, long e);

inline bool is_structural_zero(const Algebraic& a) { return a.is_structural_zero(); }
inline std::string polar_to_string(const Algebraic& a) { return a.to_string(); }
inline Algebraic exact_quotient(const Algebraic& a, const Algebraic& b) { return a * inverse(b); }

/// Result of adjoining a root: the (possibly unchanged) tower top and the root.
struct AdjoinedRoot {
  LevelPtr level;
  Algebraic root;
};

/// Adjoins a root of p (squarefree, degree >= 1, coefficients in `base` or
/// its ancestors). Degree one returns the rational-in-tower root without a
/// new level. Throws std::invalid_argument if p is not squarefree.
AdjoinedRoot adjoin_root(const LevelPtr& base, const APoly& p, const std::string& name = "a");

/// Adjoins without the squarefree check (the caller guarantees it).
AdjoinedRoot adjoin_root_unchecked(const LevelPtr& base, const APoly& p, const std::string& name);

/// Rewrites elements after `from` has been replaced by one component of a
/// split: either the level `to` (same parent, defining polynomial dividing
/// `from`'s) or, for a linear component, the root `root` in the parent.
/// Levels stacked above `from` are rebuilt through `cache`.
struct LevelRemap {
  LevelPtr from;
  LevelPtr to;
  Algebraic root;
  std::vector<std::pair<const TowerLevel*, LevelPtr>> cache;
};
/// The remap onto the component of `level` cut out by the monic `factor`.
LevelRemap make_component(const LevelPtr& level, const APoly& factor);
Algebraic remap(const Algebraic& a, LevelRemap& map);
APoly remap(const APoly& p, LevelRemap& map);
LevelPtr remap_level(const LevelPtr& level, LevelRemap& map);

/// Squarefree test with dynamic evaluation: splits are followed on every
/// component, and the answer is false if any component has a multiple root.
bool is_squarefree(const APoly& p);

/// Deepest level among the coefficients of p.
LevelPtr top_level(const APoly& p);

}  // namespace polar
