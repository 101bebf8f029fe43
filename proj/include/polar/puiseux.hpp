#pragma once

#include <vector>

#include "polar/bivariate.hpp"
#include "polar/branch.hpp"
#include "polar/estype.hpp"

namespace polar {

/// One substitution X = xi^v X1^Q, Y = X1^M (xi^u + Y1) along an expansion
/// path, or the factor Y itself when `axis` is set.
struct PuiseuxStep {
  int node = 0;   // node of the expansion tree where the step starts
  int child = 0;  // child reached; unique per (side, root component)
  bool axis = false;
  int M = 0;
  int Q = 1;
  int u = 1;
  int v = 0;
  Algebraic xi;
  LevelPtr adjoined;  // level created for xi, null when xi needed none
  int multiplicity = 1;

  int adjoined_degree() const { return adjoined ? adjoined->degree() : 1; }
};

/// A branch over the tower: x = x_coeff T^N, y = y(T). It stands for
/// `conjugates` geometric branches, one per embedding of the levels adjoined
/// along its path.
struct ExpandedBranch {
  PuiseuxBranch branch;
  std::vector<PuiseuxStep> path;
  int conjugates = 1;

  /// N_k = product of Q over steps k, k+1, ...
  int ramification_from(std::size_t k) const;
  std::vector<int> characteristic_exponents() const;
  NumericalSemigroup semigroup() const;
};

struct PuiseuxExpansion {
  Bivariate polynomial;  // the germ expanded: f(x + shear y, y)
  Rational shear;
  int milnor = 0;  // Milnor number of the germ
  std::vector<ExpandedBranch> branches;

  int geometric_branch_count() const;
  EquisingularityType type() const;
};

/// Newton-Puiseux expansion of a reduced germ, each branch carried to at
/// least `target_order` terms in T (0 picks 2 mu + 2 deg_y). Throws
/// NotReducedError for non-reduced germs.
PuiseuxExpansion puiseux_expand(const Bivariate& f, int target_order = 0);

/// Intersection number of two geometric branches of one expansion, given by
/// (branch index, embedding choice per path step).
int expansion_intersection(const PuiseuxExpansion& e, std::size_t a, const std::vector<int>& ea, std::size_t b,
                           const std::vector<int>& eb);

}  // namespace polar
