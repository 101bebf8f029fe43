#pragma once

// Text form of a branch:
//   x = t^N ; y = t^12 + 13/12 t^16 - c t^21 where c = 2, s = sqrt(6)
// A parameter is bound to a rational, or to a radical sqrt(q), cbrt(q) or
// root(n, q), which is adjoined as a tower level generated by z^n - q.

#include <string>
#include <string_view>
#include <vector>

#include "polar/branch.hpp"

namespace polar {

struct DslParameter {
  std::string name;
  Rational value;
  int root_degree = 1;  // 1: the parameter is `value`; n >= 2: an n-th root of it

  friend bool operator==(const DslParameter&, const DslParameter&) = default;
};

struct DslTerm {
  Rational coeff{1};
  std::string parameter;  // empty: a plain rational coefficient
  int exponent = 0;

  friend bool operator==(const DslTerm&, const DslTerm&) = default;
};

struct BranchSpec {
  std::string source;
  int n = 1;
  std::vector<DslTerm> terms;
  std::vector<DslParameter> parameters;
  PuiseuxBranch branch;
};

/// Throws ParseError (with a byte offset) on malformed text or invalid content.
BranchSpec parse_branch_dsl(std::string_view text);

/// Canonical text; parse_branch_dsl(to_dsl(s)).branch == s.branch.
std::string to_dsl(const BranchSpec& spec);

/// Builds and validates a BranchSpec from parts; `source` is set to to_dsl.
BranchSpec make_branch_spec(int n, std::vector<DslTerm> terms, std::vector<DslParameter> parameters);

/// The value of a parameter in the tower. Radicals are adjoined over `base`;
/// the same (base, n, q) always yields the same level, so independently built
/// branches compare equal. Perfect powers give the positive rational root.
Algebraic radical(const LevelPtr& base, int n, const Rational& q);

}  // namespace polar
