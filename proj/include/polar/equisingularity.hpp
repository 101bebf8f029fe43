#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polar/bivariate.hpp"
#include "polar/branch.hpp"
#include "polar/estype.hpp"

namespace polar {

/// ord_t g(x(t), y(t)); TruncationError when it vanishes to the known precision.
int intersection_multiplicity(const PuiseuxBranch& b, const Bivariate& g);

/// I(b1, b2) for branches x = t^n1, x = t^n2 (unit x-coefficients): the sum
/// over the n2-th roots of unity w of ord of y1(t^a) - y2(w t^b) on the
/// common cover, scaled back to t.
int branch_intersection(const PuiseuxBranch& b1, const PuiseuxBranch& b2);

/// Equisingularity type of a reduced germ: read off the Newton polygon when
/// f is non-degenerate, otherwise assembled from a Newton-Puiseux expansion.
EquisingularityType equisingularity_type(const Bivariate& f);

/// Same, always through the expansion (used as a cross-check).
EquisingularityType equisingularity_type_by_expansion(const Bivariate& f);

struct Direction {
  Rational a;
  Rational b;
};

/// Seeded draw of directions with nonzero numerators and denominators of
/// absolute value at most 100 (mt19937_64).
std::vector<Direction> random_directions(std::uint64_t seed, int count);

struct PolarSample {
  Direction direction;
  std::optional<EquisingularityType> type;
  bool nondegenerate = false;
  int polar_milnor = -1;
  int teissier = -1;  // I(branch, polar)
  std::string error;
};

struct GenericPolarResult {
  EquisingularityType type;
  bool certified = false;
  int milnor = 0;           // of the curve
  bool teissier_ok = false;  // I(b, P) = mu + v0 - 1 at every agreeing direction
  std::vector<PolarSample> samples;
  std::vector<Direction> dissenting;
};

struct GenericPolarOptions {
  int samples = 3;
  std::uint64_t seed = 1;
  std::vector<Direction> directions;  // used instead of random ones when non-empty
};

GenericPolarResult generic_polar_type(const PuiseuxBranch& b, const GenericPolarOptions& options = {});

struct FamilySample {
  PuiseuxBranch branch;
  std::vector<std::pair<std::string, Rational>> parameters;
};

/// Produces the branch of trial `index` from a per-trial seed.
using FamilySampler = std::function<FamilySample(std::uint64_t seed, int index)>;

struct SweepTrial {
  int index = 0;
  std::vector<std::pair<std::string, Rational>> parameters;
  std::optional<GenericPolarResult> result;
  std::string error;
};

struct SweepGroup {
  EquisingularityType type;
  std::vector<int> trials;
  std::vector<int> milnor_numbers;  // Milnor numbers of the polar, distinct values
};

struct SweepReport {
  std::vector<SweepTrial> trials;
  std::vector<SweepGroup> groups;  // most frequent first
  int errors = 0;
};

/// Seed of trial `index` derived from the sweep seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, int index);

/// Runs generic_polar_type for `trials` family members on `workers` threads
/// (0: POLAR_WORKERS or 1).
SweepReport stratum_sweep(const FamilySampler& family, int trials, std::uint64_t seed, int directions = 3,
                          int workers = 0);

}  // namespace polar
