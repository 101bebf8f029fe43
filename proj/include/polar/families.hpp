#pragma once

// Parametrized fixture families:
//   gamma-5-12/<row>            normal forms of the class <5,12>, rows 1..18
//   mult3/<beta>[,<k>]          (t^3, t^beta) or (t^3, t^beta + t^(beta+eps+3k))
//   mult4-g1/<form>,<m>,...     genus one multiplicity four, forms 1..5
//   mult4-g2/<v1>,<v2>          genus two multiplicity four
// Integer parameters may follow the slash or be passed by name; free
// coefficients are sampled unless given.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polar/dsl.hpp"
#include "polar/equisingularity.hpp"

namespace polar {

using FamilyParams = std::map<std::string, Rational>;

struct FamilyInstance {
  std::string name;
  BranchSpec spec;
  FamilyParams parameters;  // structural and coefficient values, given or sampled
};

/// One member; throws std::invalid_argument for an unknown family or bad
/// shape, SideConditionError when a given value violates the row's conditions.
FamilyInstance make_family(std::string_view name, const FamilyParams& given, std::uint64_t seed);

/// `count` members drawn with consecutive sub-seeds.
std::vector<FamilyInstance> family(std::string_view name, const FamilyParams& given, std::uint64_t seed, int count = 1);

/// Sampler for stratum_sweep. With `inject_walls`, gamma-5-12/18 fixes
/// trials 1, 3, 5 (mod 8) on the exceptional loci c = -5/4; c = -5/4,
/// d = -5/16; and c = 1.
FamilySampler family_sampler(std::string name, FamilyParams given, bool inject_walls = true);

/// Human-readable list of the families and their parameters.
std::string family_catalog();

}  // namespace polar
