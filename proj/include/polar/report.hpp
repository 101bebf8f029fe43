#pragma once

// JSON serialization of analyses and sweeps. Key order is fixed, rationals
// are "p/q" strings and tower elements {minpoly, coords}, so a report is a
// deterministic function of its input and options.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "polar/dsl.hpp"
#include "polar/equisingularity.hpp"
#include "polar/families.hpp"
#include "polar/newton.hpp"

namespace polar {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  int directions = 3;
  std::vector<Direction> fixed_directions;  // replaces the random draw when non-empty
  std::uint64_t seed = 1;
  int truncation = 0;  // > 0: include Puiseux expansions of the first polar to this order
  bool timing = false;
};

Json to_json(const Rational& q);
Json to_json(const Algebraic& a);
Json to_json(const APoly& p);
Json to_json(const EquisingularityType& t);
Json to_json(const NewtonPolygon& np);
Json to_json(const Direction& d);
Json to_json(const PuiseuxBranch& b);
Json to_json(const BranchSpec& s);

/// Never throws for library errors: a failing stage is reported under
/// "error": {"stage", "message"} with everything computed before it.
Json analyze(const BranchSpec& spec, const AnalyzeOptions& options = {});

Json sweep_json(const std::string& family_name, const SweepReport& report, int trials, std::uint64_t seed, int directions);

/// Parses "a:b" with rational a, b.
Direction parse_direction(const std::string& text);

}  // namespace polar
