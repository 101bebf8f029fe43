#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polar/report.hpp"

using namespace polar;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  return kOk;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json e;
  e["error"]["kind"] = kind;
  e["error"]["message"] = message;
  return e;
}

std::string read_input(const std::string& arg) {
  std::ifstream f(arg);
  if (!f) return arg;
  std::stringstream ss;
  ss << f.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

FamilyParams parse_params(const std::vector<std::string>& items) {
  FamilyParams out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not key=value");
    try {
      out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equisingularity of general polars of plane branches"};
  app.require_subcommand(1);

  std::string json_out;
  std::uint64_t seed = 1;

  auto* an = app.add_subcommand("analyze", "analyze a branch given in the DSL or in a file");
  std::string input;
  AnalyzeOptions aopt;
  std::vector<std::string> fixed;
  an->add_option("spec", input, "DSL text such as \"x=t^5; y=t^12+t^21\", or a file holding it")->required();
  an->add_option("--directions", aopt.directions, "number of random polar directions")->check(CLI::PositiveNumber);
  an->add_option("--direction", fixed, "fixed direction a:b (repeatable; replaces the random draw)");
  an->add_option("--truncation", aopt.truncation, "also expand the first polar to this t-order");
  an->add_option("--seed", seed, "PRNG seed");
  an->add_flag("--timing", aopt.timing, "add per-stage timings (breaks byte stability)");
  an->add_option("--json", json_out, "write the report here instead of stdout");

  auto* fam = app.add_subcommand("family", "instantiate fixture families");
  std::string fname;
  std::vector<std::string> params;
  int count = 1;
  bool list = false, fam_analyze = false;
  fam->add_option("name", fname, "e.g. gamma-5-12/11, mult3/7,0, mult4-g1/2,17,7,1, mult4-g2/6,13");
  fam->add_option("--params", params, "key=value (repeatable)");
  fam->add_option("--seed", seed, "PRNG seed for sampled coefficients");
  fam->add_option("--count", count, "number of members")->check(CLI::PositiveNumber);
  fam->add_flag("--list", list, "print the catalog");
  fam->add_flag("--analyze", fam_analyze, "run the analysis on each member");
  fam->add_option("--json", json_out, "write output here instead of stdout");

  auto* sw = app.add_subcommand("sweep", "sweep a stratum and group members by polar type");
  std::string sname;
  int trials = 0, sdirs = 3, workers = 0;
  bool no_walls = false;
  sw->add_option("name", sname, "family name")->required();
  sw->add_option("--trials", trials, "number of members")->required();
  sw->add_option("--seed", seed, "sweep seed")->required();
  sw->add_option("--directions", sdirs, "polar directions per member")->check(CLI::PositiveNumber);
  sw->add_option("--workers", workers, "threads (default: POLAR_WORKERS or 1)");
  sw->add_option("--params", params, "fixed key=value (repeatable)");
  sw->add_flag("--no-walls", no_walls, "do not inject exceptional parameter values");
  sw->add_option("--json", json_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_json("usage", e.what()), "");
    return kUsage;
  }

  try {
    if (an->parsed()) {
      BranchSpec spec;
      try {
        spec = parse_branch_dsl(read_input(input));
        for (const auto& d : fixed) aopt.fixed_directions.push_back(parse_direction(d));
      } catch (const ParseError& e) {
        Json j = error_json("parse", e.what());
        j["error"]["position"] = e.position();
        emit(j, json_out);
        return kUsage;
      } catch (const std::invalid_argument& e) {
        emit(error_json("usage", e.what()), json_out);
        return kUsage;
      }
      aopt.seed = seed;
      const Json report = analyze(spec, aopt);
      emit(report, json_out);
      return report.contains("error") ? kFailure : kOk;
    }
    if (fam->parsed()) {
      if (list) {
        std::cout << family_catalog();
        return kOk;
      }
      if (fname.empty()) throw UsageError("family name required (see --list)");
      std::vector<FamilyInstance> members;
      try {
        members = family(fname, parse_params(params), seed, count);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      } catch (const SideConditionError& e) {
        throw UsageError(e.what());
      }
      Json out = Json::array();
      bool failed = false;
      for (const auto& m : members) {
        Json j;
        j["family"] = m.name;
        Json p = Json::object();
        for (const auto& [k, v] : m.parameters) p[k] = to_json(v);
        j["parameters"] = std::move(p);
        j["spec"] = to_dsl(m.spec);
        if (fam_analyze) {
          AnalyzeOptions o;
          o.seed = seed;
          j["analysis"] = analyze(m.spec, o);
          failed = failed || j["analysis"].contains("error");
        }
        out.push_back(std::move(j));
      }
      emit(out, json_out);
      return failed ? kFailure : kOk;
    }
    if (sw->parsed()) {
      if (trials < 1) throw UsageError("--trials must be at least 1");
      FamilySampler sampler;
      try {
        sampler = family_sampler(sname, parse_params(params), !no_walls);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      } catch (const SideConditionError& e) {
        throw UsageError(e.what());
      }
      const SweepReport r = stratum_sweep(sampler, trials, seed, sdirs, workers);
      emit(sweep_json(sname, r, trials, seed, sdirs), json_out);
      return r.errors > 0 ? kFailure : kOk;
    }
  } catch (const UsageError& e) {
    emit(error_json("usage", e.what()), "");
    return kUsage;
  } catch (const std::exception& e) {
    emit(error_json("internal", e.what()), "");
    return kFailure;
  }
  return kUsage;
}
