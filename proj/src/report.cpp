#include "polar/report.hpp"

#include <chrono>

#include "polar/implicit.hpp"
#include "polar/puiseux.hpp"

namespace polar {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Algebraic& a) {
  if (a.is_rational()) return to_json(a.rational());
  Json coords = Json::array();
  for (const auto& c : a.coordinates(a.level())) coords.push_back(to_json(c));
  Json out;
  out["generator"] = a.level()->name();
  out["minpoly"] = to_json(a.level()->defining_polynomial());
  out["coords"] = std::move(coords);
  return out;
}

Json to_json(const APoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_json(p.coeff(i)));
  return out;
}

Json to_json(const EquisingularityType& t) {
  Json out;
  Json branches = Json::array();
  for (const auto& g : t.branches()) branches.push_back(g.generators());
  out["branches"] = std::move(branches);
  out["intersections"] = t.intersections();
  out["text"] = t.to_string();
  return out;
}

Json to_json(const NewtonPolygon& np) {
  Json out;
  Json verts = Json::array();
  for (const auto& [i, j] : np.vertices) verts.push_back({i, j});
  out["vertices"] = std::move(verts);
  Json sides = Json::array();
  for (const auto& s : np.sides) {
    Json side;
    side["start"] = {s.start.first, s.start.second};
    side["end"] = {s.end.first, s.end.second};
    side["side_polynomial"] = to_json(s.side_polynomial);
    sides.push_back(std::move(side));
  }
  out["sides"] = std::move(sides);
  out["x_power"] = np.x_power;
  out["y_power"] = np.y_power;
  return out;
}

Json to_json(const Direction& d) {
  Json out;
  out["a"] = to_json(d.a);
  out["b"] = to_json(d.b);
  return out;
}

Json to_json(const PuiseuxBranch& b) {
  Json out;
  out["n"] = b.n;
  out["x_coeff"] = to_json(b.x_coeff);
  Json terms = Json::array();
  for (const auto& [e, c] : b.y_terms) {
    Json t;
    t["exponent"] = e;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  out["y_terms"] = std::move(terms);
  if (!b.is_exact()) out["truncation"] = b.truncation_order;
  return out;
}

Json to_json(const BranchSpec& s) {
  Json out;
  out["source"] = s.source;
  out["normalized"] = to_dsl(s);
  Json params = Json::object();
  for (const auto& p : s.parameters) {
    if (p.root_degree == 1) {
      params[p.name] = to_json(p.value);
    } else {
      Json r;
      r["root_degree"] = p.root_degree;
      r["of"] = to_json(p.value);
      params[p.name] = std::move(r);
    }
  }
  out["parameters"] = std::move(params);
  out["branch"] = to_json(s.branch);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

}  // namespace

Json analyze(const BranchSpec& spec, const AnalyzeOptions& options) {
  Json out;
  out["input"] = to_json(spec);
  const auto start = Clock::now();
  Json timing = Json::object();
  std::string stage = "semigroup";
  auto lap = [&](const char* name, Clock::time_point t) {
    if (options.timing) timing[name] = ms_since(t);
  };
  try {
    auto t = Clock::now();
    const NumericalSemigroup g = semigroup_of_branch(spec.branch);
    out["semigroup"] = g.generators();
    out["conductor"] = g.conductor();
    lap("semigroup", t);

    stage = "differential_values";
    t = Clock::now();
    const DifferentialValues dv = differential_values(spec.branch);
    out["lambda_minus_gamma"] = dv.extra;
    out["zariski_lambda"] = dv.lambda ? Json(*dv.lambda) : Json(nullptr);
    lap("differential_values", t);

    stage = "implicitize";
    t = Clock::now();
    const Bivariate f = implicitize(spec.branch);
    out["equation"] = f.to_string();
    lap("implicitize", t);

    stage = "milnor";
    t = Clock::now();
    out["milnor"] = milnor_number(f);
    lap("milnor", t);

    stage = "polar";
    t = Clock::now();
    GenericPolarOptions gp;
    gp.samples = options.directions;
    gp.seed = options.seed;
    gp.directions = options.fixed_directions;
    const GenericPolarResult r = generic_polar_type(spec.branch, gp);
    Json samples = Json::array();
    Json dirs = Json::array();
    for (const auto& s : r.samples) {
      Json js;
      js["direction"] = to_json(s.direction);
      dirs.push_back(to_json(s.direction));
      if (s.type) {
        const Bivariate P = polar_curve(f, Algebraic(s.direction.a), Algebraic(s.direction.b));
        js["newton_polygon"] = to_json(newton_polygon(P));
        js["nondegenerate"] = s.nondegenerate;
        js["type"] = to_json(*s.type);
        js["milnor"] = s.polar_milnor;
        js["teissier"] = s.teissier;
      } else {
        js["error"] = s.error;
      }
      samples.push_back(std::move(js));
    }
    Json prng;
    prng["algorithm"] = "mt19937_64";
    prng["seed"] = options.seed;
    out["prng"] = std::move(prng);
    out["directions"] = std::move(dirs);
    out["polar_samples"] = std::move(samples);
    out["polar_type"] = to_json(r.type);
    Json cert;
    cert["certified"] = r.certified;
    cert["teissier_identity"] = r.teissier_ok;
    Json dissent = Json::array();
    for (const auto& d : r.dissenting) dissent.push_back(to_json(d));
    cert["dissenting"] = std::move(dissent);
    out["genericity"] = std::move(cert);
    lap("polar", t);

    if (options.truncation > 0 && !r.samples.empty()) {
      stage = "expansion";
      t = Clock::now();
      const Direction& d = r.samples.front().direction;
      const PuiseuxExpansion e = puiseux_expand(polar_curve(f, Algebraic(d.a), Algebraic(d.b)), options.truncation);
      Json branches = Json::array();
      for (const auto& b : e.branches) branches.push_back(to_json(b.branch));
      out["polar_branches"] = std::move(branches);
      lap("expansion", t);
    }
  } catch (const std::exception& e) {
    Json err;
    err["stage"] = stage;
    err["message"] = e.what();
    out["error"] = std::move(err);
  }
  if (options.timing) {
    timing["total"] = ms_since(start);
    out["timing_ms"] = std::move(timing);
  }
  return out;
}

Json sweep_json(const std::string& family_name, const SweepReport& report, int trials, std::uint64_t seed, int directions) {
  Json out;
  out["family"] = family_name;
  out["trials"] = trials;
  Json prng;
  prng["algorithm"] = "mt19937_64, per-trial seeds by splitmix64";
  prng["seed"] = seed;
  out["prng"] = std::move(prng);
  out["directions_per_trial"] = directions;
  auto params_json = [](const std::vector<std::pair<std::string, Rational>>& ps) {
    Json p = Json::object();
    for (const auto& [k, v] : ps) p[k] = to_json(v);
    return p;
  };
  Json groups = Json::array();
  for (const auto& g : report.groups) {
    Json jg;
    jg["type"] = to_json(g.type);
    jg["count"] = g.trials.size();
    jg["trials"] = g.trials;
    jg["polar_milnor_numbers"] = g.milnor_numbers;
    jg["example_parameters"] = params_json(report.trials.at(static_cast<std::size_t>(g.trials.front())).parameters);
    groups.push_back(std::move(jg));
  }
  out["groups"] = std::move(groups);
  Json ts = Json::array();
  for (const auto& t : report.trials) {
    Json jt;
    jt["index"] = t.index;
    jt["parameters"] = params_json(t.parameters);
    if (t.result) {
      jt["type"] = t.result->type.to_string();
      jt["certified"] = t.result->certified;
      jt["milnor"] = t.result->milnor;
    } else {
      jt["error"] = t.error;
    }
    ts.push_back(std::move(jt));
  }
  out["trial_results"] = std::move(ts);
  out["errors"] = report.errors;
  return out;
}

Direction parse_direction(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("direction must look like a:b");
  Direction d{parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  if (sgn(d.a) == 0 && sgn(d.b) == 0) throw std::invalid_argument("direction (0:0)");
  return d;
}

}  // namespace polar
