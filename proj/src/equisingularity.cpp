#include "polar/equisingularity.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <atomic>

#include "polar/implicit.hpp"
#include "polar/newton.hpp"
#include "polar/puiseux.hpp"

namespace polar {

int intersection_multiplicity(const PuiseuxBranch& b, const Bivariate& g) {
  const TruncatedSeries s = compose(g, b.x_series(), b.y_series(), b.truncation_order);
  return s.order();
}

int branch_intersection(const PuiseuxBranch& b1, const PuiseuxBranch& b2) {
  if (!b1.x_coeff.is_one() || !b2.x_coeff.is_one()) throw std::invalid_argument("branch_intersection needs x = t^n");
  const int n1 = b1.n, n2 = b2.n;
  const int L = std::lcm(n1, n2);
  const int a = L / n1, b = L / n2;
  // valid exponents on the cover: below min(prec1 * a, prec2 * b)
  long limit = TruncatedSeries::kExact;
  if (!b1.is_exact()) limit = std::min<long>(limit, static_cast<long>(b1.truncation_order) * a);
  if (!b2.is_exact()) limit = std::min<long>(limit, static_cast<long>(b2.truncation_order) * b);
  // exponents where either side has a term
  std::vector<long> exps;
  for (const auto& [i, c] : b1.y_terms) exps.push_back(static_cast<long>(i) * a);
  for (const auto& [i, c] : b2.y_terms) exps.push_back(static_cast<long>(i) * b);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  APoly G = APoly::monomial(Algebraic(1), n2) - APoly(Algebraic(1));
  long total = 0;  // sum over roots of unity of ord on the cover
  long prev = 0;
  for (long e : exps) {
    if (e >= limit) break;
    // every surviving root has order >= e so far
    total += static_cast<long>(G.degree()) * (e - prev);
    prev = e;
    Algebraic c1 = (e % a == 0) ? [&] {
      auto it = b1.y_terms.find(static_cast<int>(e / a));
      return it == b1.y_terms.end() ? Algebraic() : it->second;
    }()
                                : Algebraic();
    APoly p(c1);
    if (e % b == 0) {
      auto it = b2.y_terms.find(static_cast<int>(e / b));
      if (it != b2.y_terms.end()) p = p - APoly::monomial(it->second, static_cast<int>((e / b) % n2));
    }
    G = gcd(G, p);
    if (G.degree() == 0) break;
  }
  if (G.degree() > 0) {
    if (limit >= TruncatedSeries::kExact) throw std::invalid_argument("branches coincide");
    throw TruncationError("branch contact not resolved at this truncation");
  }
  // total counts ord on the cover summed over n2 roots; rescale to t of b1
  if ((total * n1) % L != 0) throw std::logic_error("non-integral branch intersection");
  return static_cast<int>(total * n1 / L);
}

EquisingularityType equisingularity_type_by_expansion(const Bivariate& f) { return puiseux_expand(f, 1).type(); }

EquisingularityType equisingularity_type(const Bivariate& f) {
  if (f.is_zero()) throw NotReducedError("zero polynomial");
  if (!is_zero(f.coeff(0, 0))) return EquisingularityType();
  const NewtonPolygon np = newton_polygon(f);
  if (np.x_power <= 1 && np.y_power <= 1) {
    const Bivariate g = f.divided_by_monomial(np.x_power, np.y_power);
    if (is_newton_nondegenerate(g)) return nondegenerate_type(np);
  }
  return equisingularity_type_by_expansion(f);
}

std::vector<Direction> random_directions(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
  auto draw = [&] {
    int p;
    do p = num(rng);
    while (p == 0);
    return make_rational(p, den(rng));
  };
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) {
    Direction d{draw(), draw()};
    d.a.canonicalize();
    d.b.canonicalize();
    out.push_back(d);
  }
  return out;
}

GenericPolarResult generic_polar_type(const PuiseuxBranch& b, const GenericPolarOptions& options) {
  if (options.samples < 1 && options.directions.empty()) throw std::invalid_argument("need at least one direction");
  GenericPolarResult out;
  const Bivariate f = implicitize(b);
  out.milnor = milnor_number(f);
  const int v0 = semigroup_of_branch(b).multiplicity();
  std::vector<Direction> dirs = options.directions;
  const bool fixed = !dirs.empty();
  if (!fixed) dirs = random_directions(options.seed, options.samples);
  std::uint64_t extra_seed = options.seed;
  int resamples = 0;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    PolarSample s;
    s.direction = dirs[k];
    try {
      const Bivariate P = polar_curve(f, Algebraic(dirs[k].a), Algebraic(dirs[k].b));
      s.type = equisingularity_type(P);
      const NewtonPolygon np = newton_polygon(P);
      s.nondegenerate = np.x_power == 0 && np.y_power == 0 && is_newton_nondegenerate(P);
      s.polar_milnor = milnor_number(P);
      s.teissier = intersection_multiplicity(b, P);
    } catch (const NotReducedError& e) {
      if (!fixed && resamples < 16) {
        // in the finite bad set: draw a replacement
        ++resamples;
        extra_seed = extra_seed * 6364136223846793005ULL + 1442695040888963407ULL;
        dirs.push_back(random_directions(extra_seed, 1).front());
      }
      s.type.reset();
      s.error = e.what();
    } catch (const Error& e) {
      s.type.reset();
      s.error = e.what();
    }
    out.samples.push_back(std::move(s));
  }
  std::vector<std::pair<EquisingularityType, int>> counts;
  for (const auto& s : out.samples) {
    if (!s.type) continue;
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& p) { return p.first == *s.type; });
    if (it == counts.end())
      counts.emplace_back(*s.type, 1);
    else
      ++it->second;
  }
  if (counts.empty()) throw Error("no polar direction produced a type");
  std::stable_sort(counts.begin(), counts.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  out.type = counts.front().first;
  out.certified = counts.size() == 1;
  out.teissier_ok = true;
  for (const auto& s : out.samples) {
    if (!s.type) continue;
    if (*s.type != out.type) {
      out.dissenting.push_back(s.direction);
      continue;
    }
    if (s.teissier != out.milnor + v0 - 1) out.teissier_ok = false;
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SweepReport stratum_sweep(const FamilySampler& family, int trials, std::uint64_t seed, int directions, int workers) {
  if (trials < 1) throw std::invalid_argument("a sweep needs at least one trial");
  if (workers <= 0) {
    const char* env = std::getenv("POLAR_WORKERS");
    workers = env ? std::max(1, std::atoi(env)) : 1;
  }
  SweepReport report;
  report.trials.resize(static_cast<std::size_t>(trials));
  auto run = [&](int index) {
    SweepTrial& t = report.trials[static_cast<std::size_t>(index)];
    t.index = index;
    try {
      const std::uint64_t s = trial_seed(seed, index);
      FamilySample sample = family(s, index);
      t.parameters = sample.parameters;
      GenericPolarOptions opt;
      opt.samples = directions;
      opt.seed = s ^ 0xD1B54A32D192ED03ULL;
      t.result = generic_polar_type(sample.branch, opt);
    } catch (const std::exception& e) {
      t.error = e.what();
    }
  };
  if (workers == 1) {
    for (int i = 0; i < trials; ++i) run(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, trials); ++w)
      pool.emplace_back([&] {
        for (int i; (i = next.fetch_add(1)) < trials;) run(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& t : report.trials) {
    if (!t.result) {
      ++report.errors;
      continue;
    }
    auto it = std::find_if(report.groups.begin(), report.groups.end(),
                           [&](const SweepGroup& g) { return g.type == t.result->type; });
    if (it == report.groups.end()) {
      report.groups.push_back({t.result->type, {}, {}});
      it = std::prev(report.groups.end());
    }
    it->trials.push_back(t.index);
    for (const auto& s : t.result->samples)
      if (s.type && *s.type == t.result->type && s.polar_milnor >= 0 &&
          std::find(it->milnor_numbers.begin(), it->milnor_numbers.end(), s.polar_milnor) == it->milnor_numbers.end())
        it->milnor_numbers.push_back(s.polar_milnor);
  }
  std::stable_sort(report.groups.begin(), report.groups.end(), [](const SweepGroup& a, const SweepGroup& b) {
    if (a.trials.size() != b.trials.size()) return a.trials.size() > b.trials.size();
    return a.type < b.type;
  });
  for (auto& g : report.groups) std::sort(g.milnor_numbers.begin(), g.milnor_numbers.end());
  return report;
}

}  // namespace polar
