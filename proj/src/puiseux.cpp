#include "polar/puiseux.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "polar/implicit.hpp"
#include "polar/local.hpp"
#include "polar/newton.hpp"

namespace polar {

namespace {

struct Context {
  int next_id = 1;
  int next_level = 1;
  int max_depth = 0;
  int target = 0;
  std::vector<ExpandedBranch> out;
};

// Verifies that vertex coefficients of the polygon are units (a zero divisor
// there throws a split for the level that owns it).
void check_vertices(const Bivariate& F, const NewtonPolygon& np) {
  for (const auto& [i, j] : np.vertices) (void)is_zero(F.coeff(i, j));
}

class PowerCache {
 public:
  explicit PowerCache(Algebraic base) : base_(std::move(base)) {}
  const Algebraic& get(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    Algebraic val = e >= 0 ? pow(base_, e) : pow(inverse(base_), -e);
    return cache_.emplace(e, std::move(val)).first->second;
  }

 private:
  Algebraic base_;
  std::map<int, Algebraic> cache_;
};

// F(xi^v X^Q, X^M (xi^u + Y)) / X^l
Bivariate substitute(const Bivariate& F, const PuiseuxStep& s, int l) {
  PowerCache xp(s.xi);
  Bivariate out;
  for (const auto& [k, a] : F.terms()) {
    const auto [i, j] = k;
    const int xe = s.Q * i + s.M * j - l;
    if (xe < 0) throw std::logic_error("support below the Newton polygon");
    for (int t = 0; t <= j; ++t) {
      Algebraic c = a * binomial(j, t) * xp.get(s.v * i + s.u * (j - t));
      out.add_term(xe, t, c);
    }
  }
  return out;
}

// Solves F(X, phi(X)) = 0 with phi(0) = 0 modulo X^prec by Newton iteration.
TruncatedSeries solve_simple(const Bivariate& F, int prec) {
  const TruncatedSeries X = TruncatedSeries::monomial(Algebraic(1), 1);
  const Bivariate Fy = F.derivative_y();
  TruncatedSeries phi({}, 1);
  for (int p = 1; p < prec;) {
    const int p2 = std::min(2 * p, prec);
    const TruncatedSeries cur(phi.coeffs(), p2);
    const TruncatedSeries val = compose(F, X, cur, p2);
    const TruncatedSeries der = compose(Fy, X, cur, p2);
    phi = TruncatedSeries((cur - val * inverse_series(der, p2)).coeffs(), p2);
    p = p2;
  }
  return phi;
}

void emit(Context& ctx, std::vector<PuiseuxStep> path, const Bivariate* leaf_poly) {
  ExpandedBranch b;
  b.path = std::move(path);
  for (const auto& s : b.path) b.conjugates *= s.adjoined_degree();
  // shift of the leaf series inside y(T)
  long shift = 0;
  for (std::size_t k = 0; k < b.path.size(); ++k) {
    if (b.path[k].axis) continue;
    shift += static_cast<long>(b.ramification_from(k + 1)) * b.path[k].M;
  }
  TruncatedSeries Y;
  if (leaf_poly) {
    Y = solve_simple(*leaf_poly, static_cast<int>(std::max<long>(1, ctx.target - shift)));
  } else {
    Y = TruncatedSeries::exact({});
  }
  Algebraic lambda(1);
  int N = 1;
  for (std::size_t k = b.path.size(); k-- > 0;) {
    const PuiseuxStep& s = b.path[k];
    if (s.axis) continue;
    const Algebraic lm = pow(lambda, s.M);
    Y = (Y + TruncatedSeries::constant(pow(s.xi, s.u))).shifted(N * s.M).scaled(lm);
    lambda = pow(s.xi, s.v) * pow(lambda, s.Q);
    N *= s.Q;
  }
  std::map<int, Algebraic> terms;
  for (std::size_t i = 0; i < Y.coeffs().size(); ++i)
    if (!Y.coeffs()[i].is_structural_zero()) terms.emplace(static_cast<int>(i), Y.coeffs()[i]);
  b.branch = PuiseuxBranch(N, std::move(terms), Y.precision(), lambda);
  ctx.out.push_back(std::move(b));
}

void expand_node(Context& ctx, const Bivariate& F, int depth, std::vector<PuiseuxStep>& path);

void expand_root_component(Context& ctx, const Bivariate& F, int depth, std::vector<PuiseuxStep>& path,
                           PuiseuxStep step, int l, const APoly& factor, int multiplicity) {
  // Adjoin a root of `factor`; restart on every component if the new level splits.
  std::deque<APoly> pending{factor};
  while (!pending.empty()) {
    const APoly s = pending.front();
    pending.pop_front();
    PuiseuxStep st = step;
    st.child = ctx.next_id++;
    st.multiplicity = multiplicity;
    if (s.degree() == 1) {
      st.xi = -s.coeff(0) / s.coeff(1);
      st.adjoined = nullptr;
    } else {
      auto root = adjoin_root_unchecked(top_level(s), s, "z" + std::to_string(ctx.next_level++));
      st.xi = root.root;
      st.adjoined = root.level;
    }
    const std::size_t saved = ctx.out.size();
    try {
      const Bivariate F1 = substitute(F, st, l);
      path.push_back(st);
      try {
        if (multiplicity == 1) {
          emit(ctx, path, &F1);
        } else {
          expand_node(ctx, F1, depth + 1, path);
        }
      } catch (...) {
        path.pop_back();
        throw;
      }
      path.pop_back();
    } catch (const TowerSplit& split) {
      if (!st.adjoined || split.level() != st.adjoined) throw;
      ctx.out.resize(saved);
      pending.push_back(split.first());
      pending.push_back(split.second());
    }
  }
}

void expand_node(Context& ctx, const Bivariate& F, int depth, std::vector<PuiseuxStep>& path) {
  if (depth > ctx.max_depth) throw NotReducedError("expansion depth exceeded: the germ is not reduced");
  const int node = ctx.next_id++;
  const NewtonPolygon np = newton_polygon(F);
  check_vertices(F, np);
  if (np.x_power > 0) throw std::logic_error("expansion node divisible by X");
  if (np.y_power > 1) throw NotReducedError("repeated factor through the origin");
  if (np.y_power == 1) {
    PuiseuxStep st;
    st.node = node;
    st.child = ctx.next_id++;
    st.axis = true;
    path.push_back(st);
    emit(ctx, path, nullptr);
    path.pop_back();
  }
  for (const auto& side : np.sides) {
    const int n = side.height(), m = side.width();
    const int g = std::gcd(n, m);
    PuiseuxStep step;
    step.node = node;
    step.Q = n / g;
    step.M = m / g;
    // u Q - v M = 1 with v >= 0 minimal
    if (step.Q == 1) {
      step.v = 0;
      step.u = 1;
    } else {
      int v = 0;
      while (((1 + static_cast<long>(v) * step.M) % step.Q) != 0) ++v;
      step.v = v;
      step.u = static_cast<int>((1 + static_cast<long>(v) * step.M) / step.Q);
    }
    const int l = step.Q * side.start.first + step.M * side.start.second;
    // Phi(w) = sum_k a(i_end - M k, j_end + Q k) w^k
    std::vector<Algebraic> phi(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k) phi[static_cast<std::size_t>(k)] = F.coeff(side.end.first - step.M * k, side.end.second + step.Q * k);
    const APoly Phi(std::move(phi));
    for (const auto& [factor, mult] : squarefree_decomposition(Phi))
      expand_root_component(ctx, F, depth, path, step, l, factor, mult);
  }
}

}  // namespace

int ExpandedBranch::ramification_from(std::size_t k) const {
  int N = 1;
  for (std::size_t i = k; i < path.size(); ++i) N *= path[i].Q;
  return N;
}

std::vector<int> ExpandedBranch::characteristic_exponents() const {
  std::vector<int> betas{ramification_from(0)};
  int E = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].axis) break;
    E += ramification_from(k + 1) * path[k].M;
    if (path[k].Q > 1) betas.push_back(E);
  }
  return betas;
}

NumericalSemigroup ExpandedBranch::semigroup() const {
  return NumericalSemigroup::from_characteristic(characteristic_exponents());
}

int PuiseuxExpansion::geometric_branch_count() const {
  int c = 0;
  for (const auto& b : branches) c += b.conjugates;
  return c;
}

int expansion_intersection(const PuiseuxExpansion& e, std::size_t a, const std::vector<int>& ea, std::size_t b,
                           const std::vector<int>& eb) {
  const auto& A = e.branches.at(a);
  const auto& B = e.branches.at(b);
  Rational total(0);
  const std::size_t len = std::min(A.path.size(), B.path.size());
  for (std::size_t k = 0; k < len; ++k) {
    const PuiseuxStep& sa = A.path[k];
    const PuiseuxStep& sb = B.path[k];
    if (sa.node != sb.node) throw std::logic_error("expansion paths out of step");
    const Rational aA = A.ramification_from(k), aB = B.ramification_from(k);
    const bool same = sa.child == sb.child && ea.at(k) == eb.at(k);
    if (same) {
      if (sa.axis) throw std::invalid_argument("intersection of a branch with itself");
      total += Rational(sa.M, sa.Q) * aA * aB;
      continue;
    }
    Rational d;
    if (sa.axis && sb.axis) throw std::logic_error("two axis branches at one node");
    if (sa.axis) {
      d = Rational(sb.M, sb.Q);
    } else if (sb.axis) {
      d = Rational(sa.M, sa.Q);
    } else {
      d = std::min(Rational(sa.M, sa.Q), Rational(sb.M, sb.Q));
    }
    total += d * aA * aB;
    if (total.get_den() != 1) throw std::logic_error("non-integral intersection number");
    return static_cast<int>(total.get_num().get_si());
  }
  throw std::invalid_argument("intersection of a branch with itself");
}

EquisingularityType PuiseuxExpansion::type() const {
  struct Geo {
    std::size_t branch;
    std::vector<int> emb;
  };
  std::vector<Geo> geos;
  for (std::size_t bi = 0; bi < branches.size(); ++bi) {
    const auto& path = branches[bi].path;
    std::vector<int> emb(path.size(), 0);
    for (;;) {
      geos.push_back({bi, emb});
      std::size_t k = path.size();
      bool advanced = false;
      while (k-- > 0) {
        if (++emb[k] < path[k].adjoined_degree()) {
          advanced = true;
          break;
        }
        emb[k] = 0;
      }
      if (!advanced) break;
    }
  }
  std::vector<NumericalSemigroup> semis;
  for (const auto& g : geos) semis.push_back(branches[g.branch].semigroup());
  std::vector<std::vector<int>> I(geos.size(), std::vector<int>(geos.size(), 0));
  for (std::size_t i = 0; i < geos.size(); ++i)
    for (std::size_t j = i + 1; j < geos.size(); ++j)
      I[i][j] = I[j][i] = expansion_intersection(*this, geos[i].branch, geos[i].emb, geos[j].branch, geos[j].emb);
  return EquisingularityType(std::move(semis), std::move(I));
}

PuiseuxExpansion puiseux_expand(const Bivariate& f, int target_order) {
  if (f.is_zero()) throw NotReducedError("zero polynomial");
  PuiseuxExpansion out;
  out.shear = 0;
  out.polynomial = f;
  if (!is_zero(f.coeff(0, 0))) return out;  // origin not on the curve
  // x must not divide the tangent cone
  auto bad = [](const Bivariate& g) {
    const Bivariate tc = g.tangent_cone();
    return is_zero(tc.coeff(0, tc.order()));
  };
  if (bad(f)) {
    bool found = false;
    for (const auto& r : shear_parameters()) {
      const Bivariate g = f.shear_x(Algebraic(r));
      if (!bad(g)) {
        out.polynomial = g;
        out.shear = r;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no shear removed x from the tangent cone");
  }
  try {
    out.milnor = milnor_number(out.polynomial);
  } catch (const NonIsolatedSingularityError&) {
    throw NotReducedError("germ is not reduced (non-isolated singularity)");
  }
  Context ctx;
  ctx.max_depth = out.milnor + 2;
  ctx.target = target_order > 0 ? target_order : 2 * out.milnor + 2 * std::max(out.polynomial.degree_y(), 1);
  std::vector<PuiseuxStep> path;
  expand_node(ctx, out.polynomial, 0, path);
  out.branches = std::move(ctx.out);
  return out;
}

}  // namespace polar
