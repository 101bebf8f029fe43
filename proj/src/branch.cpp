#include "polar/branch.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polar {

PuiseuxBranch::PuiseuxBranch(int n_, std::map<int, Algebraic> terms, int truncation, Algebraic x_coefficient)
    : n(n_), x_coeff(std::move(x_coefficient)), y_terms(std::move(terms)), truncation_order(truncation) {
  if (n < 1) throw std::invalid_argument("branch multiplicity must be positive");
  std::erase_if(y_terms, [](const auto& kv) { return kv.second.is_structural_zero(); });
  for (const auto& [i, c] : y_terms) {
    if (i < 1) throw std::invalid_argument("branch y-exponents must be positive");
    if (i >= truncation_order) throw std::invalid_argument("y-exponent beyond the truncation order");
  }
}

TruncatedSeries PuiseuxBranch::x_series(int precision) const { return TruncatedSeries::monomial(x_coeff, n, precision); }

TruncatedSeries PuiseuxBranch::y_series(int precision) const {
  const int prec = std::min(precision, truncation_order);
  int top = 0;
  for (const auto& [i, c] : y_terms)
    if (i < prec) top = std::max(top, i);
  std::vector<Algebraic> v(static_cast<std::size_t>(top) + 1);
  for (const auto& [i, c] : y_terms)
    if (i < prec) v[static_cast<std::size_t>(i)] = c;
  return TruncatedSeries(std::move(v), prec);
}

int PuiseuxBranch::y_order() const {
  for (const auto& [i, c] : y_terms)
    if (!is_zero(c)) return i;
  return -1;
}

std::vector<int> PuiseuxBranch::characteristic_exponents() const {
  std::vector<int> betas{n};
  if (n == 1) return betas;
  const int m = y_order();
  if (m == 1) return {1};
  if (m >= 0 && m < n) throw std::invalid_argument("y-order below multiplicity");
  int e = n;
  for (const auto& [i, c] : y_terms) {
    if (e == 1) break;
    if (is_zero(c)) continue;
    const int g = std::gcd(e, i);
    if (g < e) {
      betas.push_back(i);
      e = g;
    }
  }
  if (e != 1) {
    if (is_exact()) throw std::invalid_argument("parametrization is not primitive");
    throw TruncationError("truncation too small to resolve the characteristic exponents");
  }
  return betas;
}

LevelPtr PuiseuxBranch::top_level() const {
  LevelPtr top = x_coeff.level();
  for (const auto& [i, c] : y_terms) top = common_level(top, c.level());
  return top;
}

std::string PuiseuxBranch::to_string() const {
  std::ostringstream os;
  os << "x = ";
  if (!x_coeff.is_one()) os << x_coeff.to_string() << "*";
  os << "t^" << n << ", y = ";
  bool first = true;
  for (const auto& [i, c] : y_terms) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.to_string() << "*";
    os << "t^" << i;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(t^" << truncation_order << ")";
  return os.str();
}

NumericalSemigroup semigroup_of_branch(const PuiseuxBranch& b) {
  return NumericalSemigroup::from_characteristic(b.characteristic_exponents());
}

DifferentialValues differential_values(const PuiseuxBranch& b, std::optional<int> margin) {
  DifferentialValues out;
  out.gamma = semigroup_of_branch(b);
  const int c = out.gamma.conductor();
  const int P = c + margin.value_or(b.n);
  if (b.truncation_order < P) throw TruncationError("truncation too small for differential values");
  const int m = b.y_order();
  const TruncatedSeries x = b.x_series(P + 1), y = b.y_series(P + 1);
  const TruncatedSeries dx = x.derivative(), dy = y.derivative();

  std::map<int, TruncatedSeries> basis;  // leading order -> monic element
  std::set<int> values;
  auto insert = [&](TruncatedSeries s) {
    for (;;) {
      int o;
      try {
        o = s.order();
      } catch (const TruncationError&) {
        if (s.precision() < c - 1) throw TruncationError("truncation too small to certify a differential value");
        return;
      }
      if (o >= c - 1) return;  // value >= c lies in Gamma
      auto it = basis.find(o);
      if (it == basis.end()) {
        basis.emplace(o, s.scaled(inverse(s.coeff(o))));
        values.insert(o + 1);
        return;
      }
      s = s - it->second.scaled(s.coeff(o));
    }
  };

  const int ystep = std::max(m, 1);
  for (int i = 0; i * b.n < P; ++i) {
    for (int j = 0; i * b.n + j * ystep < P; ++j) {
      const TruncatedSeries base = x.power(i) * y.power(j);
      insert((base * dx).truncated(P));
      insert((base * dy).truncated(P));
    }
  }
  for (int v : values)
    if (!out.gamma.contains(v)) out.extra.push_back(v);
  out.lambda = zariski_invariant(out);
  return out;
}

std::optional<int> zariski_invariant(const DifferentialValues& d) {
  if (d.extra.empty()) return std::nullopt;
  return *std::min_element(d.extra.begin(), d.extra.end()) - d.gamma.multiplicity();
}

bool normal_form_equivalent(const PuiseuxBranch& b1, const PuiseuxBranch& b2, int lambda) {
  auto support = [](const PuiseuxBranch& b) {
    std::vector<int> s;
    for (const auto& [i, c] : b.y_terms) s.push_back(i);
    return s;
  };
  if (b1.n != b2.n || b1.x_coeff != b2.x_coeff) throw IncomparableNormalFormsError("normal forms have different v0");
  const int v1 = b1.y_order();
  if (v1 != b2.y_order()) throw IncomparableNormalFormsError("normal forms have different v1");
  if (support(b1) != support(b2)) throw IncomparableNormalFormsError("normal forms have different supports");
  const int k = lambda - v1;
  if (k <= 0) throw IncomparableNormalFormsError("lambda must exceed v1");
  APoly g = APoly::monomial(Algebraic(1), k) - APoly(Algebraic(1));
  for (const auto& [i, c] : b1.y_terms) {
    const Algebraic& c2 = b2.y_terms.at(i);
    const int e = ((i - v1) % k + k) % k;
    const APoly p = APoly(c) - APoly::monomial(c2, e);
    g = gcd(g, p);
    if (g.degree() < 1) return false;
  }
  return true;
}

}  // namespace polar
