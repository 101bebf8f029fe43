#include "polar/algebraic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polar {

// ---------------------------------------------------------------------------
// Levels

TowerLevel::TowerLevel(std::string name, LevelPtr parent, APoly defining)
    : name_(std::move(name)), parent_(std::move(parent)), defining_(std::move(defining)) {
  if (defining_.degree() < 2) throw std::invalid_argument("tower level needs a defining polynomial of degree >= 2");
  if (!defining_.lc().is_one()) throw std::invalid_argument("tower level defining polynomial must be monic");
  depth_ = parent_ ? parent_->depth() + 1 : 1;
  total_degree_ = defining_.degree() * (parent_ ? parent_->total_degree() : 1);
}

bool is_ancestor_or_self(const LevelPtr& ancestor, const LevelPtr& level) {
  if (!ancestor) return true;
  const TowerLevel* p = level.get();
  while (p && p->depth() > ancestor->depth()) p = p->parent().get();
  return p == ancestor.get();
}

LevelPtr common_level(const LevelPtr& a, const LevelPtr& b) {
  if (a == b) return a;
  if (is_ancestor_or_self(a, b)) return b;
  if (is_ancestor_or_self(b, a)) return a;
  throw std::logic_error("elements from incompatible towers");
}

std::vector<LevelPtr> level_chain(const LevelPtr& level) {
  std::vector<LevelPtr> chain;
  for (LevelPtr p = level; p; p = p->parent()) chain.push_back(p);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

LevelPtr top_level(const APoly& p) {
  LevelPtr top;
  for (const auto& c : p.coeffs()) top = common_level(top, c.level());
  return top;
}

// ---------------------------------------------------------------------------
// Elements

Algebraic Algebraic::make(const LevelPtr& level, std::vector<Algebraic> coeffs) {
  if (level) {
    const auto& def = level->defining_polynomial().coeffs();
    const std::size_t d = def.size() - 1;
    if (coeffs.size() > d) {
      for (std::size_t k = coeffs.size() - 1; k >= d; --k) {
        const Algebraic c = coeffs[k];
        if (!c.is_structural_zero()) {
          for (std::size_t i = 0; i < d; ++i) coeffs[k - d + i] = coeffs[k - d + i] - c * def[i];
        }
        if (k == d) break;
      }
      coeffs.resize(d);
    }
  }
  while (!coeffs.empty() && coeffs.back().is_structural_zero()) coeffs.pop_back();
  if (coeffs.empty()) return Algebraic();
  if (coeffs.size() == 1) return std::move(coeffs[0]);
  Algebraic out;
  out.level_ = level;
  out.c_ = std::move(coeffs);
  return out;
}

Algebraic Algebraic::generator(const LevelPtr& level) {
  if (!level) throw std::invalid_argument("generator of the rational level");
  return make(level, {Algebraic(0), Algebraic(1)});
}

Algebraic Algebraic::from_coefficients(const LevelPtr& level, std::vector<Algebraic> coeffs) {
  if (!level) {
    Algebraic acc;
    for (const auto& c : coeffs) acc += c;  // degenerate use: constant only
    if (coeffs.size() > 1) throw std::invalid_argument("coefficients given for the rational level");
    return acc;
  }
  for (const auto& c : coeffs)
    if (!is_ancestor_or_self(c.level(), level->parent())) throw std::logic_error("coefficient outside the parent tower");
  return make(level, std::move(coeffs));
}

const Rational& Algebraic::rational() const {
  if (level_) throw std::logic_error("element is not rational: " + to_string());
  return q_;
}

std::vector<Algebraic> Algebraic::coordinates(const LevelPtr& level) const {
  if (!level) return {*this};
  std::vector<Algebraic> out(static_cast<std::size_t>(level->degree()));
  if (level_ == level) {
    std::copy(c_.begin(), c_.end(), out.begin());
  } else {
    if (!is_ancestor_or_self(level_, level)) throw std::logic_error("coordinates requested in an unrelated tower");
    out[0] = *this;
  }
  return out;
}

Algebraic Algebraic::operator-() const {
  if (!level_) return Algebraic(Rational(-q_));
  Algebraic out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Algebraic operator+(const Algebraic& a, const Algebraic& b) {
  if (!a.level_ && !b.level_) return Algebraic(Rational(a.q_ + b.q_));
  if (a.is_structural_zero()) return b;
  if (b.is_structural_zero()) return a;
  if (a.level_ == b.level_) {
    std::vector<Algebraic> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.c_.size()) v[i] = a.c_[i];
      if (i < b.c_.size()) v[i] = v[i] + b.c_[i];
    }
    return Algebraic::make(a.level_, std::move(v));
  }
  const LevelPtr top = common_level(a.level_, b.level_);
  const Algebraic& deep = (top == a.level_) ? a : b;
  const Algebraic& shallow = (top == a.level_) ? b : a;
  std::vector<Algebraic> v = deep.c_;
  v[0] = v[0] + shallow;
  return Algebraic::make(top, std::move(v));
}

Algebraic operator-(const Algebraic& a, const Algebraic& b) { return a + (-b); }

Algebraic operator*(const Algebraic& a, const Algebraic& b) {
  if (!a.level_ && !b.level_) return Algebraic(Rational(a.q_ * b.q_));
  if (a.is_structural_zero() || b.is_structural_zero()) return Algebraic();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.level_ == b.level_) {
    std::vector<Algebraic> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_structural_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_structural_zero()) continue;
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Algebraic::make(a.level_, std::move(v));
  }
  const LevelPtr top = common_level(a.level_, b.level_);
  const Algebraic& deep = (top == a.level_) ? a : b;
  const Algebraic& shallow = (top == a.level_) ? b : a;
  std::vector<Algebraic> v;
  v.reserve(deep.c_.size());
  for (const auto& c : deep.c_) v.push_back(c * shallow);
  return Algebraic::make(top, std::move(v));
}

Algebraic operator/(const Algebraic& a, const Algebraic& b) { return a * inverse(b); }

bool operator==(const Algebraic& a, const Algebraic& b) {
  if (a.level_ != b.level_) return false;
  if (!a.level_) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

std::string Algebraic::to_string() const {
  if (!level_) return polar::to_string(q_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_structural_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = c_[k].to_string();
    if (k == 0) {
      os << cs;
      continue;
    }
    if (!c_[k].is_one()) os << (c_[k].is_rational() ? cs : "(" + cs + ")") << "*";
    os << level_->name();
    if (k >= 2) os << "^" << k;
  }
  return "(" + os.str() + ")";
}

Algebraic inverse(const Algebraic& a) {
  if (a.is_rational()) {
    if (sgn(a.rational()) == 0) throw std::domain_error("division by zero");
    return Algebraic(Rational(1 / a.rational()));
  }
  const LevelPtr& level = a.level();
  const APoly& m = level->defining_polynomial();
  const auto res = xgcd(APoly(a.coefficients()), m);
  if (res.g.degree() > 0) throw TowerSplit(level, res.g, monic(divide_exact(m, res.g)));
  return Algebraic::from_coefficients(level, res.s.coeffs());
}

bool is_zero(const Algebraic& a) {
  if (a.is_structural_zero()) return true;
  if (a.is_rational()) return false;
  (void)inverse(a);
  return false;
}

Algebraic pow(const Algebraic& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  Algebraic acc(1), base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Adjoining roots

AdjoinedRoot adjoin_root_unchecked(const LevelPtr& base, const APoly& p, const std::string& name) {
  if (p.degree() < 1) throw std::invalid_argument("adjoin_root needs a polynomial of degree >= 1");
  const LevelPtr parent = common_level(base, top_level(p));
  if (p.degree() == 1) return {parent, -p.coeff(0) / p.coeff(1)};
  auto level = std::make_shared<const TowerLevel>(name, parent, monic(p));
  return {level, Algebraic::generator(level)};
}

AdjoinedRoot adjoin_root(const LevelPtr& base, const APoly& p, const std::string& name) {
  if (p.degree() < 1) throw std::invalid_argument("adjoin_root needs a polynomial of degree >= 1");
  if (!is_squarefree(p)) throw std::invalid_argument("adjoin_root needs a squarefree polynomial");
  return adjoin_root_unchecked(base, p, name);
}

// ---------------------------------------------------------------------------
// Remapping after a split

namespace {

Algebraic evaluate_in_parent(const std::vector<Algebraic>& coeffs, const Algebraic& at) {
  Algebraic acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * at + *it;
  return acc;
}

}  // namespace

LevelPtr remap_level(const LevelPtr& level, LevelRemap& map) {
  if (!level) return level;
  if (level == map.from) return map.to ? map.to : map.from->parent();
  if (!is_ancestor_or_self(map.from, level)) return level;
  for (const auto& [old, fresh] : map.cache)
    if (old == level.get()) return fresh;
  LevelPtr parent = remap_level(level->parent(), map);
  APoly def = remap(level->defining_polynomial(), map);
  LevelPtr fresh;
  if (def.degree() >= 2) fresh = std::make_shared<const TowerLevel>(level->name(), parent, def);
  map.cache.emplace_back(level.get(), fresh);
  return fresh;
}

Algebraic remap(const Algebraic& a, LevelRemap& map) {
  if (a.is_rational()) return a;
  if (!is_ancestor_or_self(map.from, a.level())) return a;
  std::vector<Algebraic> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) coeffs.push_back(remap(c, map));
  if (a.level() == map.from) {
    if (!map.to) {
      // The level collapsed to a root lying in the parent: evaluate there.
      return evaluate_in_parent(coeffs, map.root);
    }
    return Algebraic::from_coefficients(map.to, std::move(coeffs));
  }
  LevelPtr fresh = remap_level(a.level(), map);
  return Algebraic::from_coefficients(fresh, std::move(coeffs));
}

APoly remap(const APoly& p, LevelRemap& map) {
  std::vector<Algebraic> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(remap(c, map));
  return APoly(std::move(v));
}

LevelRemap make_component(const LevelPtr& level, const APoly& factor) {
  LevelRemap map;
  map.from = level;
  if (factor.degree() == 1) {
    map.root = -factor.coeff(0) / factor.coeff(1);
  } else {
    map.to = std::make_shared<const TowerLevel>(level->name(), level->parent(), monic(factor));
  }
  return map;
}

bool is_squarefree(const APoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_squarefree of the zero polynomial");
  try {
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
  } catch (const TowerSplit& split) {
    for (const APoly* factor : {&split.first(), &split.second()}) {
      LevelRemap map = make_component(split.level(), *factor);
      if (!is_squarefree(remap(p, map))) return false;
    }
    return true;
  }
}

}  // namespace polar
