#include "polar/bivariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polar {

Bivariate::Bivariate(const Algebraic& c) {
  if (!c.is_structural_zero()) terms_.emplace(Key{0, 0}, c);
}

Bivariate::Bivariate(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [k, c] : terms_)
    if (k.first < 0 || k.second < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
  cleanup();
}

void Bivariate::cleanup() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_structural_zero(); });
}

Bivariate Bivariate::monomial(const Algebraic& c, int i, int j) {
  Terms t;
  t.emplace(Key{i, j}, c);
  return Bivariate(std::move(t));
}

Algebraic Bivariate::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Algebraic() : it->second;
}

void Bivariate::add_term(int i, int j, const Algebraic& c) {
  if (c.is_structural_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_structural_zero()) terms_.erase(it);
  }
}

int Bivariate::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int Bivariate::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int Bivariate::order() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.first + k.second < d) d = k.first + k.second;
  return d;
}

Bivariate Bivariate::tangent_cone() const {
  const int o = order();
  Terms t;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second == o) t.emplace(k, c);
  return Bivariate(std::move(t));
}

Bivariate Bivariate::operator-() const {
  Bivariate out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Bivariate operator+(const Bivariate& a, const Bivariate& b) {
  Bivariate out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
  return out;
}

Bivariate operator-(const Bivariate& a, const Bivariate& b) { return a + (-b); }

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  Bivariate out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

Bivariate Bivariate::scaled(const Algebraic& s) const {
  Bivariate out;
  for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c * s);
  return out;
}

Bivariate Bivariate::derivative_x() const {
  Bivariate out;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) out.add_term(k.first - 1, k.second, c * Algebraic(k.first));
  return out;
}

Bivariate Bivariate::derivative_y() const {
  Bivariate out;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) out.add_term(k.first, k.second - 1, c * Algebraic(k.second));
  return out;
}

Algebraic binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Algebraic(Rational(r));
}

Bivariate Bivariate::shear_x(const Algebraic& r) const {
  Bivariate out;
  for (const auto& [k, c] : terms_) {
    const auto [i, j] = k;
    Algebraic rp(1);
    for (int s = 0; s <= i; ++s) {
      // C(i,s) x^(i-s) (r y)^s
      out.add_term(i - s, j + s, c * binomial(i, s) * rp);
      rp = rp * r;
    }
  }
  return out;
}

Bivariate Bivariate::shear_y(const Algebraic& r) const { return swapped().shear_x(r).swapped(); }

Bivariate Bivariate::swapped() const {
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(Key{k.second, k.first}, c);
  return Bivariate(std::move(t));
}

Bivariate Bivariate::truncated_x(int n) const {
  Terms t;
  for (const auto& [k, c] : terms_)
    if (k.first < n) t.emplace(k, c);
  return Bivariate(std::move(t));
}

int Bivariate::x_power() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) p = std::min(p, k.first);
  return p;
}

int Bivariate::y_power() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) p = std::min(p, k.second);
  return p;
}

Bivariate Bivariate::divided_by_monomial(int a, int b) const {
  Terms t;
  for (const auto& [k, c] : terms_) {
    if (k.first < a || k.second < b) throw std::domain_error("monomial does not divide polynomial");
    t.emplace(Key{k.first - a, k.second - b}, c);
  }
  return Bivariate(std::move(t));
}

Poly<APoly> Bivariate::as_poly_in_y() const {
  const int dy = degree_y();
  std::vector<std::vector<Algebraic>> rows(static_cast<std::size_t>(std::max(dy + 1, 0)));
  for (const auto& [k, c] : terms_) {
    auto& row = rows[static_cast<std::size_t>(k.second)];
    if (row.size() <= static_cast<std::size_t>(k.first)) row.resize(static_cast<std::size_t>(k.first) + 1);
    row[static_cast<std::size_t>(k.first)] = c;
  }
  std::vector<APoly> cs;
  cs.reserve(rows.size());
  for (auto& r : rows) cs.emplace_back(std::move(r));
  return Poly<APoly>(std::move(cs));
}

Bivariate Bivariate::from_poly_in_y(const Poly<APoly>& p) {
  Bivariate out;
  for (int j = 0; j <= p.degree(); ++j) {
    const APoly& row = p.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= row.degree(); ++i) out.add_term(i, j, row.coeffs()[static_cast<std::size_t>(i)]);
  }
  return out;
}

APoly Bivariate::coeff_of_y(int j) const {
  std::vector<Algebraic> row;
  for (const auto& [k, c] : terms_) {
    if (k.second != j) continue;
    if (row.size() <= static_cast<std::size_t>(k.first)) row.resize(static_cast<std::size_t>(k.first) + 1);
    row[static_cast<std::size_t>(k.first)] = c;
  }
  return APoly(std::move(row));
}

LevelPtr Bivariate::top_level() const {
  LevelPtr top;
  for (const auto& [k, c] : terms_) top = common_level(top, c.level());
  return top;
}

std::string Bivariate::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c.is_one();
    if (!unit || (k.first == 0 && k.second == 0)) os << c.to_string();
    if (!unit && (k.first || k.second)) os << "*";
    if (k.first) os << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.first && k.second) os << "*";
    if (k.second) os << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

APoly resultant_y(const Bivariate& f, const Bivariate& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  if (f.degree_y() <= 0 && g.degree_y() <= 0) throw std::invalid_argument("resultant_y needs positive y-degree");
  return subresultant_resultant(f.as_poly_in_y(), g.as_poly_in_y());
}

}  // namespace polar
