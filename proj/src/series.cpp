#include "polar/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

namespace {

int add_prec(int a, int b) {
  if (a >= TruncatedSeries::kExact || b >= TruncatedSeries::kExact) return TruncatedSeries::kExact;
  return std::min(a + b, TruncatedSeries::kExact);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Algebraic> coeffs, int precision) : c_(std::move(coeffs)), prec_(precision) {
  if (prec_ < 0) prec_ = 0;
  trim();
}

TruncatedSeries TruncatedSeries::monomial(const Algebraic& c, int e, int precision) {
  std::vector<Algebraic> v(static_cast<std::size_t>(e) + 1);
  v.back() = c;
  return TruncatedSeries(std::move(v), precision);
}

void TruncatedSeries::trim() {
  if (!is_exact() && c_.size() > static_cast<std::size_t>(prec_)) c_.resize(static_cast<std::size_t>(prec_));
  while (!c_.empty() && c_.back().is_structural_zero()) c_.pop_back();
}

Algebraic TruncatedSeries::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Algebraic();
  return c_[static_cast<std::size_t>(k)];
}

int TruncatedSeries::structural_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_structural_zero()) return static_cast<int>(i);
  return prec_;
}

int TruncatedSeries::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!is_zero(c_[i])) return static_cast<int>(i);
  if (is_exact()) throw TruncationError("order of the zero series");
  throw TruncationError("series vanishes modulo t^" + std::to_string(prec_));
}

Algebraic TruncatedSeries::leading_coefficient() const { return c_[static_cast<std::size_t>(order())]; }

TruncatedSeries TruncatedSeries::truncated(int precision) const {
  return TruncatedSeries(c_, std::min(precision, prec_));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int prec = std::min(a.prec_, b.prec_);
  std::vector<Algebraic> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] = a.c_[i];
    if (i < b.c_.size()) v[i] = v[i] + b.c_[i];
  }
  return TruncatedSeries(std::move(v), prec);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int va = a.structural_order(), vb = b.structural_order();
  const int prec = std::min(add_prec(a.prec_, vb), add_prec(b.prec_, va));
  if (a.c_.empty() || b.c_.empty()) return TruncatedSeries({}, prec);
  std::size_t len = a.c_.size() + b.c_.size() - 1;
  if (prec < TruncatedSeries::kExact) len = std::min(len, static_cast<std::size_t>(prec));
  std::vector<Algebraic> v(len);
  for (std::size_t i = static_cast<std::size_t>(va); i < a.c_.size() && i < len; ++i) {
    if (a.c_[i].is_structural_zero()) continue;
    for (std::size_t j = static_cast<std::size_t>(vb); j < b.c_.size() && i + j < len; ++j) {
      if (b.c_[j].is_structural_zero()) continue;
      v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return TruncatedSeries(std::move(v), prec);
}

TruncatedSeries TruncatedSeries::scaled(const Algebraic& s) const {
  TruncatedSeries out = *this;
  for (auto& c : out.c_) c = c * s;
  out.trim();
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  std::vector<Algebraic> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return TruncatedSeries(std::move(v), add_prec(prec_, k));
}

TruncatedSeries TruncatedSeries::derivative() const {
  std::vector<Algebraic> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Algebraic(static_cast<long>(i)));
  return TruncatedSeries(std::move(v), is_exact() ? kExact : prec_ - 1);
}

TruncatedSeries TruncatedSeries::power(int e) const {
  TruncatedSeries acc = constant(Algebraic(1)), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

TruncatedSeries inverse_series(const TruncatedSeries& s, int precision) {
  const int prec = std::min(precision, s.precision());
  if (prec >= TruncatedSeries::kExact) throw std::invalid_argument("inverse of a series needs a finite precision");
  const Algebraic c0inv = inverse(s.coeff(0));
  std::vector<Algebraic> r(static_cast<std::size_t>(std::max(prec, 0)));
  if (!r.empty()) r[0] = c0inv;
  const int top = static_cast<int>(s.coeffs().size()) - 1;
  for (int n = 1; n < prec; ++n) {
    Algebraic acc;
    for (int k = 1; k <= std::min(n, top); ++k) acc = acc + s.coeff(k) * r[static_cast<std::size_t>(n - k)];
    r[static_cast<std::size_t>(n)] = -acc * c0inv;
  }
  return TruncatedSeries(std::move(r), prec);
}

TruncatedSeries compose(const Bivariate& f, const TruncatedSeries& x, const TruncatedSeries& y, int precision) {
  // Horner in y over coefficient polynomials in x, with powers of x cached.
  const int dy = f.degree_y();
  TruncatedSeries acc = TruncatedSeries({}, TruncatedSeries::kExact).truncated(precision);
  if (dy < 0) return acc;
  const TruncatedSeries xs = x.truncated(precision), ys = y.truncated(precision);
  std::vector<TruncatedSeries> xpow{TruncatedSeries::constant(Algebraic(1), precision)};
  auto xp = [&](int i) -> const TruncatedSeries& {
    while (static_cast<int>(xpow.size()) <= i) xpow.push_back(xpow.back() * xs);
    return xpow[static_cast<std::size_t>(i)];
  };
  for (int j = dy; j >= 0; --j) {
    TruncatedSeries row = TruncatedSeries({}, precision);
    for (const auto& [k, c] : f.terms())
      if (k.second == j) row = row + xp(k.first).scaled(c);
    acc = (j == dy) ? row : acc * ys + row;
  }
  return acc.truncated(precision);
}

}  // namespace polar
