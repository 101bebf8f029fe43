#pragma once

// Dense univariate polynomials over a coefficient ring R.
//
// R must provide +, -, *, unary -, construction from int, default
// construction as zero, and a free function is_structural_zero(const R&).
// Field algorithms (division, gcd, squarefree decomposition) additionally
// need a free function inverse(const R&); exact division in an integral
// domain needs exact_quotient(const R&, const R&).

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polar {

template <typename R>
class Poly {
 public:
  Poly() = default;
  Poly(int constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(R(constant));
  }
  Poly(R constant) {  // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(constant));
    trim();
  }
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * var^k
  static Poly monomial(R c, int k) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Coefficient of var^k; zero outside the stored range.
  R coeff(int k) const {
    if (k < 0 || k > degree()) return R();
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const R& lc() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  /// Lowest exponent with a structurally nonzero coefficient, -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_structural_zero(coeffs_[i])) return static_cast<int>(i);
    return -1;
  }

  Poly operator-() const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.coeffs_.size() && i < b.coeffs_.size())
        v[i] = a.coeffs_[i] + b.coeffs_[i];
      else if (i < a.coeffs_.size())
        v[i] = a.coeffs_[i];
      else
        v[i] = b.coeffs_[i];
    }
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_structural_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (is_structural_zero(b.coeffs_[j])) continue;
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const R& s) const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * s);
    return Poly(std::move(v));
  }
  /// Multiplication by var^k, k >= 0.
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<R> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }
  /// Drops every term of degree >= n.
  Poly truncated(int n) const {
    if (n <= 0) return Poly();
    if (degree() < n) return *this;
    return Poly(std::vector<R>(coeffs_.begin(), coeffs_.begin() + n));
  }
  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<R> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * R(static_cast<int>(i));
    return Poly(std::move(v));
  }
  R evaluate(const R& at) const {
    R acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const R& c = coeffs_[static_cast<std::size_t>(k)];
      if (is_structural_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << polar_to_string(c) << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_structural_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

template <typename R>
bool is_structural_zero(const Poly<R>& p) {
  return p.is_zero();
}
template <typename R>
std::string polar_to_string(const Poly<R>& p) {
  return p.to_string("x");
}

// ---------------------------------------------------------------------------
// Field algorithms.

template <typename R>
Poly<R> monic(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return p.scaled(inverse(p.lc()));
}

/// Division with remainder over a field: a = q*b + r, deg r < deg b.
template <typename R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Poly<R>(), a};
  const R inv_lc = inverse(b.lc());
  std::vector<R> rem = a.coeffs();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const R c = rem[static_cast<std::size_t>(k)] * inv_lc;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (is_structural_zero(c)) continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] =
          rem[static_cast<std::size_t>(k - db + i)] - c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <typename R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).second;
}

/// Quotient over a field; throws if b does not divide a.
template <typename R>
Poly<R> divide_exact(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic gcd (zero when both inputs are zero).
template <typename R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <typename R>
struct XgcdResult {
  Poly<R> g;  // monic
  Poly<R> s;
  Poly<R> t;  // s*a + t*b == g
};

template <typename R>
XgcdResult<R> xgcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    Poly<R> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const R inv = inverse(r0.lc());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Yun's squarefree decomposition in characteristic zero: p = lc * prod f_i^i
/// with every f_i monic, squarefree and pairwise coprime. Factors of degree
/// zero are omitted.
template <typename R>
std::vector<std::pair<Poly<R>, int>> squarefree_decomposition(const Poly<R>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Poly<R>, int>> out;
  if (p.degree() == 0) return out;
  const Poly<R> dp = p.derivative();
  const Poly<R> a0 = gcd(p, dp);
  Poly<R> b = divide_exact(p, a0);
  Poly<R> c = divide_exact(dp, a0);
  Poly<R> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly<R> a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integral-domain algorithms.

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <typename R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const R lb = b.lc();
  std::vector<R> rem = a.coeffs();
  int steps = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    const R c = rem[static_cast<std::size_t>(k)];
    for (auto& x : rem) x = x * lb;
    --steps;
    if (!is_structural_zero(c)) {
      for (int i = 0; i <= db; ++i)
        rem[static_cast<std::size_t>(k - db + i)] =
            rem[static_cast<std::size_t>(k - db + i)] - c * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  assert(steps == 0);
  rem.resize(static_cast<std::size_t>(db));
  return Poly<R>(std::move(rem));
}

/// Exact quotient in a domain whose coefficient ring offers exact_quotient.
template <typename R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("exact quotient by zero");
  if (a.is_zero()) return a;
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact quotient");
  std::vector<R> rem = a.coeffs();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const R& top = rem[static_cast<std::size_t>(k)];
    if (is_structural_zero(top)) continue;
    const R c = exact_quotient(top, b.lc());
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] =
          rem[static_cast<std::size_t>(k - db + i)] - c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < db; ++i)
    if (!is_structural_zero(rem[static_cast<std::size_t>(i)])) throw std::domain_error("inexact quotient");
  return Poly<R>(std::move(quo));
}

template <typename R>
Poly<R> power(const Poly<R>& p, int e) {
  Poly<R> acc = 1, base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Resultant of a and b by the subresultant pseudo-remainder sequence.
/// The coefficient ring must be an integral domain with exact_quotient.
template <typename R>
R subresultant_resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) return R();
  R sign(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R acc(1);
    for (int i = 0; i < a.degree(); ++i) acc = acc * b.lc();
    return sign * acc;
  }
  R g(1), h(1);
  auto rpow = [](const R& base, int e) {
    R acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
  };
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return R();
    const R divisor = g * rpow(h, delta);
    std::vector<R> reduced;
    reduced.reserve(r.coeffs().size());
    for (const auto& c : r.coeffs()) reduced.push_back(exact_quotient(c, divisor));
    b = Poly<R>(std::move(reduced));
    g = a.lc();
    // h <- h^(1-delta) * g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_quotient(rpow(g, delta), rpow(h, delta - 1));
    }
    if (b.degree() <= 0) break;
  }
  // b is a nonzero constant here.
  const int da = a.degree();
  R res;
  if (da == 0) {
    res = h;
  } else {
    res = exact_quotient(rpow(b.lc(), da), rpow(h, da - 1));
  }
  return sign * res;
}

}  // namespace polar
