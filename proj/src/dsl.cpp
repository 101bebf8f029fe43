#include "polar/dsl.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <tuple>

namespace polar {

namespace {

std::optional<Integer> exact_root(const Integer& v, int n) {
  if (sgn(v) < 0 && n % 2 == 0) return std::nullopt;
  Integer a = abs(v), r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  if (sgn(v) < 0) r = -r;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BranchSpec run() {
    expect_word("x");
    expect('=');
    const std::size_t npos = at();
    const int n = parse_t_power();
    if (n < 1) throw ParseError("multiplicity N must be positive", npos);
    expect(';');
    expect_word("y");
    expect('=');
    std::vector<DslTerm> terms;
    std::vector<std::size_t> where_at;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        break;
      }
      first = false;
      where_at.push_back(at());
      DslTerm term = parse_term();
      if (sign < 0) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
    }
    std::vector<DslParameter> params;
    std::map<std::string, std::size_t> bound_at;
    skip();
    if (peek_word() == "where") {
      i_ += 5;
      for (;;) {
        skip();
        const std::size_t pos = at();
        DslParameter p;
        p.name = parse_identifier();
        if (bound_at.count(p.name)) throw ParseError("parameter '" + p.name + "' bound twice", pos);
        bound_at[p.name] = pos;
        expect('=');
        parse_value(p);
        params.push_back(std::move(p));
        skip();
        if (peek() != ',') break;
        ++i_;
      }
    }
    skip();
    if (peek() == ';') {
      ++i_;
      skip();
    }
    if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (!terms[k].parameter.empty() && !bound_at.count(terms[k].parameter))
        throw ParseError("unbound parameter '" + terms[k].parameter + "'", where_at[k]);
      if (k > 0 && terms[k].exponent <= terms[k - 1].exponent)
        throw ParseError(terms[k].exponent == terms[k - 1].exponent ? "duplicate exponent" : "exponents must be strictly increasing",
                         where_at[k]);
    }
    if (terms.front().exponent < n) throw ParseError("y-order below multiplicity", where_at.front());
    if (terms.front().exponent == n) throw ParseError("y-order equal to multiplicity", where_at.front());
    try {
      BranchSpec spec = make_branch_spec(n, std::move(terms), std::move(params));
      spec.source = std::string(s_);
      return spec;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  std::size_t at() {
    skip();
    return i_;
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  std::string_view peek_word() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    return s_.substr(i_, j - i_);
  }
  [[noreturn]] void fail(const std::string& what) {
    if (i_ >= s_.size()) throw ParseError("expected " + what + ", found end of input", i_);
    throw ParseError("expected " + what + ", found '" + s_[i_] + "'", i_);
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++i_;
  }
  void expect_word(std::string_view w) {
    if (peek_word() != w) fail("'" + std::string(w) + "'");
    i_ += w.size();
  }
  std::string parse_identifier() {
    skip();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("parameter name");
    const std::size_t pos = i_;
    std::string w(peek_word());
    if (w == "t" || w == "x" || w == "y" || w == "where" || w == "sqrt" || w == "cbrt" || w == "root")
      throw ParseError("'" + w + "' is reserved", pos);
    i_ += w.size();
    return w;
  }
  Integer parse_integer() {
    skip();
    const std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("integer");
    return Integer(std::string(s_.substr(start, i_ - start)), 10);
  }
  int parse_small(const char* what) {
    const std::size_t pos = at();
    const Integer v = parse_integer();
    if (!v.fits_sint_p() || v > 100000) throw ParseError(std::string(what) + " too large", pos);
    return static_cast<int>(v.get_si());
  }
  // unsigned rational literal
  Rational parse_rational() {
    const Integer num = parse_integer();
    skip();
    if (peek() != '/') return Rational(num);
    ++i_;
    const std::size_t pos = at();
    const Integer den = parse_integer();
    if (den == 0) throw ParseError("zero denominator", pos);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational parse_signed_rational() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++i_;
    }
    Rational q = parse_rational();
    return neg ? Rational(-q) : q;
  }
  int parse_t_power() {
    expect_word("t");
    skip();
    if (peek() != '^') return 1;
    ++i_;
    skip();
    if (peek() == '-' || peek() == '0') throw ParseError("exponent must be positive", i_);
    return parse_small("exponent");
  }
  DslTerm parse_term() {
    DslTerm term;
    const std::size_t pos = at();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_rational();
      if (sgn(term.coeff) == 0) throw ParseError("zero coefficient", pos);
      skip();
      if (peek() == '*') ++i_;
    }
    const std::string_view w = peek_word();
    if (w.empty()) fail("term");
    if (w != "t") {
      term.parameter = parse_identifier();
      skip();
      if (peek() == '*') ++i_;
    }
    if (peek_word() != "t") {
      if (!term.parameter.empty() || pos != i_) fail("'t'");
      fail("term");
    }
    term.exponent = parse_t_power();
    return term;
  }
  void parse_value(DslParameter& p) {
    const std::string_view w = peek_word();
    if (w == "sqrt" || w == "cbrt" || w == "root") {
      i_ += w.size();
      expect('(');
      if (w == "sqrt") {
        p.root_degree = 2;
      } else if (w == "cbrt") {
        p.root_degree = 3;
      } else {
        const std::size_t pos = at();
        p.root_degree = parse_small("root degree");
        if (p.root_degree < 2) throw ParseError("root degree must be at least 2", pos);
        expect(',');
      }
      const std::size_t pos = at();
      p.value = parse_signed_rational();
      if (sgn(p.value) == 0) throw ParseError("radical of zero", pos);
      if (sgn(p.value) < 0 && p.root_degree % 2 == 0) throw ParseError("even root of a negative number", pos);
      expect(')');
      return;
    }
    p.value = parse_signed_rational();
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Algebraic radical(const LevelPtr& base, int n, const Rational& q) {
  if (n < 1) throw std::invalid_argument("root degree must be positive");
  if (n == 1 || sgn(q) == 0) return Algebraic(q);
  const auto rn = exact_root(q.get_num(), n);
  const auto rd = exact_root(q.get_den(), n);
  if (rn && rd) return Algebraic(Rational(*rn, *rd));
  static std::mutex mu;
  static std::map<std::tuple<const TowerLevel*, int, std::string>, std::pair<LevelPtr, LevelPtr>> cache;
  const std::lock_guard lock(mu);
  auto key = std::make_tuple(base.get(), n, to_string(q));
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Algebraic> c(static_cast<std::size_t>(n) + 1);
    c.front() = Algebraic(Rational(-q));
    c.back() = Algebraic(1);
    const std::string name = n == 2 ? "sqrt(" + to_string(q) + ")" : "root(" + std::to_string(n) + "," + to_string(q) + ")";
    const AdjoinedRoot r = adjoin_root_unchecked(base, APoly(std::move(c)), name);
    it = cache.emplace(key, std::make_pair(base, r.level)).first;
  }
  return Algebraic::generator(it->second.second);
}

BranchSpec make_branch_spec(int n, std::vector<DslTerm> terms, std::vector<DslParameter> parameters) {
  if (n < 1) throw std::invalid_argument("multiplicity N must be positive");
  if (terms.empty()) throw std::invalid_argument("y needs at least one term");
  std::map<std::string, Algebraic> values;
  LevelPtr top;
  for (const auto& p : parameters) {
    if (values.count(p.name)) throw std::invalid_argument("parameter '" + p.name + "' bound twice");
    Algebraic v = radical(top, p.root_degree, p.value);
    if (!v.is_rational()) top = v.level();
    values.emplace(p.name, std::move(v));
  }
  std::map<int, Algebraic> y;
  int g = n;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const DslTerm& t = terms[k];
    if (t.exponent < 1) throw std::invalid_argument("exponents must be positive");
    if (k > 0 && t.exponent <= terms[k - 1].exponent) throw std::invalid_argument("exponents must be strictly increasing");
    Algebraic c(t.coeff);
    if (!t.parameter.empty()) {
      const auto it = values.find(t.parameter);
      if (it == values.end()) throw std::invalid_argument("unbound parameter '" + t.parameter + "'");
      c = c * it->second;
    }
    if (c.is_structural_zero()) continue;
    g = std::gcd(g, t.exponent);
    y.emplace(t.exponent, std::move(c));
  }
  if (terms.front().exponent <= n) throw std::invalid_argument("y-order below multiplicity");
  if (g > 1) throw std::invalid_argument("parametrization is not primitive: all exponents divisible by " + std::to_string(g));
  BranchSpec spec;
  spec.n = n;
  spec.terms = std::move(terms);
  spec.parameters = std::move(parameters);
  spec.branch = PuiseuxBranch(n, std::move(y));
  spec.source = to_dsl(spec);
  return spec;
}

std::string to_dsl(const BranchSpec& spec) {
  std::string out = "x=t^" + std::to_string(spec.n) + "; y=";
  for (std::size_t k = 0; k < spec.terms.size(); ++k) {
    const DslTerm& t = spec.terms[k];
    const bool neg = sgn(t.coeff) < 0;
    if (k == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const Rational a = abs(t.coeff);
    if (a != 1) out += to_string(a) + " ";
    if (!t.parameter.empty()) out += t.parameter + " ";
    out += "t^" + std::to_string(t.exponent);
  }
  for (std::size_t k = 0; k < spec.parameters.size(); ++k) {
    const DslParameter& p = spec.parameters[k];
    out += k == 0 ? " where " : ", ";
    out += p.name + "=";
    if (p.root_degree == 1)
      out += to_string(p.value);
    else if (p.root_degree == 2)
      out += "sqrt(" + to_string(p.value) + ")";
    else if (p.root_degree == 3)
      out += "cbrt(" + to_string(p.value) + ")";
    else
      out += "root(" + std::to_string(p.root_degree) + "," + to_string(p.value) + ")";
  }
  return out;
}

BranchSpec parse_branch_dsl(std::string_view text) { return Parser(text).run(); }

}  // namespace polar
