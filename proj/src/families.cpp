#include "polar/families.hpp"

#include <random>
#include <sstream>

namespace polar {

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// A sampled value violated a side condition: draw again.
struct Resample {};

class Builder {
 public:
  Builder(std::string kind, FamilyParams given, std::uint64_t seed)
      : kind_(std::move(kind)), given_(std::move(given)), rng_(seed) {}

  int integer(const std::string& key) {
    const auto it = given_.find(key);
    if (it == given_.end()) throw std::invalid_argument(kind_ + ": missing parameter '" + key + "'");
    if (it->second.get_den() != 1 || !it->second.get_num().fits_sint_p())
      throw std::invalid_argument(kind_ + ": parameter '" + key + "' must be an integer");
    used_[key] = it->second;
    return static_cast<int>(it->second.get_num().get_si());
  }
  int integer_or(const std::string& key, int fallback) {
    if (!given_.count(key)) {
      used_[key] = fallback;
      return fallback;
    }
    return integer(key);
  }
  bool has(const std::string& key) const { return given_.count(key) > 0; }

  // Given or sampled coefficient value.
  Rational value(const std::string& key) {
    Rational v;
    if (const auto it = given_.find(key); it != given_.end()) {
      v = it->second;
    } else {
      std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
      int p;
      do p = num(rng_);
      while (p == 0);
      v = R(p, den(rng_));
      sampled_.push_back(key);
    }
    used_[key] = v;
    return v;
  }

  // Throws SideConditionError if every involved value was given, else asks
  // for a resample.
  void require(bool ok, const std::string& condition, std::initializer_list<const char*> involved) const {
    if (ok) return;
    for (const char* k : involved)
      for (const auto& s : sampled_)
        if (s == k) throw Resample{};
    throw SideConditionError(kind_ + ": violates " + condition);
  }
  void shape(bool ok, const std::string& condition) const {
    if (!ok) throw SideConditionError(kind_ + ": requires " + condition);
  }

  void term(int e, Rational c = Rational(1)) { terms_.push_back({std::move(c), "", e}); }
  // Coefficient scale * key, with key bound in the where clause.
  void param_term(int e, const std::string& key, const Rational& v, Rational scale = Rational(1)) {
    bind(key, v, 1);
    terms_.push_back({std::move(scale), key, e});
  }
  // key must already be bound
  void scaled_term(int e, const std::string& key, Rational scale) { terms_.push_back({std::move(scale), key, e}); }
  void bind(const std::string& key, const Rational& v, int degree) {
    for (const auto& p : params_)
      if (p.name == key) return;
    params_.push_back({key, v, degree});
  }

  FamilyInstance finish(int n, const std::string& name) {
    std::stable_sort(terms_.begin(), terms_.end(), [](const DslTerm& a, const DslTerm& b) { return a.exponent < b.exponent; });
    FamilyInstance out;
    out.name = name;
    out.spec = make_branch_spec(n, std::move(terms_), std::move(params_));
    out.parameters = std::move(used_);
    return out;
  }

 private:
  std::string kind_;
  FamilyParams given_;
  FamilyParams used_;
  std::mt19937_64 rng_;
  std::vector<std::string> sampled_;
  std::vector<DslTerm> terms_;
  std::vector<DslParameter> params_;
};

void gamma_row(Builder& b, int row) {
  const Rational r13_12 = R(13, 12), r133_108 = R(133, 108), r34_11 = R(34, 11);
  const Rational r5225 = R(5225, 559872);
  b.term(12);
  auto head14 = [&] {
    b.term(14);
    b.term(16, r13_12);
    b.term(18, r133_108);
  };
  switch (row) {
    case 1:
      break;
    case 2:
      b.term(38);
      break;
    case 3:
      b.term(33);
      break;
    case 4:
      b.term(28);
      break;
    case 5: {
      b.term(26);
      const Rational c = b.value("c");
      b.require(c != 0, "c != 0", {"c"});
      b.param_term(28, "c", c);
      break;
    }
    case 6:
      b.term(26);
      b.param_term(33, "c", b.value("c"));
      break;
    case 7:
      b.term(23);
      b.param_term(26, "c", b.value("c"));
      break;
    case 8:
      b.term(21);
      b.param_term(23, "c", b.value("c"));
      b.param_term(28, "d", b.value("d"));
      break;
    case 9:
      b.term(18);
      b.param_term(21, "c", b.value("c"));
      b.param_term(26, "d", b.value("d"));
      break;
    case 10:
      b.term(16);
      b.param_term(18, "c", b.value("c"));
      b.param_term(23, "d", b.value("d"));
      break;
    case 11: {
      b.term(14);
      const Rational c = b.value("c"), d = b.value("d");
      b.require(c != r13_12, "c != 13/12", {"c"});
      b.require(d != (4 * c * c - 1) / 3, "d != (4c^2-1)/3", {"c", "d"});
      b.param_term(16, "c", c);
      b.param_term(18, "d", d);
      b.param_term(23, "e", b.value("e"));
      break;
    }
    case 12: {
      b.term(14);
      const Rational c = b.value("c");
      b.require(c != r13_12, "c != 13/12", {"c"});
      b.param_term(16, "c", c);
      b.term(18, Rational((4 * c * c - 1) / 3));
      b.param_term(23, "d", b.value("d"));
      b.param_term(28, "e", b.value("e"));
      break;
    }
    case 13: {
      b.term(14);
      b.term(16, r13_12);
      const Rational c = b.value("c");
      b.require(c != r133_108, "c != 133/108", {"c"});
      b.param_term(18, "c", c);
      b.param_term(21, "d", b.value("d"));
      break;
    }
    case 14: {
      head14();
      const Rational c = b.value("c"), d = b.value("d");
      b.require(d != r34_11 * c, "d != 34c/11", {"c", "d"});
      b.param_term(21, "c", c);
      b.param_term(23, "d", d);
      break;
    }
    case 15: {
      head14();
      const Rational c = b.value("c"), d = b.value("d");
      b.require(d != R(81, 32) * c * c + r5225, "d != 81c^2/32 + 5225/559872", {"c", "d"});
      b.param_term(21, "c", c);
      b.param_term(23, "c", c, r34_11);
      b.param_term(28, "d", d);
      break;
    }
    case 16: {
      head14();
      const Rational c = b.value("c");
      b.param_term(21, "c", c);
      b.param_term(23, "c", c, r34_11);
      b.term(28, Rational(R(81, 32) * c * c + r5225));
      b.param_term(33, "d", b.value("d"));
      break;
    }
    case 17:
      b.term(13);
      b.term(14, R(-1, 2));
      b.param_term(16, "c", b.value("c"));
      b.param_term(21, "d", b.value("d"));
      b.param_term(26, "e", b.value("e"));
      break;
    case 18: {
      b.term(13);
      const Rational c = b.value("c");
      b.require(c != R(-1, 2), "c != -1/2", {"c"});
      b.param_term(14, "c", c);
      b.param_term(16, "d", b.value("d"));
      b.param_term(21, "e", b.value("e"));
      break;
    }
    default:
      throw std::invalid_argument("gamma-5-12: row must be 1..18");
  }
}

void mult3(Builder& b) {
  const int beta = b.integer("beta");
  b.shape(beta >= 4 && beta % 3 != 0, "beta >= 4 prime to 3");
  b.term(beta);
  if (!b.has("k")) return;
  const int q = beta / 3, eps = beta % 3;
  const int k = b.integer("k");
  b.shape(k >= 0 && k <= q - 2, "0 <= k <= q-2 with beta = 3q+eps");
  b.term(beta + eps + 3 * k);
}

void mult4_form2(Builder& b, int m, int w) {
  const int j = b.integer("j");
  b.shape(j >= 2 && j <= m / 2, "2 <= j <= [m/2]");
  const int count = j - w - 2;
  const int k = b.integer_or("k", 0);
  const int s = b.integer_or("s", 0);
  b.shape(k >= 0 && k <= std::max(count, 0), "0 <= k <= j-[m/4]-2 (k = 0: every a_i zero)");
  b.shape(s >= 0 && (k > 0 || s == 0) && k + s <= std::max(count, 0), "k + s <= j-[m/4]-2 (s = 0: a_i = 0 beyond k)");
  const int wall = b.integer_or("wall", 0);
  const int wall2 = b.integer_or("wall2", 0);
  b.shape(wall == 0 || ((wall == 1 || wall == -1) && k > 0), "wall in {-1, 0, 1}, nonzero only with k > 0");
  b.shape(wall2 == 0 || (wall2 == 1 && wall != 0 && s > 0), "wall2 in {0, 1}, 1 only with wall and s > 0");
  b.term(m);
  b.term(3 * m - 4 * j);
  const Rational sqrt6(6);
  for (int i = k; k > 0 && i <= count; ++i) {
    const int e = 2 * m - 4 * (j - w - i);
    if (i > k && i < k + s) continue;
    if (i > k && s == 0) continue;
    const std::string key = "a" + std::to_string(i);
    if (i == k && wall != 0) {
      b.bind("r6", sqrt6, 2);
      b.scaled_term(e, "r6", Rational(R(4, 9) * wall));
      continue;
    }
    if (i == k + s && s > 0 && wall2 != 0) {
      b.bind("r6", sqrt6, 2);
      b.scaled_term(e, "r6", Rational(R(-4, 81) * wall));
      continue;
    }
    const Rational v = b.value(key);
    b.require(i != k || v != 0, "a_k != 0", {key.c_str()});
    b.require(i != k + s || s == 0 || v != 0, "a_(k+s) != 0", {key.c_str()});
    b.param_term(e, key, v);
  }
}

void mult4_g1(Builder& b) {
  const int form = b.integer("form");
  const int m = b.integer("m");
  b.shape(m >= 5 && m % 2 == 1, "m odd and >= 5");
  const int w = m / 4;
  switch (form) {
    case 1:
      b.term(m);
      return;
    case 2:
      mult4_form2(b, m, w);
      return;
    case 3: {
      const int j = b.integer("j");
      b.shape(j >= 2 && j <= w, "2 <= j <= [m/4]");
      const int k = b.integer("k");
      b.shape(k >= 1 && k <= w - j, "1 <= k <= [m/4]-j");
      b.term(m);
      b.term(2 * m - 4 * j);
      const std::string key = "a" + std::to_string(k);
      const Rational a = b.value(key);
      b.require(a != 0, "a_k != 0", {key.c_str()});
      b.param_term(3 * m - 4 * (w + 2 - k), key, a);
      return;
    }
    case 4:
    case 5: {
      const int j = b.integer("j");
      b.shape(j >= 2 && j <= w, "2 <= j <= [m/4]");
      b.term(m);
      b.term(2 * m - 4 * j);
      const Rational special = R(3 * m - 4 * j, 2 * m);
      if (form == 4) {
        const std::string key = "a" + std::to_string(w - j + 1);
        const Rational a = b.value(key);
        b.require(a != special, key + " != (3m-4j)/(2m)", {key.c_str()});
        b.param_term(3 * m - 8 * j, key, a);
      } else {
        b.term(3 * m - 8 * j, special);
      }
      const int last = form == 4 ? j + 2 : j + 1;
      for (int r = 2 * j - 1; r >= last; --r) {
        const std::string key = "a" + std::to_string(w - j + 1 + (2 * j - r));
        b.param_term(3 * m - 4 * r, key, b.value(key));
      }
      return;
    }
    default:
      throw std::invalid_argument("mult4-g1: form must be 1..5");
  }
}

void mult4_g2(Builder& b) {
  const int v1 = b.integer("v1"), v2 = b.integer("v2");
  b.shape(v1 >= 6 && v1 % 4 == 2, "v1 = 2 k1 with k1 odd, v1 >= 6");
  b.shape(v2 % 2 == 1 && v2 > 2 * v1, "v2 odd and v2 > 2 v1");
  const int w = v1 / 4;
  b.term(v1);
  b.term(v2 - v1);
  for (int i = 1; i <= w - 1; ++i) {
    const std::string key = "a" + std::to_string(i);
    b.param_term(v2 - 4 * (w - i + 1), key, b.value(key));
  }
}

struct ParsedName {
  std::string kind;
  FamilyParams params;
};

ParsedName parse_name(std::string_view name, const FamilyParams& given) {
  ParsedName out;
  const auto slash = name.find('/');
  out.kind = std::string(name.substr(0, slash));
  std::vector<std::string> positional;
  if (out.kind == "gamma-5-12")
    positional = {"row"};
  else if (out.kind == "mult3")
    positional = {"beta", "k"};
  else if (out.kind == "mult4-g1")
    positional = {"form", "m", "j", "k", "s"};
  else if (out.kind == "mult4-g2")
    positional = {"v1", "v2"};
  else
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  out.params = given;
  if (slash == std::string_view::npos) return out;
  std::string rest(name.substr(slash + 1));
  std::stringstream ss(rest);
  std::string item;
  std::size_t idx = 0;
  while (std::getline(ss, item, ',')) {
    if (idx >= positional.size()) throw std::invalid_argument("too many values in '" + std::string(name) + "'");
    Rational v;
    try {
      v = parse_rational(item);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad value '" + item + "' in family name");
    }
    const auto [it, fresh] = out.params.emplace(positional[idx], v);
    if (!fresh && it->second != v) throw std::invalid_argument("conflicting values for '" + positional[idx] + "'");
    ++idx;
  }
  return out;
}

}  // namespace

FamilyInstance make_family(std::string_view name, const FamilyParams& given, std::uint64_t seed) {
  const ParsedName pn = parse_name(name, given);
  for (int attempt = 0;; ++attempt) {
    Builder b(pn.kind, pn.params, seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    try {
      int n = 5;
      if (pn.kind == "gamma-5-12") {
        gamma_row(b, b.integer("row"));
      } else if (pn.kind == "mult3") {
        n = 3;
        mult3(b);
      } else if (pn.kind == "mult4-g1") {
        n = 4;
        mult4_g1(b);
      } else {
        n = 4;
        mult4_g2(b);
      }
      return b.finish(n, std::string(name));
    } catch (const Resample&) {
      if (attempt > 100) throw std::logic_error("side conditions rejected every sample");
    }
  }
}

std::vector<FamilyInstance> family(std::string_view name, const FamilyParams& given, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  std::vector<FamilyInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(make_family(name, given, count == 1 ? seed : trial_seed(seed, i)));
  return out;
}

FamilySampler family_sampler(std::string name, FamilyParams given, bool inject_walls) {
  make_family(name, given, 0);  // validate once up front
  const bool walls = inject_walls && parse_name(name, given).params.count("row") &&
                     parse_name(name, given).params.at("row") == 18 && name.rfind("gamma-5-12", 0) == 0;
  return [name = std::move(name), given = std::move(given), walls](std::uint64_t seed, int index) {
    FamilyParams p = given;
    if (walls && !given.count("c") && !given.count("d")) {
      switch (index % 8) {
        case 1:
          p["c"] = R(-5, 4);
          break;
        case 3:
          p["c"] = R(-5, 4);
          p["d"] = R(-5, 16);
          break;
        case 5:
          p["c"] = 1;
          break;
        default:
          break;
      }
    }
    FamilyInstance inst = make_family(name, p, seed);
    FamilySample s;
    s.branch = inst.spec.branch;
    for (const auto& [k, v] : inst.parameters) s.parameters.emplace_back(k, v);
    return s;
  };
}

std::string family_catalog() {
  return "gamma-5-12/<row>           rows 1..18; coefficients c, d, e sampled unless given\n"
         "mult3/<beta>[,<k>]         (t^3, t^beta), or with t^(beta+eps+3k), 0 <= k <= q-2\n"
         "mult4-g1/1,<m>             (t^4, t^m)\n"
         "mult4-g1/2,<m>,<j>[,k,s]   second form; k: first nonzero a_i (0: none), s: gap to the next;\n"
         "                           wall=+-1 sets a_k = +-4 sqrt(6)/9, wall2=1 sets a_(k+s) = -+4 sqrt(6)/81\n"
         "mult4-g1/3,<m>,<j>,<k>     third form, coefficient a<k>\n"
         "mult4-g1/4,<m>,<j>         fourth form\n"
         "mult4-g1/5,<m>,<j>         fifth form\n"
         "mult4-g2/<v1>,<v2>         genus two, coefficients a<i> sampled unless given\n";
}

}  // namespace polar
