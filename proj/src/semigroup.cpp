#include "polar/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polar {

namespace {

std::vector<char> membership(const std::vector<int>& gens, int limit) {
  std::vector<char> in(static_cast<std::size_t>(limit) + 1, 0);
  in[0] = 1;
  for (int v = 1; v <= limit; ++v)
    for (int g : gens)
      if (g <= v && in[static_cast<std::size_t>(v - g)]) {
        in[static_cast<std::size_t>(v)] = 1;
        break;
      }
  return in;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) {
  if (generators.empty()) throw std::invalid_argument("semigroup needs generators");
  int g = 0;
  for (int v : generators) {
    if (v <= 0) throw std::invalid_argument("semigroup generators must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw std::invalid_argument("semigroup generators must have gcd 1");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // minimize: drop generators lying in the semigroup of the smaller ones
  for (int v : generators) {
    const auto in = membership(gens_, v);
    if (!in[static_cast<std::size_t>(v)]) gens_.push_back(v);
  }
  // Frobenius bound for two smallest coprime-ish gens is loose; a run of
  // multiplicity() consecutive members certifies the conductor.
  const int m = gens_.front();
  std::vector<char> in{1};
  int run = 0;
  for (int v = 1; run < m; ++v) {
    char member = 0;
    for (int gen : gens_)
      if (gen <= v && in[static_cast<std::size_t>(v - gen)]) {
        member = 1;
        break;
      }
    in.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      gaps_.push_back(v);
    }
  }
  conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
}

NumericalSemigroup NumericalSemigroup::from_characteristic(const std::vector<int>& betas) {
  if (betas.empty() || betas[0] <= 0) throw std::invalid_argument("characteristic exponents need a positive multiplicity");
  if (betas[0] == 1) return NumericalSemigroup({1});
  std::vector<int> es{betas[0]};
  for (std::size_t k = 1; k < betas.size(); ++k) {
    es.push_back(std::gcd(es.back(), betas[k]));
    if (es[k] == es[k - 1] || betas[k] <= betas[k - 1]) throw std::invalid_argument("invalid characteristic exponents");
  }
  if (es.back() != 1) throw std::invalid_argument("characteristic exponents do not reach gcd 1");
  // v_k = n_{k-1} v_{k-1} + beta_k - beta_{k-1}, n_{k-1} = e_{k-2}/e_{k-1}
  std::vector<int> v{betas[0], betas[1]};
  for (std::size_t k = 2; k < betas.size(); ++k) v.push_back(es[k - 2] / es[k - 1] * v[k - 1] + betas[k] - betas[k - 1]);
  return NumericalSemigroup(v);
}

bool NumericalSemigroup::contains(int v) const {
  if (v < 0) return false;
  if (v >= conductor_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), v);
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ">";
  return os.str();
}

int plane_branch_conductor(const std::vector<int>& generators) {
  if (generators.size() == 1) return 0;
  int c = -generators[0] + 1;
  int e = generators[0];
  for (std::size_t k = 1; k < generators.size(); ++k) {
    const int e_next = std::gcd(e, generators[k]);
    c += (e / e_next - 1) * generators[k];
    e = e_next;
  }
  return c;
}

}  // namespace polar
