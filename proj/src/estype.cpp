#include "polar/estype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polar {

EquisingularityType::EquisingularityType(std::vector<NumericalSemigroup> branches,
                                         std::vector<std::vector<int>> intersections) {
  const std::size_t n = branches.size();
  if (intersections.size() != n) throw std::invalid_argument("intersection matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (intersections[i].size() != n) throw std::invalid_argument("intersection matrix size mismatch");
    intersections[i][i] = 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (intersections[i][j] != intersections[j][i]) throw std::invalid_argument("intersection matrix not symmetric");
      if (i != j && intersections[i][j] <= 0) throw std::invalid_argument("intersection numbers must be positive");
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return branches[a] < branches[b]; });
  auto apply = [&](const std::vector<std::size_t>& p) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = intersections[p[i]][p[j]];
    return m;
  };
  // minimal matrix over permutations within runs of equal semigroups
  std::vector<std::vector<int>> best = apply(perm);
  std::vector<std::size_t> cur = perm;
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && branches[perm[j]] == branches[perm[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  // odometer over per-run permutations (types here have few branches)
  for (auto& [a, b] : runs) std::sort(cur.begin() + static_cast<long>(a), cur.begin() + static_cast<long>(b));
  for (;;) {
    auto m = apply(cur);
    if (m < best) best = std::move(m);
    std::size_t r = runs.size();
    bool advanced = false;
    while (r-- > 0) {
      auto [a, b] = runs[r];
      if (std::next_permutation(cur.begin() + static_cast<long>(a), cur.begin() + static_cast<long>(b))) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  for (std::size_t i = 0; i < n; ++i) branches_.push_back(branches[perm[i]]);
  matrix_ = std::move(best);
}

bool operator<(const EquisingularityType& a, const EquisingularityType& b) {
  if (a.branches_ != b.branches_) return a.branches_ < b.branches_;
  return a.matrix_ < b.matrix_;
}

std::string EquisingularityType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < branches_.size(); ++i) os << (i ? " + " : "") << branches_[i].to_string();
  bool first = true;
  for (std::size_t i = 0; i < branches_.size(); ++i)
    for (std::size_t j = i + 1; j < branches_.size(); ++j) {
      os << (first ? "; " : ", ") << "I(" << i + 1 << "," << j + 1 << ")=" << matrix_[i][j];
      first = false;
    }
  return os.str();
}

}  // namespace polar
