#pragma once

#include <string>
#include <vector>

#include "polar/semigroup.hpp"

namespace polar {

/// Branch semigroups plus the symmetric matrix of pairwise intersection
/// multiplicities, kept in a canonical order so that == is type equality.
class EquisingularityType {
 public:
  EquisingularityType() = default;
  /// `intersections` is an n x n symmetric matrix; the diagonal is ignored.
  EquisingularityType(std::vector<NumericalSemigroup> branches, std::vector<std::vector<int>> intersections);

  const std::vector<NumericalSemigroup>& branches() const noexcept { return branches_; }
  const std::vector<std::vector<int>>& intersections() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return branches_.size(); }
  int intersection(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }

  /// e.g. "<2,5> + <2,5>; I(1,2)=10"
  std::string to_string() const;

  friend bool operator==(const EquisingularityType& a, const EquisingularityType& b) {
    return a.branches_ == b.branches_ && a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const EquisingularityType& a, const EquisingularityType& b) { return !(a == b); }
  friend bool operator<(const EquisingularityType& a, const EquisingularityType& b);

 private:
  std::vector<NumericalSemigroup> branches_;
  std::vector<std::vector<int>> matrix_;
};

}  // namespace polar
