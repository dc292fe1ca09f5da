#pragma once

#include <cstddef>
#include <vector>

#include "zoll/polynomial.hpp"

namespace zoll {

/// Strictly increasing map [1,n] -> [1,d], stored as its value list.
class IncreasingMap {
 public:
  /// Throws DomainError unless values are strictly increasing in [1,target].
  IncreasingMap(std::vector<std::size_t> values, std::size_t target);

  std::size_t source_size() const noexcept { return values_.size(); }
  std::size_t target_size() const noexcept { return target_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  /// alpha(i) for 1 <= i <= n.
  std::size_t operator()(std::size_t i) const { return values_.at(i - 1); }

  friend bool operator==(const IncreasingMap&, const IncreasingMap&) = default;

 private:
  std::vector<std::size_t> values_;
  std::size_t target_;
};

/// All strictly increasing maps [1,n] -> [1,d] in lexicographic order of
/// their value lists.
std::vector<IncreasingMap> enumerate_increasing_maps(std::size_t n, std::size_t d);

/// Value lists of all strictly increasing maps [1,n] -> [lo,hi].
std::vector<std::vector<std::size_t>> increasing_value_lists(std::size_t n, std::size_t lo,
                                                             std::size_t hi);

/// t_i -> t_alpha(i) for i >= 1, t0 fixed.
Polynomial pushforward(const IncreasingMap& alpha, const Polynomial& p);

/// t_alpha(j) -> t_j, every other t_i (i >= 1) -> 0, t0 fixed.
Polynomial pullback(const IncreasingMap& alpha, const Polynomial& p);

std::size_t binomial(std::size_t d, std::size_t n);

}  // namespace zoll
