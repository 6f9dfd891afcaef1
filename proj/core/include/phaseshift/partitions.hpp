#pragma once

#include <cstdint>
#include <vector>

namespace phaseshift {

inline constexpr int kMaxOrder = 20;

/// Multiplicities (i_1, ..., i_n) with sum_p p*i_p = n, j = sum_p i_p, and the
/// log-derivative weight (-1)^(j-1) (j-1)! / (i_1! ... i_n!) held as a reduced fraction.
struct PartitionTuple {
  std::vector<int> multiplicities;
  int j = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  int order() const noexcept { return static_cast<int>(multiplicities.size()); }
  double coefficient() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

/// All multiplicity tuples for n, ordered by descending largest part
/// (for n = 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1). Throws OrderOutOfRange outside 1..20.
std::vector<PartitionTuple> enumerate_partitions(int n);

double log_derivative_coefficient(const PartitionTuple& t);

}  // namespace phaseshift
