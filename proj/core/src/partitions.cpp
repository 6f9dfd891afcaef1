#include "phaseshift/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift {
namespace {

using u64 = std::uint64_t;

// Emits partitions of `remaining` with parts <= `max_part`, largest part first.
void descend(int remaining, int max_part, std::vector<int>& multiplicities, std::vector<PartitionTuple>& out) {
  if (remaining == 0) {
    PartitionTuple t;
    t.multiplicities = multiplicities;
    t.j = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    // (j-1)!/prod(i_p!) = multinomial(j; i_1..i_n) / j, with the multinomial built
    // as a product of binomials so every intermediate stays an exact integer.
    u64 multinomial = 1;
    int placed = 0;
    for (int count : multiplicities) {
      for (int c = 1; c <= count; ++c) {
        ++placed;
        multinomial = multinomial * static_cast<u64>(placed) / static_cast<u64>(c);
      }
    }
    const u64 divisor = std::gcd(multinomial, static_cast<u64>(t.j));
    const auto num = static_cast<std::int64_t>(multinomial / divisor);
    t.numerator = (t.j % 2 == 1) ? num : -num;
    t.denominator = static_cast<std::int64_t>(static_cast<u64>(t.j) / divisor);
    out.push_back(std::move(t));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++multiplicities[static_cast<std::size_t>(part - 1)];
    descend(remaining - part, part, multiplicities, out);
    --multiplicities[static_cast<std::size_t>(part - 1)];
  }
}

}  // namespace

std::vector<PartitionTuple> enumerate_partitions(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::OrderOutOfRange, "partition order must be in [1, " + std::to_string(kMaxOrder) +
                                                "], got " + std::to_string(n));
  }
  std::vector<PartitionTuple> out;
  std::vector<int> multiplicities(static_cast<std::size_t>(n), 0);
  descend(n, n, multiplicities, out);
  return out;
}

double log_derivative_coefficient(const PartitionTuple& t) { return t.coefficient(); }

}  // namespace phaseshift
