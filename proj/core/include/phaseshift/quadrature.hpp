#pragma once

#include <span>
#include <vector>

#include "phaseshift/grid.hpp"

namespace phaseshift {

/// Integrand samples that may jump at grid nodes.
///
/// `right[i]` is the limit x -> x_i from above (the value seen by the cell
/// [x_i, x_{i+1}]); `left[i]` is the limit from below. Continuous integrands
/// have left == right.
struct OneSidedSamples {
  std::vector<cplx> left;
  std::vector<cplx> right;

  static OneSidedSamples continuous(std::span<const cplx> values);
};

/// Composite Simpson weights; sum_i w_i g(x_i) approximates the integral over [0, x_max].
std::vector<double> simpson_weights(const Grid& grid);

/// C[i] = integral of the integrand from x_i to x_max, accumulated right to left.
///
/// Each pair of cells [x_{2m}, x_{2m+2}] is a Simpson panel, so the values at
/// even nodes are composite-Simpson sums. Odd nodes take the second half of the
/// panel's interpolating parabola. Jumps located on even nodes keep O(h^4)
/// accuracy; a jump on an odd node or between nodes degrades that panel.
std::vector<cplx> cumulative_from_right(const Grid& grid, const OneSidedSamples& integrand);
std::vector<cplx> cumulative_from_right(const Grid& grid, std::span<const cplx> integrand);

}  // namespace phaseshift
