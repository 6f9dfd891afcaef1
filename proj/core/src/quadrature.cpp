#include "phaseshift/quadrature.hpp"

namespace phaseshift {

OneSidedSamples OneSidedSamples::continuous(std::span<const cplx> values) {
  std::vector<cplx> v(values.begin(), values.end());
  return {v, v};
}

std::vector<double> simpson_weights(const Grid& grid) {
  const std::size_t n = grid.n_points();
  const double h = grid.step();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i == n - 1) {
      w[i] = h / 3.0;
    } else {
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    }
  }
  return w;
}

std::vector<cplx> cumulative_from_right(const Grid& grid, const OneSidedSamples& f) {
  const std::size_t n = grid.n_points();
  if (f.left.size() != n || f.right.size() != n) {
    throw Error(ErrorCode::GridMismatch, "cumulative_from_right: integrand size differs from grid");
  }
  const double h = grid.step();
  std::vector<cplx> c(n);
  c[n - 1] = 0.0;
  for (std::size_t a = n - 3;; a -= 2) {
    const std::size_t b = a + 1;
    const std::size_t e = a + 2;
    const cplx fa = f.right[a];
    const cplx fm = 0.5 * (f.left[b] + f.right[b]);
    const cplx fe = f.left[e];
    c[b] = c[e] + (h / 12.0) * (-fa + 8.0 * fm + 5.0 * fe);
    c[a] = c[e] + (h / 3.0) * (fa + 4.0 * fm + fe);
    if (a == 0) break;
  }
  return c;
}

std::vector<cplx> cumulative_from_right(const Grid& grid, std::span<const cplx> integrand) {
  return cumulative_from_right(grid, OneSidedSamples::continuous(integrand));
}

}  // namespace phaseshift
