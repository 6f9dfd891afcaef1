#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phaseshift/errors.hpp"

namespace phaseshift {

using cplx = std::complex<double>;

/// Uniform grid on [0, x_max] with an odd number of points (both endpoints included).
class Grid {
 public:
  /// Throws InvalidGrid for x_max <= 0 or n_points < 3, EvenPointCount for even n_points.
  Grid(double x_max, std::size_t n_points);

  double x_max() const noexcept { return x_max_; }
  std::size_t n_points() const noexcept { return n_points_; }
  double step() const noexcept { return x_max_ / static_cast<double>(n_points_ - 1); }

  // Computed as x_max*i/(n-1) so that nodes landing on representable values are exact.
  double x(std::size_t i) const noexcept {
    return x_max_ * static_cast<double>(i) / static_cast<double>(n_points_ - 1);
  }

  /// Same interval with (n_points-1)*factor intervals.
  Grid refined(std::size_t factor) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double x_max_;
  std::size_t n_points_;
};

/// Samples of a function on a grid; values are required to be finite.
template <class T>
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<T> values);

  static GridFunction constant(const Grid& grid, T value) {
    return GridFunction(grid, std::vector<T>(grid.n_points(), value));
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  const T& operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const T> values() const noexcept { return values_; }

 private:
  Grid grid_;
  std::vector<T> values_;
};

using ComplexGridFunction = GridFunction<cplx>;
using RealGridFunction = GridFunction<double>;

extern template class GridFunction<cplx>;
extern template class GridFunction<double>;

/// Throws GridMismatch unless both grids are identical.
void require_same_grid(const Grid& a, const Grid& b, const char* context);

}  // namespace phaseshift
