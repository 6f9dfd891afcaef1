#include "phaseshift/grid.hpp"

#include <cmath>
#include <string>

namespace phaseshift {

Grid::Grid(double x_max, std::size_t n_points) : x_max_(x_max), n_points_(n_points) {
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw Error(ErrorCode::InvalidGrid, "x_max must be positive and finite");
  }
  if (n_points < 3) {
    throw Error(ErrorCode::InvalidGrid, "need at least 3 grid points");
  }
  if (n_points % 2 == 0) {
    throw Error(ErrorCode::EvenPointCount,
                "n_points = " + std::to_string(n_points) + " must be odd for Simpson panels");
  }
}

Grid Grid::refined(std::size_t factor) const {
  if (factor == 0) throw Error(ErrorCode::InvalidGrid, "refinement factor must be positive");
  return Grid(x_max_, (n_points_ - 1) * factor + 1);
}

namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

template <class T>
GridFunction<T>::GridFunction(Grid grid, std::vector<T> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n_points()) {
    throw Error(ErrorCode::GridMismatch, "sample count " + std::to_string(values_.size()) +
                                             " does not match grid size " +
                                             std::to_string(grid_.n_points()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!finite(values_[i])) {
      throw Error(ErrorCode::NonFiniteValue, "non-finite sample at index " + std::to_string(i));
    }
  }
}

template class GridFunction<cplx>;
template class GridFunction<double>;

void require_same_grid(const Grid& a, const Grid& b, const char* context) {
  if (!(a == b)) {
    throw Error(ErrorCode::GridMismatch, std::string(context) + ": inputs live on different grids");
  }
}

}  // namespace phaseshift
