#pragma once

#include <variant>
#include <vector>

#include "phaseshift/grid.hpp"
#include "phaseshift/quadrature.hpp"

namespace phaseshift {

inline constexpr double kDefaultTailTolerance = 1e-12;

struct Segment {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double value = 0.0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// height * exp(-(x - center)^2 / (2 width^2)), clipped to zero where it drops below the tail tolerance.
struct GaussianBump {
  double center = 0.0;
  double width = 1.0;
  double height = 0.0;

  friend bool operator==(const GaussianBump&, const GaussianBump&) = default;
};

struct PiecewiseConstant {
  std::vector<Segment> segments;
  friend bool operator==(const PiecewiseConstant&, const PiecewiseConstant&) = default;
};

struct GaussianSum {
  std::vector<GaussianBump> bumps;
  friend bool operator==(const GaussianSum&, const GaussianSum&) = default;
};

/// Samples on their own grid. Off-node values use cubic Lagrange interpolation.
struct Tabulated {
  Grid grid;
  std::vector<double> samples;
  friend bool operator==(const Tabulated&, const Tabulated&) = default;
};

/// Declarative, compactly supported potential.
class PotentialSpec {
 public:
  using Kind = std::variant<PiecewiseConstant, GaussianSum, Tabulated>;

  /// Validates the description; throws InvalidPotential.
  explicit PotentialSpec(Kind kind, double eps_tail = kDefaultTailTolerance);

  static PotentialSpec zero() { return PotentialSpec(PiecewiseConstant{}); }
  static PotentialSpec barrier(double x_lo, double x_hi, double height) {
    return PotentialSpec(PiecewiseConstant{{{x_lo, x_hi, height}}});
  }

  const Kind& kind() const noexcept { return kind_; }
  double eps_tail() const noexcept { return eps_tail_; }

  /// Smallest x beyond which the potential is identically zero.
  double support_hi() const noexcept { return support_hi_; }

  /// Nominal value. Piecewise segments are closed here, the first matching segment wins.
  double value(double x) const;
  /// One-sided limits; piecewise segments act as [x_lo, x_hi) from the right and (x_lo, x_hi] from the left.
  double limit_from_left(double x) const;
  double limit_from_right(double x) const;

  /// Returns a copy with every value multiplied by `factor`.
  PotentialSpec scaled(double factor) const;

  /// Tabulated potentials are reinterpolated onto `grid`; other kinds are returned unchanged.
  PotentialSpec resampled(const Grid& grid) const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  Kind kind_;
  double eps_tail_;
  double support_hi_ = 0.0;
};

/// A potential sampled on a grid, with one-sided limits at each node.
struct EvaluatedPotential {
  Grid grid;
  std::vector<double> values;
  std::vector<double> left;
  std::vector<double> right;
  double support_hi = 0.0;

  bool identically_zero() const noexcept;

  /// Pointwise product with a continuous complex function on the same grid.
  OneSidedSamples times(std::span<const cplx> f) const;
};

/// Throws TabulatedGridMismatch or SupportBeyondGrid.
EvaluatedPotential evaluate_potential(const PotentialSpec& spec, const Grid& grid);

/// Potential samples seen by a fixed-step integrator on every cell [x_i, x_{i+1}].
struct CellSamples {
  std::vector<double> start;  // limit from the right at x_i
  std::vector<double> mid;    // value at the cell midpoint
  std::vector<double> end;    // limit from the left at x_{i+1}

  /// this + factor * other, cell by cell.
  CellSamples plus_scaled(const CellSamples& other, double factor) const;
};

CellSamples sample_cells(const PotentialSpec& spec, const Grid& grid);

}  // namespace phaseshift
