#pragma once

#include <vector>

#include "phaseshift/potential.hpp"
#include "phaseshift/quadrature.hpp"
#include "phaseshift/refwave.hpp"

namespace phaseshift {

/// Ordered factors F_1..F_n (1 <= n <= 3) of the nested integral
/// I[F_1, ..., F_n] = int_0 dx_1 F_1 int_{x_1} dx_2 F_2 ... int_{x_{n-1}} dx_n F_n.
class NestedIntegrandSet {
 public:
  NestedIntegrandSet(Grid grid, std::vector<OneSidedSamples> factors);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<OneSidedSamples>& factors() const noexcept { return factors_; }

 private:
  Grid grid_;
  std::vector<OneSidedSamples> factors_;
};

cplx nested_integral(const NestedIntegrandSet& set);

// Closed forms for the first three corrections:
//   delta_1 = -(1/k)    Re I[U rho q]
//   delta_2 =  (1/k^2)  Im I[U rho q^2, U rho]
//   delta_3 =  (2/k^3)  Re I[U rho q^2, U rho q, U rho]
double delta1_lpt(const ReferenceWave& ref, const EvaluatedPotential& U);
double delta2_lpt(const ReferenceWave& ref, const EvaluatedPotential& U);
double delta3_lpt(const ReferenceWave& ref, const EvaluatedPotential& U);

}  // namespace phaseshift
