#pragma once

#include <vector>

#include "phaseshift/potential.hpp"
#include "phaseshift/refwave.hpp"

namespace phaseshift {

struct HierarchyResult {
  int order = 0;
  std::vector<ComplexGridFunction> f;  // f[0] holds f_1
  std::vector<cplx> f_at_zero;         // f_at_zero[n-1] = f_n(0)
};

/// J[g](x) = (1/ik) * integral_x^x_max U rho (q(z) - q(x)) g(z) dz.
///
/// Evaluated as (A - q B)/(ik) with A, B right-to-left cumulative integrals of
/// U rho q g and U rho g, so each application is O(n_points). The result is
/// exactly zero at nodes x >= U.support_hi.
ComplexGridFunction apply_J(const ReferenceWave& ref, const EvaluatedPotential& U,
                            const ComplexGridFunction& g);

/// f_1..f_N with f_0 = 1 and f_n = J[f_{n-1}]. Throws OrderOutOfRange for N < 1.
HierarchyResult compute_hierarchy(const ReferenceWave& ref, const EvaluatedPotential& U, int max_order);

/// f_n(x) = integral_x dy rho(y)^-1 integral_y dz 2 U(z) rho(z) f_{n-1}(z), evaluated as
/// two nested cumulative integrals. Slow-path cross-check for apply_J.
ComplexGridFunction compute_fn_double_integral(const ReferenceWave& ref, const EvaluatedPotential& U,
                                               const ComplexGridFunction& f_prev);

}  // namespace phaseshift
