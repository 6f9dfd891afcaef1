#include "phaseshift/series.hpp"

#include <cmath>
#include <string>

namespace phaseshift {
namespace {

void check_request(std::span<const cplx> f_at_zero, int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::OrderOutOfRange, "order must be in [1, 20], got " + std::to_string(n));
  }
  if (f_at_zero.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InsufficientFValues, "order " + std::to_string(n) + " needs " + std::to_string(n) +
                                                    " f values, got " + std::to_string(f_at_zero.size()));
  }
}

cplx integer_power(cplx base, int exponent) {
  cplx r{1.0, 0.0};
  for (int e = 0; e < exponent; ++e) r *= base;
  return r;
}

}  // namespace

double assemble_delta_n(std::span<const cplx> f_at_zero, int n) {
  check_request(f_at_zero, n);
  cplx sum{0.0, 0.0};
  for (const auto& t : enumerate_partitions(n)) {
    cplx term{log_derivative_coefficient(t), 0.0};
    for (std::size_t p = 0; p < t.multiplicities.size(); ++p) {
      if (t.multiplicities[p] != 0) term *= integer_power(f_at_zero[p], t.multiplicities[p]);
    }
    sum += term;
  }
  return sum.imag();
}

double log_expansion_reference(std::span<const cplx> f_at_zero, int n) {
  check_request(f_at_zero, n);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    cplx acc{0.0, 0.0};
    for (int l = 1; l < m; ++l) acc += static_cast<double>(l) * c[static_cast<std::size_t>(l)] * f_at_zero[static_cast<std::size_t>(m - l - 1)];
    c[static_cast<std::size_t>(m)] = f_at_zero[static_cast<std::size_t>(m - 1)] - acc / static_cast<double>(m);
  }
  return c[static_cast<std::size_t>(n)].imag();
}

PhaseSeries assemble_series(const ReferenceWave& ref, const EvaluatedPotential& U, int max_order) {
  if (max_order < 1 || max_order > kMaxOrder) {
    throw Error(ErrorCode::OrderOutOfRange, "series order must be in [1, 20], got " + std::to_string(max_order));
  }
  const HierarchyResult h = compute_hierarchy(ref, U, max_order);
  PhaseSeries s;
  s.k = ref.k;
  s.delta0 = ref.delta0;
  s.f_at_zero = h.f_at_zero;
  s.max_order = max_order;
  s.corrections.reserve(static_cast<std::size_t>(max_order));
  for (int n = 1; n <= max_order; ++n) s.corrections.push_back(assemble_delta_n(s.f_at_zero, n));
  return s;
}

double evaluate_truncated(const PhaseSeries& series, double lambda, int truncation) {
  if (truncation < 0 || truncation > series.max_order) {
    throw Error(ErrorCode::TruncationTooHigh, "truncation " + std::to_string(truncation) +
                                                  " exceeds series order " + std::to_string(series.max_order));
  }
  // Horner from the highest kept order down.
  double acc = 0.0;
  for (int n = truncation; n >= 1; --n) acc = (acc + series.corrections[static_cast<std::size_t>(n - 1)]) * lambda;
  return series.delta0 + acc;
}

bool divergence_warning(const PhaseSeries& series, double lambda) {
  const int n = series.max_order;
  if (n < 3) return false;
  auto term = [&](int order) {
    return std::abs(std::pow(lambda, order) * series.corrections[static_cast<std::size_t>(order - 1)]);
  };
  const double a = term(n - 2);
  const double b = term(n - 1);
  const double c = term(n);
  return c > 0.0 && a <= b && b <= c;
}

}  // namespace phaseshift
