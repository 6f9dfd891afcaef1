#include <cmath>
#include <random>
#include <sstream>

#include "jobs.hpp"
#include "phaseshift/hierarchy.hpp"
#include "phaseshift/lpt_check.hpp"
#include "phaseshift/oracle.hpp"
#include "phaseshift/partitions.hpp"
#include "phaseshift/series.hpp"

namespace phaseshift::cli {
namespace {

class Checks {
 public:
  void record(const std::string& name, double k, bool ok, double measure) {
    rows_ << name << ',' << (std::isnan(k) ? std::string() : format_number(k)) << ',' << (ok ? "PASS" : "FAIL") << ','
          << format_number(measure) << '\n';
    (ok ? passed_ : failed_)++;
  }

  JobOutput finish() const { return {"check,k,status,measure\n" + rows_.str(), passed_, failed_}; }

 private:
  std::ostringstream rows_;
  int passed_ = 0;
  int failed_ = 0;
};

constexpr double kNoK = std::numeric_limits<double>::quiet_NaN();

void combinatorics(Checks& checks) {
  const int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  int wrong = 0;
  for (int n = 1; n <= 12; ++n) {
    if (static_cast<int>(enumerate_partitions(n).size()) != expected[n - 1]) ++wrong;
  }
  checks.record("partition_counts", kNoK, wrong == 0, wrong);

  const std::vector<std::vector<int>> n4 = {{0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}};
  const auto got = enumerate_partitions(4);
  bool same = got.size() == n4.size();
  for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i].multiplicities == n4[i];
  checks.record("partition_n4_listing", kNoK, same, static_cast<double>(got.size()));

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int set = 0; set < 100; ++set) {
    std::vector<cplx> f(10);
    for (auto& v : f) {
      do {
        v = {unit(rng), unit(rng)};
      } while (std::abs(v) > 1.0);
    }
    for (int n = 1; n <= 10; ++n) {
      worst = std::max(worst, std::abs(assemble_delta_n(f, n) - log_expansion_reference(f, n)));
    }
  }
  checks.record("lemma_partition_vs_recurrence", kNoK, worst <= 1e-12, worst);
}

void per_wavenumber(const JobConfig& c, double k, Checks& checks) {
  const Grid grid = c.grid.grid();
  const ReferenceOptions opts{c.tolerances.tol_wronskian};
  const ReferenceWave ref = solve_reference(c.V, k, grid, opts);
  const EvaluatedPotential U = evaluate_potential(c.U, grid);

  checks.record("wronskian", k, ref.wronskian_residual <= opts.tolerance_for(k), ref.wronskian_residual);
  checks.record("q_origin_zero", k, ref.q[0] == cplx{0.0, 0.0}, std::abs(ref.q[0]));

  const EvaluatedPotential zero = evaluate_potential(PotentialSpec::zero(), grid);
  const PhaseSeries none = assemble_series(ref, zero, c.max_order);
  double largest = 0.0;
  for (double d : none.corrections) largest = std::max(largest, std::abs(d));
  checks.record("zero_perturbation", k, largest == 0.0, largest);

  const OracleResult at_zero = solve_exact(c.V, c.U, 0.0, k, grid, opts);
  const double gap = std::abs(unwrap_phase(at_zero.delta_exact, ref.delta0) - ref.delta0);
  checks.record("oracle_lambda0", k, gap <= 1e-12, gap);

  const int cross_orders = std::min(3, c.max_order);
  const PhaseSeries s = assemble_series(ref, U, std::max(3, c.max_order));
  const double lpt[] = {delta1_lpt(ref, U), delta2_lpt(ref, U), delta3_lpt(ref, U)};
  for (int n = 1; n <= cross_orders; ++n) {
    const double a = s.corrections[static_cast<std::size_t>(n - 1)];
    const double diff = std::abs(a - lpt[n - 1]);
    checks.record("lpt_cross_path_n" + std::to_string(n), k, diff <= 1e-7 * std::max(1.0, std::abs(a)), diff);
  }

  ComplexGridFunction f = ComplexGridFunction::constant(grid, 1.0);
  for (int n = 1; n <= cross_orders; ++n) {
    const ComplexGridFunction single = apply_J(ref, U, f);
    const ComplexGridFunction twice = compute_fn_double_integral(ref, U, f);
    const double diff = std::abs(single[0] - twice[0]);
    checks.record("double_integral_path_n" + std::to_string(n), k, diff <= 1e-6 * std::max(1.0, std::abs(single[0])),
                  diff);
    f = single;
  }
}

void free_anchor(Checks& checks) {
  const Grid grid(5.0, 4001);
  const ReferenceWave ref = analytic_free_reference(1.0, grid);
  const EvaluatedPotential U = evaluate_potential(PotentialSpec::barrier(0.0, 1.0, 1.0), grid);
  const double expected = -(1.0 - std::sin(2.0) / 2.0);
  const double got = assemble_series(ref, U, 1).corrections[0];
  checks.record("free_barrier_delta1_anchor", 1.0, std::abs(got - expected) <= 1e-8, std::abs(got - expected));
}

}  // namespace

JobOutput run_selftest(const JobConfig& config) {
  Checks checks;
  combinatorics(checks);
  free_anchor(checks);
  for (double k : config.k.values) per_wavenumber(config, k, checks);
  return checks.finish();
}

}  // namespace phaseshift::cli
