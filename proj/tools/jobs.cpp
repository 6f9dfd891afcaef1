#include "jobs.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "phaseshift/oracle.hpp"
#include "phaseshift/refwave.hpp"
#include "phaseshift/series.hpp"

namespace phaseshift::cli {
namespace {

class CsvWriter {
 public:
  explicit CsvWriter(bool degrees) : scale_(degrees ? 180.0 / std::numbers::pi : 1.0) {}

  CsvWriter& text(const std::string& s) { return field(s); }
  CsvWriter& num(double v) { return field(format_number(v)); }
  CsvWriter& angle(double v) { return field(format_number(v * scale_)); }
  CsvWriter& integer(long long v) { return field(std::to_string(v)); }
  void end_row() {
    out_ << '\n';
    first_ = true;
  }
  std::string str() const { return out_.str(); }

 private:
  CsvWriter& field(const std::string& s) {
    if (!first_) out_ << ',';
    out_ << s;
    first_ = false;
    return *this;
  }

  std::ostringstream out_;
  double scale_;
  bool first_ = true;
};

ReferenceOptions reference_options(const JobConfig& c) { return ReferenceOptions{c.tolerances.tol_wronskian}; }

PhaseSeries series_for(const JobConfig& c, double k, const Grid& grid, const EvaluatedPotential& U) {
  return assemble_series(solve_reference(c.V, k, grid, reference_options(c)), U, c.max_order);
}

std::string phases(const JobConfig& c, bool degrees) {
  const Grid grid = c.grid.grid();
  const EvaluatedPotential U = evaluate_potential(c.U, grid);
  CsvWriter w(degrees);
  w.text("k").text("delta0");
  for (int n = 1; n <= c.max_order; ++n) w.text("delta" + std::to_string(n));
  w.text("divergence_flag");
  w.end_row();
  const double lambda = c.lambda.values.front();
  for (double k : c.k.values) {
    const PhaseSeries s = series_for(c, k, grid, U);
    w.num(k).angle(s.delta0);
    for (double d : s.corrections) w.angle(d);
    w.integer(divergence_warning(s, lambda) ? 1 : 0);
    w.end_row();
  }
  return w.str();
}

std::string sweep(const JobConfig& c, bool degrees) {
  const Grid grid = c.grid.grid();
  const Grid oracle_grid = grid.refined(4);
  const EvaluatedPotential U = evaluate_potential(c.U, grid);
  CsvWriter w(degrees);
  w.text("k").text("lambda");
  for (int n = 0; n <= c.max_order; ++n) w.text("delta_trunc" + std::to_string(n));
  w.text("delta_oracle");
  for (int n = 0; n <= c.max_order; ++n) w.text("remainder" + std::to_string(n));
  w.end_row();
  for (double k : c.k.values) {
    const PhaseSeries s = series_for(c, k, grid, U);
    const auto oracle = solve_sweep(c.V.resampled(oracle_grid), c.U.resampled(oracle_grid), c.lambda.values, k,
                                    s.delta0, oracle_grid, reference_options(c));
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      const double lambda = c.lambda.values[i];
      w.num(k).num(lambda);
      for (int n = 0; n <= c.max_order; ++n) w.angle(evaluate_truncated(s, lambda, n));
      w.angle(oracle[i].delta_exact);
      for (int n = 0; n <= c.max_order; ++n) w.angle(oracle[i].delta_exact - evaluate_truncated(s, lambda, n));
      w.end_row();
    }
  }
  return w.str();
}

std::string converge(const JobConfig& c, bool degrees) {
  const Grid grid = c.grid.grid();
  const EvaluatedPotential U = evaluate_potential(c.U, grid);
  ConvergenceOptions options;
  options.reference = reference_options(c);
  CsvWriter w(degrees);
  w.text("k").text("truncation").text("lambda_large").text("lambda_small").text("remainder_large");
  w.text("remainder_small").text("noise_small").text("p_hat").text("status");
  w.end_row();
  for (double k : c.k.values) {
    const PhaseSeries s = series_for(c, k, grid, U);
    const ConvergenceReport r = convergence_order_check(s, c.V, c.U, c.lambda.values, grid, options);
    const std::size_t last = r.lambdas.size() - 1;
    for (const auto& est : r.orders) {
      w.num(k).integer(est.truncation).num(r.lambdas[last - 1]).num(r.lambdas[last]);
      w.angle(est.remainders[last - 1]).angle(est.remainders[last]).angle(est.noise_floor[last]);
      w.num(est.p_hat).text(std::string(to_string(est.status)));
      w.end_row();
    }
  }
  return w.str();
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

JobOutput render_job(const JobConfig& config, bool degrees) {
  switch (config.command) {
    case Command::Phases: return {phases(config, degrees)};
    case Command::Sweep: return {sweep(config, degrees)};
    case Command::Converge: return {converge(config, degrees)};
    case Command::Selftest: return run_selftest(config);
  }
  return {};
}

int run(const JobConfig& config, const RunOptions& options, std::ostream& out, std::ostream& log) {
  JobOutput result;
  try {
    result = render_job(config, options.degrees);
  } catch (const Error& e) {
    log << "phaseshift: computation failed: " << e.what() << '\n';
    return kComputationFailed;
  } catch (const ConfigError& e) {
    log << "phaseshift: invalid config: " << e.what() << '\n';
    return kConfigInvalid;
  }

  const std::string path = options.out_path.empty() ? config.output_path : options.out_path;
  if (path.empty()) {
    out << result.csv;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      log << "phaseshift: cannot write '" << path << "'\n";
      return kComputationFailed;
    }
    file << result.csv;
  }

  if (config.command == Command::Selftest) {
    log << "selftest: " << result.passed << " PASS, " << result.failed << " FAIL\n";
    return result.failed == 0 ? kSuccess : kComputationFailed;
  }
  return kSuccess;
}

}  // namespace phaseshift::cli
