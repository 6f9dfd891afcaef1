#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "phaseshift/grid.hpp"
#include "phaseshift/potential.hpp"

namespace phaseshift::cli {

enum class Command { Phases, Sweep, Converge, Selftest };

std::string to_string(Command c);
Command parse_command(const std::string& name);

/// Raised for any malformed or inconsistent job document (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A number or a list of numbers; remembers which form it was written in.
struct ScalarOrList {
  std::vector<double> values;
  bool is_list = false;

  friend bool operator==(const ScalarOrList&, const ScalarOrList&) = default;
};

struct GridConfig {
  double x_max = 5.0;
  std::size_t n_points = 4001;

  Grid grid() const { return Grid(x_max, n_points); }
  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct Tolerances {
  std::optional<double> tol_wronskian;
  double eps_tail = kDefaultTailTolerance;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct JobConfig {
  Command command = Command::Phases;
  ScalarOrList k;
  ScalarOrList lambda;
  int max_order = 4;
  GridConfig grid;
  PotentialSpec V = PotentialSpec::zero();
  PotentialSpec U = PotentialSpec::zero();
  std::string output_path;
  Tolerances tolerances;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Throws ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

/// Command-specific requirements (e.g. converge needs couplings that halve). Throws ConfigError.
void validate(const JobConfig& config);

nlohmann::json to_json(const JobConfig& config);
nlohmann::json potential_to_json(const PotentialSpec& spec);

}  // namespace phaseshift::cli
