#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "jobs.hpp"

int main(int argc, char** argv) {
  using namespace phaseshift::cli;

  CLI::App app{"Perturbative 1-D scattering phase shifts to arbitrary order"};
  std::string command;
  std::string config_path;
  RunOptions options;
  app.add_option("command", command, "phases | sweep | converge | selftest")
      ->required()
      ->check(CLI::IsMember({"phases", "sweep", "converge", "selftest"}));
  app.add_option("--config", config_path, "JSON job description")->required();
  app.add_option("--out", options.out_path, "CSV output path (overrides output_path)");
  app.add_flag("--degrees", options.degrees, "Report angles in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigInvalid;
  }

  JobConfig config;
  try {
    config = load_config(config_path);
    config.command = parse_command(command);
    validate(config);
  } catch (const ConfigError& e) {
    std::cerr << "phaseshift: invalid config: " << e.what() << '\n';
    return kConfigInvalid;
  }
  return run(config, options, std::cout, std::cerr);
}
