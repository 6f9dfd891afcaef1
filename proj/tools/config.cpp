#include "config.hpp"

#include <cmath>
#include <fstream>

namespace phaseshift::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + " must be finite");
  return d;
}

ScalarOrList scalar_or_list(const json& v, const std::string& where) {
  ScalarOrList out;
  if (v.is_array()) {
    out.is_list = true;
    if (v.empty()) fail(where + " must not be empty");
    for (std::size_t i = 0; i < v.size(); ++i) out.values.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  } else {
    out.values.push_back(number(v, where));
  }
  return out;
}

json scalar_or_list_to_json(const ScalarOrList& s) {
  if (s.is_list) return json(s.values);
  return json(s.values.front());
}

PotentialSpec parse_potential(const json& v, const std::string& where, double eps_tail) {
  if (!v.is_object()) fail(where + " must be an object");
  const std::string kind = require(v, "kind").get<std::string>();
  try {
    if (kind == "piecewise_constant") {
      PiecewiseConstant p;
      for (const auto& seg : require(v, "segments")) {
        if (!seg.is_array() || seg.size() != 3) fail(where + ".segments entries must be [x_lo, x_hi, value]");
        p.segments.push_back({number(seg[0], where + " x_lo"), number(seg[1], where + " x_hi"),
                              number(seg[2], where + " value")});
      }
      return PotentialSpec(std::move(p), eps_tail);
    }
    if (kind == "gaussian_sum") {
      GaussianSum g;
      for (const auto& b : require(v, "bumps")) {
        g.bumps.push_back({number(require(b, "center"), where + " center"), number(require(b, "width"), where + " width"),
                           number(require(b, "height"), where + " height")});
      }
      return PotentialSpec(std::move(g), eps_tail);
    }
    if (kind == "tabulated") {
      const double x_max = number(require(v, "x_max"), where + ".x_max");
      const auto n = require(v, "n_points").get<std::size_t>();
      std::vector<double> samples;
      for (const auto& s : require(v, "samples")) samples.push_back(number(s, where + ".samples"));
      return PotentialSpec(Tabulated{Grid(x_max, n), std::move(samples)}, eps_tail);
    }
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": unknown potential kind '" + kind + "'");
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Phases: return "phases";
    case Command::Sweep: return "sweep";
    case Command::Converge: return "converge";
    case Command::Selftest: return "selftest";
  }
  return "phases";
}

Command parse_command(const std::string& name) {
  if (name == "phases") return Command::Phases;
  if (name == "sweep") return Command::Sweep;
  if (name == "converge") return Command::Converge;
  if (name == "selftest") return Command::Selftest;
  fail("unknown command '" + name + "'");
}

JobConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config document must be a JSON object");
  JobConfig c;
  try {
    if (doc.contains("command")) c.command = parse_command(doc.at("command").get<std::string>());

    if (doc.contains("tolerances")) {
      const json& t = doc.at("tolerances");
      if (t.contains("tol_wronskian")) c.tolerances.tol_wronskian = number(t.at("tol_wronskian"), "tolerances.tol_wronskian");
      if (t.contains("eps_tail")) c.tolerances.eps_tail = number(t.at("eps_tail"), "tolerances.eps_tail");
      if (c.tolerances.tol_wronskian && !(*c.tolerances.tol_wronskian > 0.0)) fail("tol_wronskian must be positive");
      if (!(c.tolerances.eps_tail > 0.0)) fail("eps_tail must be positive");
    }

    c.k = scalar_or_list(require(doc, "k"), "k");
    for (double k : c.k.values) {
      if (!(k > 0.0)) fail("every k must be positive");
    }
    c.lambda = doc.contains("lambda") ? scalar_or_list(doc.at("lambda"), "lambda") : ScalarOrList{{1.0}, false};

    const json& mo = require(doc, "max_order");
    if (!mo.is_number_integer()) fail("max_order must be an integer");
    c.max_order = mo.get<int>();
    if (c.max_order < 1 || c.max_order > 20) fail("max_order must be in [1, 20]");

    const json& g = require(doc, "grid");
    c.grid.x_max = number(require(g, "x_max"), "grid.x_max");
    const json& np = require(g, "n_points");
    if (!np.is_number_unsigned()) fail("grid.n_points must be a positive integer");
    c.grid.n_points = np.get<std::size_t>();
    Grid grid = [&] {
      try {
        return c.grid.grid();
      } catch (const Error& e) {
        fail(std::string("grid: ") + e.what());
      }
    }();

    c.V = parse_potential(require(doc, "V"), "V", c.tolerances.eps_tail);
    c.U = parse_potential(require(doc, "U"), "U", c.tolerances.eps_tail);
    for (const auto* spec : {&c.V, &c.U}) {
      if (spec->support_hi() > grid.x_max()) fail("potential support extends beyond grid.x_max");
      if (const auto* t = std::get_if<Tabulated>(&spec->kind()); t && !(t->grid == grid)) {
        fail("tabulated potential grid must match the job grid");
      }
    }

    if (doc.contains("output_path")) c.output_path = doc.at("output_path").get<std::string>();
  } catch (const json::exception& e) {
    fail(std::string("malformed config: ") + e.what());
  }
  validate(c);
  return c;
}

void validate(const JobConfig& c) {
  if (c.command != Command::Converge) return;
  const auto& l = c.lambda.values;
  if (l.size() < 2) fail("converge needs at least two lambda values");
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (!(std::abs(l[i] / l[i + 1] - 2.0) <= 1e-12)) fail("converge lambdas must halve at every step");
  }
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json potential_to_json(const PotentialSpec& spec) {
  return std::visit(
      [](const auto& kind) -> json {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, PiecewiseConstant>) {
          json segs = json::array();
          for (const auto& s : kind.segments) segs.push_back({s.x_lo, s.x_hi, s.value});
          return {{"kind", "piecewise_constant"}, {"segments", segs}};
        } else if constexpr (std::is_same_v<T, GaussianSum>) {
          json bumps = json::array();
          for (const auto& b : kind.bumps) bumps.push_back({{"center", b.center}, {"width", b.width}, {"height", b.height}});
          return {{"kind", "gaussian_sum"}, {"bumps", bumps}};
        } else {
          return {{"kind", "tabulated"},
                  {"x_max", kind.grid.x_max()},
                  {"n_points", kind.grid.n_points()},
                  {"samples", kind.samples}};
        }
      },
      spec.kind());
}

json to_json(const JobConfig& c) {
  json tol = {{"eps_tail", c.tolerances.eps_tail}};
  if (c.tolerances.tol_wronskian) tol["tol_wronskian"] = *c.tolerances.tol_wronskian;
  json doc = {
      {"command", to_string(c.command)},
      {"k", scalar_or_list_to_json(c.k)},
      {"lambda", scalar_or_list_to_json(c.lambda)},
      {"max_order", c.max_order},
      {"grid", {{"x_max", c.grid.x_max}, {"n_points", c.grid.n_points}}},
      {"V", potential_to_json(c.V)},
      {"U", potential_to_json(c.U)},
      {"tolerances", tol},
  };
  if (!c.output_path.empty()) doc["output_path"] = c.output_path;
  return doc;
}

}  // namespace phaseshift::cli
