#include "phaseshift/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace phaseshift {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidPotential, what); }

// Distance from the centre beyond which the bump is below eps; negative if it never exceeds eps.
double clip_radius(const GaussianBump& b, double eps) {
  const double amp = std::abs(b.height);
  if (amp <= eps) return -1.0;
  return b.width * std::sqrt(2.0 * std::log(amp / eps));
}

double gaussian_value(const GaussianSum& g, double eps, double x) {
  double sum = 0.0;
  for (const auto& b : g.bumps) {
    const double d = x - b.center;
    if (std::abs(d) > clip_radius(b, eps)) continue;
    sum += b.height * std::exp(-d * d / (2.0 * b.width * b.width));
  }
  return sum;
}

double tabulated_value(const Tabulated& t, double x) {
  const Grid& g = t.grid;
  const std::size_t n = g.n_points();
  if (x < 0.0 || x > g.x_max()) return 0.0;
  double u = x / g.step();
  if (std::abs(u - std::round(u)) < 1e-9) u = std::round(u);
  const double fl = std::floor(u);
  auto i = static_cast<std::size_t>(fl);
  if (i >= n - 1) return t.samples[n - 1];
  if (u == fl) return t.samples[i];
  // Four-point Lagrange stencil, shifted to stay inside the table.
  std::size_t s = i == 0 ? 0 : i - 1;
  if (s + 3 > n - 1) s = n - 4;
  double result = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    double weight = 1.0;
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      weight *= (u - static_cast<double>(s + b)) / static_cast<double>(static_cast<long>(a) - static_cast<long>(b));
    }
    result += weight * t.samples[s + a];
  }
  return result;
}

}  // namespace

PotentialSpec::PotentialSpec(Kind kind, double eps_tail) : kind_(std::move(kind)), eps_tail_(eps_tail) {
  if (!(eps_tail_ > 0.0) || !std::isfinite(eps_tail_)) invalid("tail tolerance must be positive");
  std::visit(overloaded{
                 [&](const PiecewiseConstant& p) {
                   double prev_hi = 0.0;
                   for (std::size_t i = 0; i < p.segments.size(); ++i) {
                     const auto& s = p.segments[i];
                     if (!std::isfinite(s.x_lo) || !std::isfinite(s.x_hi) || !std::isfinite(s.value)) {
                       invalid("segment " + std::to_string(i) + " has non-finite fields");
                     }
                     if (s.x_lo < 0.0) invalid("segment " + std::to_string(i) + " starts below 0");
                     if (!(s.x_lo < s.x_hi)) invalid("segment " + std::to_string(i) + " is empty or reversed");
                     if (s.x_lo < prev_hi) invalid("segment " + std::to_string(i) + " overlaps its predecessor");
                     prev_hi = s.x_hi;
                   }
                   support_hi_ = prev_hi;
                 },
                 [&](const GaussianSum& g) {
                   double hi = 0.0;
                   for (std::size_t i = 0; i < g.bumps.size(); ++i) {
                     const auto& b = g.bumps[i];
                     if (!std::isfinite(b.center) || !std::isfinite(b.height) || !std::isfinite(b.width)) {
                       invalid("bump " + std::to_string(i) + " has non-finite fields");
                     }
                     if (!(b.width > 0.0)) invalid("bump " + std::to_string(i) + " needs a positive width");
                     const double r = clip_radius(b, eps_tail_);
                     if (r >= 0.0) hi = std::max(hi, b.center + r);
                   }
                   support_hi_ = hi;
                 },
                 [&](const Tabulated& t) {
                   if (t.samples.size() != t.grid.n_points()) invalid("tabulated sample count differs from its grid");
                   std::size_t last = t.samples.size();
                   for (std::size_t i = 0; i < t.samples.size(); ++i) {
                     if (!std::isfinite(t.samples[i])) invalid("tabulated sample " + std::to_string(i) + " is not finite");
                     if (t.samples[i] != 0.0) last = i;
                   }
                   // Interpolation stencils reach two nodes past the last nonzero sample.
                   support_hi_ = last == t.samples.size()
                                     ? 0.0
                                     : t.grid.x(std::min(last + 2, t.samples.size() - 1));
                 },
             },
             kind_);
}

double PotentialSpec::value(double x) const {
  return std::visit(overloaded{
                        [&](const PiecewiseConstant& p) {
                          for (const auto& s : p.segments) {
                            if (x >= s.x_lo && x <= s.x_hi) return s.value;
                          }
                          return 0.0;
                        },
                        [&](const GaussianSum& g) { return gaussian_value(g, eps_tail_, x); },
                        [&](const Tabulated& t) { return tabulated_value(t, x); },
                    },
                    kind_);
}

double PotentialSpec::limit_from_left(double x) const {
  if (const auto* p = std::get_if<PiecewiseConstant>(&kind_)) {
    for (const auto& s : p->segments) {
      if (x > s.x_lo && x <= s.x_hi) return s.value;
    }
    return 0.0;
  }
  return value(x);
}

double PotentialSpec::limit_from_right(double x) const {
  if (const auto* p = std::get_if<PiecewiseConstant>(&kind_)) {
    for (const auto& s : p->segments) {
      if (x >= s.x_lo && x < s.x_hi) return s.value;
    }
    return 0.0;
  }
  return value(x);
}

PotentialSpec PotentialSpec::scaled(double factor) const {
  Kind k = std::visit(overloaded{
                          [&](PiecewiseConstant p) -> Kind {
                            for (auto& s : p.segments) s.value *= factor;
                            return p;
                          },
                          [&](GaussianSum g) -> Kind {
                            for (auto& b : g.bumps) b.height *= factor;
                            return g;
                          },
                          [&](Tabulated t) -> Kind {
                            for (auto& v : t.samples) v *= factor;
                            return t;
                          },
                      },
                      kind_);
  return PotentialSpec(std::move(k), eps_tail_);
}

PotentialSpec PotentialSpec::resampled(const Grid& grid) const {
  const auto* t = std::get_if<Tabulated>(&kind_);
  if (t == nullptr || t->grid == grid) return *this;
  std::vector<double> samples(grid.n_points());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = tabulated_value(*t, grid.x(i));
  return PotentialSpec(Tabulated{grid, std::move(samples)}, eps_tail_);
}

bool EvaluatedPotential::identically_zero() const noexcept {
  auto zero = [](double v) { return v == 0.0; };
  return std::all_of(left.begin(), left.end(), zero) && std::all_of(right.begin(), right.end(), zero) &&
         std::all_of(values.begin(), values.end(), zero);
}

OneSidedSamples EvaluatedPotential::times(std::span<const cplx> f) const {
  if (f.size() != grid.n_points()) {
    throw Error(ErrorCode::GridMismatch, "potential and function sample counts differ");
  }
  OneSidedSamples out{std::vector<cplx>(f.size()), std::vector<cplx>(f.size())};
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.left[i] = left[i] * f[i];
    out.right[i] = right[i] * f[i];
  }
  return out;
}

namespace {

void require_support_within(const PotentialSpec& spec, const Grid& grid) {
  if (spec.support_hi() > grid.x_max()) {
    throw Error(ErrorCode::SupportBeyondGrid, "potential support ends at " + std::to_string(spec.support_hi()) +
                                                  " beyond x_max = " + std::to_string(grid.x_max()));
  }
}

}  // namespace

EvaluatedPotential evaluate_potential(const PotentialSpec& spec, const Grid& grid) {
  if (const auto* t = std::get_if<Tabulated>(&spec.kind()); t != nullptr && !(t->grid == grid)) {
    throw Error(ErrorCode::TabulatedGridMismatch, "tabulated potential was sampled on a different grid");
  }
  require_support_within(spec, grid);
  const std::size_t n = grid.n_points();
  EvaluatedPotential out{grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                         spec.support_hi()};
  const auto* table = std::get_if<Tabulated>(&spec.kind());
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.x(i);
    if (x > spec.support_hi()) continue;
    if (table != nullptr) {
      out.values[i] = out.left[i] = out.right[i] = table->samples[i];
      continue;
    }
    out.values[i] = spec.value(x);
    out.right[i] = spec.limit_from_right(x);
    out.left[i] = i == 0 ? out.right[i] : spec.limit_from_left(x);
  }
  return out;
}

CellSamples CellSamples::plus_scaled(const CellSamples& other, double factor) const {
  CellSamples out = *this;
  for (std::size_t i = 0; i < out.start.size(); ++i) {
    out.start[i] += factor * other.start[i];
    out.mid[i] += factor * other.mid[i];
    out.end[i] += factor * other.end[i];
  }
  return out;
}

CellSamples sample_cells(const PotentialSpec& spec, const Grid& grid) {
  require_support_within(spec, grid);
  const std::size_t cells = grid.n_points() - 1;
  CellSamples out{std::vector<double>(cells), std::vector<double>(cells), std::vector<double>(cells)};
  for (std::size_t i = 0; i < cells; ++i) {
    const double a = grid.x(i);
    const double b = grid.x(i + 1);
    out.start[i] = spec.limit_from_right(a);
    out.mid[i] = spec.value(0.5 * (a + b));
    out.end[i] = spec.limit_from_left(b);
  }
  return out;
}

}  // namespace phaseshift
