#include "hocc/regime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <variant>

#include "hocc/error.hpp"
#include "hocc/parallel.hpp"
#include "hocc/specfun.hpp"

namespace hocc {
namespace {

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = std::exp(a + step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

}  // namespace

void BoundaryConfig::validate() const {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("boundary weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("boundary weights must sum to 1, got " + std::to_string(sum));
  }
  if (first_order < 1) throw DomainError("boundary first_order must be >= 1");
  if (!(lo > 0.0 && lo < hi)) throw DomainError("boundary bracket needs 0 < lo < hi");
  if (scan_points < 3) throw DomainError("boundary scan needs at least 3 points");
  quadrature.validate();
}

double psi_measure(const FadingModel& model, double gamma_th, MeanSnr mean) {
  const double p = cdf(model, gamma_th, mean);
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return p / (1.0 - p);
}

MeanSnr high_onset(const FadingModel& model, double gamma_th, double target_p) {
  validate(model);
  if (!(gamma_th > 0.0)) throw DomainError("high_onset: gamma_th must be > 0");
  if (!(target_p > 0.0 && target_p < 1.0)) throw DomainError("high_onset: target_p must lie in (0, 1)");
  if (std::holds_alternative<OneSidedGaussian>(model)) {
    const double r = specfun::erf_inv(target_p);
    return MeanSnr(0.5 * gamma_th / (r * r));
  }
  if (std::holds_alternative<Awgn>(model)) return MeanSnr(gamma_th);

  // P(gamma_th; mean) falls as the mean grows.
  auto f = [&](double log_mean) {
    return cdf(model, gamma_th, MeanSnr(std::exp(log_mean))) - target_p;
  };
  double lo = std::log(1e-4);
  double hi = std::log(1e6);
  if (!(f(lo) >= 0.0 && f(hi) <= 0.0)) {
    throw BracketError("high_onset: P(gamma_th) = " + std::to_string(target_p) +
                       " is not bracketed by mean SNR in [1e-4, 1e6]");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return MeanSnr(std::exp(0.5 * (lo + hi)));
}

double delta_measure(const FadingModel& model, int n, MeanSnr mean, const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("delta_measure: n must be >= 1");
  if (n == 1) return 0.0;
  const double c1 = hocc_quadrature(model, 1, mean, cfg).value;
  const double cn = hocc_quadrature(model, n, mean, cfg).value;
  return cn / c1 - 1.0;
}

double boundary_objective(const FadingModel& model, MeanSnr mean, const BoundaryConfig& cfg) {
  cfg.validate();
  const double c1 = hocc_quadrature(model, 1, mean, cfg.quadrature).value;
  double obj = 0.0;
  for (int i = 0; i < 4; ++i) {
    const int n = i + cfg.first_order;
    const double d = n == 1 ? 0.0 : hocc_quadrature(model, n, mean, cfg.quadrature).value / c1 - 1.0;
    obj += cfg.weights[i] * d * d;
  }
  return obj;
}

BoundaryScan low_boundary_scan(const FadingModel& model, const BoundaryConfig& cfg) {
  validate(model);
  cfg.validate();
  const auto grid = log_grid(cfg.lo, cfg.hi, cfg.scan_points);
  std::vector<double> values(grid.size());
  parallel_for(
      grid.size(), [&](std::size_t i) { values[i] = boundary_objective(model, MeanSnr(grid[i]), cfg); },
      cfg.threads);

  BoundaryScan out;
  for (std::size_t i = 0; i < grid.size(); ++i) out.objective.emplace_back(grid[i], values[i]);
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  out.flat = *mx - *mn < 1e-10;

  const std::size_t best = static_cast<std::size_t>(mn - values.begin());
  double a = std::log(grid[best == 0 ? 0 : best - 1]);
  double b = std::log(grid[std::min(best + 1, grid.size() - 1)]);
  auto obj = [&](double x) { return boundary_objective(model, MeanSnr(std::exp(x)), cfg); };

  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = obj(c);
  double fd = obj(d);
  for (int it = 0; it < 200 && b - a > 1e-11; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = obj(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = obj(d);
    }
  }
  double x = 0.5 * (a + b);
  double fx = obj(x);
  if (values[best] < fx) {
    x = std::log(grid[best]);
    fx = values[best];
  }
  out.optimum = MeanSnr(std::exp(x));
  out.objective_at_optimum = fx;
  return out;
}

MeanSnr low_boundary(const FadingModel& model, const BoundaryConfig& cfg) {
  return low_boundary_scan(model, cfg).optimum;
}

MeanSnr supremum_boundary() {
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::log1p(mid) < 1.0 ? lo : hi) = mid;
  }
  return MeanSnr(0.5 * (lo + hi));
}

RegimeReport regime_report(const FadingModel& model, const BoundaryConfig& cfg, double gamma_th) {
  RegimeReport r{model, high_onset(model, gamma_th), MeanSnr(1.0), cfg.weights, {}, {}};
  const BoundaryScan scan = low_boundary_scan(model, cfg);
  r.low_boundary_snr = scan.optimum;
  for (double g : log_grid(gamma_th / 10.0, gamma_th * 1000.0, 41)) {
    r.psi_curve.emplace_back(g, psi_measure(model, gamma_th, MeanSnr(g)));
  }
  for (const auto& [g, v] : scan.objective) {
    (void)v;
    r.delta_curve.emplace_back(g, delta_measure(model, 2, MeanSnr(g), cfg.quadrature));
  }
  return r;
}

}  // namespace hocc
