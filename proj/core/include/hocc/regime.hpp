#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "hocc/fading.hpp"
#include "hocc/oracle.hpp"

namespace hocc {

inline constexpr double kInfimumBoundary = 0.64117587677;
inline constexpr double kSupremumBoundary = 1.71828182846;

struct BoundaryConfig {
  std::array<double, 4> weights{0.25, 0.25, 0.25, 0.25};
  /// Objective is sum_i w_i Delta^2(i + first_order - 1), i = 1..4.
  int first_order = 1;
  double lo = 0.3;
  double hi = 2.5;
  std::size_t scan_points = 64;
  QuadratureConfig quadrature{};
  unsigned threads = 0;

  /// Throws DomainError on non-positive weights, weights not summing to 1,
  /// first_order < 1, lo >= hi or fewer than 3 scan points.
  void validate() const;
};

using Curve = std::vector<std::pair<double, double>>;  // (linear mean SNR, value)

struct BoundaryScan {
  MeanSnr optimum{1.0};
  double objective_at_optimum = 0.0;
  Curve objective;   // on the log grid
  bool flat = false; // objective varies by < 1e-10 over the bracket
};

struct RegimeReport {
  FadingModel model;
  MeanSnr high_onset_snr{1.0};
  MeanSnr low_boundary_snr{1.0};
  std::array<double, 4> weights{};
  Curve psi_curve;
  Curve delta_curve;  // Delta(2; mean)
};

/// P / (1 - P) with P = cdf(gamma_th); +inf when P = 1.
double psi_measure(const FadingModel& model, double gamma_th, MeanSnr mean);

/// Mean SNR at which P(gamma_th; mean) = target_p, by bisection over [1e-4, 1e6].
MeanSnr high_onset(const FadingModel& model, double gamma_th = 8.0, double target_p = 0.5);

/// C(n) / C(1) - 1 from the quadrature oracle.
double delta_measure(const FadingModel& model, int n, MeanSnr mean,
                     const QuadratureConfig& cfg = {});

double boundary_objective(const FadingModel& model, MeanSnr mean, const BoundaryConfig& cfg = {});

/// Log-grid scan plus golden-section refinement of boundary_objective.
BoundaryScan low_boundary_scan(const FadingModel& model, const BoundaryConfig& cfg = {});
MeanSnr low_boundary(const FadingModel& model, const BoundaryConfig& cfg = {});

/// Root of ln(1 + g) = 1.
MeanSnr supremum_boundary();

RegimeReport regime_report(const FadingModel& model, const BoundaryConfig& cfg = {},
                           double gamma_th = 8.0);

}  // namespace hocc
