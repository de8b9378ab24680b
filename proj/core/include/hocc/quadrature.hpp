#pragma once

#include <functional>
#include <span>

namespace hocc::quadrature {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Globally adaptive Gauss–Kronrod (15/31-point) on a finite interval [a, b]:
/// the interval with the largest |K - G| is bisected until the summed error is
/// below max(rel_tol |I|, roundoff floor). Throws ConvergenceError when
/// `max_intervals` is exhausted first and NonFiniteError on NaN/inf samples.
Estimate integrate(const std::function<double(double)>& f, double a, double b,
                   double rel_tol = 1e-10, unsigned max_intervals = 2000);

/// Sum of integrate() over consecutive segments of `breaks` (ascending).
Estimate integrate_segments(const std::function<double(double)>& f,
                            std::span<const double> breaks, double rel_tol = 1e-10,
                            unsigned max_intervals = 2000);

/// int_a^inf f via the map x = a + scale * t / (1 - t), t in [0, 1).
Estimate integrate_tail(const std::function<double(double)>& f, double a, double scale,
                        double rel_tol = 1e-10, unsigned max_intervals = 2000);

}  // namespace hocc::quadrature
