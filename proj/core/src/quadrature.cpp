#include "hocc/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "hocc/error.hpp"

namespace hocc::quadrature {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss = boost::math::quadrature::gauss<double, 15>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;

  bool operator<(const Panel& other) const { return error < other.error; }
};

double sample(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NonFiniteError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

// 31-point Kronrod with embedded 15-point Gauss rule. The Kronrod abscissae at
// even indices (i >= 2) are the positive Gauss nodes; index 0 is the centre.
Panel apply_rule(const std::function<double(double)>& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = sample(f, mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  double l1 = std::abs(f0) * wk[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double fp = sample(f, mid + half * xk[i]);
    const double fm = sample(f, mid - half * xk[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 0) gauss += (fp + fm) * wg[i / 2];
  }
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * std::abs(half), l1 * std::abs(half)};
}

Estimate adaptive(const std::function<double(double)>& f, std::span<const double> breaks,
                  double rel_tol, unsigned max_intervals) {
  std::priority_queue<Panel> panels;
  double total = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) continue;
    Panel p = apply_rule(f, breaks[i], breaks[i + 1]);
    total += p.value;
    error += p.error;
    l1 += p.l1;
    panels.push(p);
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto converged = [&] { return error <= std::max(rel_tol * std::abs(total), 50.0 * eps * l1); };

  while (!converged()) {
    if (panels.size() >= max_intervals) {
      throw ConvergenceError("adaptive quadrature exhausted " + std::to_string(max_intervals) +
                             " intervals (error " + std::to_string(error) + ", value " +
                             std::to_string(total) + ")");
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;  // interval at machine resolution
    panels.pop();
    const Panel left = apply_rule(f, worst.a, mid);
    const Panel right = apply_rule(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  Estimate out;
  while (!panels.empty()) {
    out.value += panels.top().value;
    out.error += panels.top().error;
    panels.pop();
  }
  return out;
}

}  // namespace

Estimate integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   unsigned max_intervals) {
  if (a == b) return {};
  if (a > b) {
    Estimate e = integrate(f, b, a, rel_tol, max_intervals);
    e.value = -e.value;
    return e;
  }
  const double breaks[] = {a, b};
  return adaptive(f, breaks, rel_tol, max_intervals);
}

Estimate integrate_segments(const std::function<double(double)>& f,
                            std::span<const double> breaks, double rel_tol,
                            unsigned max_intervals) {
  return adaptive(f, breaks, rel_tol, max_intervals);
}

Estimate integrate_tail(const std::function<double(double)>& f, double a, double scale,
                        double rel_tol, unsigned max_intervals) {
  auto mapped = [&](double t) {
    const double s = 1.0 - t;
    return f(a + scale * t / s) * scale / (s * s);
  };
  const double breaks[] = {0.0, 0.5, 0.9, 1.0};
  return adaptive(mapped, breaks, rel_tol, max_intervals);
}

}  // namespace hocc::quadrature
