#include "hocc/specfun.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hocc/error.hpp"
#include "hocc/quadrature.hpp"

namespace hocc::specfun {
namespace {

constexpr double kLogMax = 709.782712893384;  // ln(DBL_MAX)

std::string num(double x) { return std::to_string(x); }

// ln of sum_{k>=0} (x^2/4)^k / (k! Gamma(k+nu+1)), i.e. ln[I_nu(x) / (x/2)^nu].
// All terms are positive; the running sum is rescaled to stay in range.
double log_normalized_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double offset = 0.0;
  constexpr double kRescale = 1e250;
  const double log_rescale = std::log(kRescale);
  for (int k = 0; k < 1000000; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += term;
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      offset += log_rescale;
    }
    if (k + 1 > 0.5 * x && term < 1e-17 * sum) break;
  }
  return std::log(sum) + offset - std::lgamma(nu + 1.0);
}

// Hankel expansion of ln I_nu(x) for x >> max(1, nu^2).
double log_bessel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = -term * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

bool use_asymptotic(double nu, double x) { return x > 50.0 && x > 2.0 * nu * nu; }

void check_bessel_args(double nu, double x) {
  if (!(nu >= -1.0)) throw DomainError("bessel_i: order must be >= -1, got " + num(nu));
  if (!(x >= 0.0)) throw DomainError("bessel_i: argument must be >= 0, got " + num(x));
}

}  // namespace

void GlConfig::validate() const {
  if (!(step > 0.0 && step <= 0.01)) {
    throw DomainError("GlConfig.step must lie in (0, 0.01], got " + num(step));
  }
  if (max_order < 0 || max_order > 8) {
    throw DomainError("GlConfig.max_order must lie in [0, 8], got " + std::to_string(max_order));
  }
}

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) {
    throw DomainError("SeriesConfig.rel_tol must lie in (0, 1e-6], got " + num(rel_tol));
  }
  if (max_terms < 200) {
    throw DomainError("SeriesConfig.max_terms must be >= 200, got " + std::to_string(max_terms));
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: x must be > 0, got " + num(x));
  return std::lgamma(x);
}

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: x must be > 0, got " + num(x));
  return std::tgamma(x);
}

double polygamma(int m, double x) {
  if (m < 0) throw DomainError("polygamma: order must be >= 0");
  if (!(x > 0.0)) throw DomainError("polygamma: x must be > 0, got " + num(x));
  if (m == 0) return boost::math::digamma(x);
  return boost::math::polygamma(m, x);
}

double digamma(double x) { return polygamma(0, x); }

double erf(double x) { return std::erf(x); }

double erf_inv(double y) {
  if (!(std::abs(y) < 1.0)) throw DomainError("erf_inv: |y| must be < 1, got " + num(y));
  return boost::math::erf_inv(y);
}

double log_bessel_i_normalized(double nu, double x) {
  check_bessel_args(nu, x);
  if (nu == -1.0) {
    // I_{-1} = I_1, so I_{-1}(x) / (x/2)^{-1} = (x/2)^2 * [I_1(x) / (x/2)].
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    return log_bessel_i_normalized(1.0, x) + 2.0 * std::log(0.5 * x);
  }
  if (x == 0.0) return -std::lgamma(nu + 1.0);
  if (use_asymptotic(nu, x)) return log_bessel_asymptotic(nu, x) - nu * std::log(0.5 * x);
  return log_normalized_series(nu, x);
}

double log_bessel_i(double nu, double x) {
  check_bessel_args(nu, x);
  if (x == 0.0) {
    if (nu == 0.0) return 0.0;
    if (nu > 0.0 || nu == -1.0) return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::infinity();
  }
  if (nu == -1.0) nu = 1.0;
  if (use_asymptotic(nu, x)) return log_bessel_asymptotic(nu, x);
  return log_normalized_series(nu, x) + nu * std::log(0.5 * x);
}

double bessel_i(double nu, double x) {
  const double l = log_bessel_i(nu, x);
  if (l > kLogMax) {
    throw OverflowError("bessel_i: I_" + num(nu) + "(" + num(x) + ") exceeds double range");
  }
  return std::exp(l);
}

double bessel_i_scaled(double nu, double x) {
  check_bessel_args(nu, x);
  if (x == 0.0) return bessel_i(nu, 0.0);
  return std::exp(log_bessel_i(nu, x) - x);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double complete_bell(std::span<const double> g) {
  const std::size_t n = g.size();
  std::vector<double> bell(n + 1, 0.0);
  bell[0] = 1.0;
  for (std::size_t m = 0; m < n; ++m) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
      acc += binomial(static_cast<int>(m), static_cast<int>(i)) * bell[m - i] * g[i];
    }
    bell[m + 1] = acc;
  }
  return bell[n];
}

double psi_n_ratio(int n, double a, double b, double k) {
  if (n < 0) throw DomainError("psi_n: order must be >= 0");
  const double x = a + b * k;
  if (!(x > 0.0)) throw DomainError("psi_n: a + b k must be > 0, got " + num(x));
  // d^j/dk^j ln Gamma(a + b k) = b^j psi_{j-1}(a + b k)
  std::vector<double> g(static_cast<std::size_t>(n));
  double bj = 1.0;
  for (int j = 1; j <= n; ++j) {
    bj *= b;
    g[j - 1] = bj * polygamma(j - 1, x);
  }
  return complete_bell(g);
}

double psi_n(int n, double a, double b, double k) {
  const double r = psi_n_ratio(n, a, b, k);
  return gamma(a + b * k) * r;
}

double phi_n(int n, double a, double b, double k) {
  if (n < 0) throw DomainError("phi_n: order must be >= 0");
  std::vector<double> g(static_cast<std::size_t>(n), 0.0);
  if (n >= 1) g[0] = 2.0 * b * k;
  if (n >= 2) g[1] = 2.0 * b;
  return std::exp(a + b * k * k) * complete_bell(g);
}

double gl_derivative(const std::function<double(double)>& f, double at, int order,
                     const GlConfig& cfg) {
  cfg.validate();
  if (order < 0 || order > cfg.max_order) {
    throw DomainError("gl_derivative: order must lie in [0, " + std::to_string(cfg.max_order) +
                      "], got " + std::to_string(order));
  }
  const double eps = cfg.step;
  const double sign_k = (order % 2 == 0) ? 1.0 : -1.0;
  double acc = 0.0;
  for (int j = 0; j <= order; ++j) {
    const double fp = f(at + j * eps);
    const double fm = f(at - j * eps);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw NonFiniteError("gl_derivative: non-finite sample near x = " + num(at));
    }
    const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;
    acc += sign_j * binomial(order, j) * (sign_k * fp + fm);
  }
  return acc / (2.0 * std::pow(eps, order));
}

double ext_inc_gamma(double alpha, double x, double b, double beta, double rel_tol) {
  if (!(x >= 0.0)) throw DomainError("ext_inc_gamma: x must be >= 0");
  if (!(b >= 0.0)) throw DomainError("ext_inc_gamma: b must be >= 0");
  if (!(beta > 0.0)) throw DomainError("ext_inc_gamma: beta must be > 0");
  if (x == 0.0 && b == 0.0 && !(alpha > 0.0)) {
    throw DomainError("ext_inc_gamma: integral diverges for alpha <= 0 with x = b = 0");
  }

  // In s = ln r the integrand is exp(h(s)) with h(s) = alpha s - e^s - b e^{-beta s},
  // which is strictly concave, so it has a single mode.
  auto h = [&](double s) { return alpha * s - std::exp(s) - b * std::exp(-beta * s); };
  auto dh = [&](double s) { return alpha - std::exp(s) + b * beta * std::exp(-beta * s); };
  auto d2h = [&](double s) { return -std::exp(s) - b * beta * beta * std::exp(-beta * s); };

  const double s_lo = x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();

  double mode;
  if (b == 0.0 && alpha <= 0.0) {
    mode = s_lo;  // h decreasing everywhere
  } else {
    double lo = -1.0;
    double hi = 1.0;
    while (dh(lo) <= 0.0) lo = 2.0 * lo - 1.0;
    while (dh(hi) >= 0.0) hi = 2.0 * hi + 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      (dh(mid) > 0.0 ? lo : hi) = mid;
    }
    mode = std::max(0.5 * (lo + hi), s_lo);
  }

  const double h_max = h(mode);
  const double width = 1.0 / std::sqrt(-d2h(mode));
  constexpr double kDrop = 46.0;  // e^-46 ~ 1e-20 relative to the peak

  std::vector<double> breaks{mode};
  for (double step = width;; step *= 2.0) {
    const double s = mode + step;
    breaks.push_back(s);
    if (h(s) - h_max < -kDrop) break;
  }
  for (double step = width;; step *= 2.0) {
    const double s = mode - step;
    if (s <= s_lo) {
      breaks.push_back(s_lo);
      break;
    }
    breaks.push_back(s);
    if (h(s) - h_max < -kDrop) break;
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto g = [&](double s) { return std::exp(h(s) - h_max); };
  const auto est = quadrature::integrate_segments(g, breaks, rel_tol, 4000);
  return std::exp(h_max) * est.value;
}

}  // namespace hocc::specfun
