#pragma once

// Independent reference computations. Nothing here calls into hocc.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

inline constexpr double kEuler = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

// composite Simpson on a fixed grid, n even
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Simpson in s = ln r over [lo, hi]
inline double simpson_log(const std::function<double(double)>& f, double lo, double hi, int n) {
  return simpson([&](double s) { const double r = std::exp(s); return f(r) * r; }, std::log(lo),
                 std::log(hi), n);
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double central_diff2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// complete Bell polynomial by explicit set-partition enumeration (restricted growth strings)
inline double bell_by_partitions(const std::vector<double>& g) {
  const int n = static_cast<int>(g.size());
  if (n == 0) return 1.0;
  std::vector<int> a(n, 0);
  double total = 0.0;
  while (true) {
    std::vector<int> size(n, 0);
    for (int x : a) ++size[x];
    double term = 1.0;
    for (int s : size) {
      if (s > 0) term *= g[s - 1];
    }
    total += term;
    int i = n - 1;
    while (i > 0) {
      const int mx = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= mx) break;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
  return total;
}

inline double erf_inv_newton(double y) {
  double x = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double fx = std::erf(x) - y;
    x -= fx / (2.0 / std::sqrt(kPi) * std::exp(-x * x));
  }
  return x;
}

// E1(x) by its convergent power series
inline double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    sum -= term / k;
  }
  return -kEuler - std::log(x) + sum;
}

// generalized-K density (gamma-gamma composite with unit mean)
inline double generalized_k_pdf(double m, double ms, double g, double mean) {
  const double c = m * ms / mean;
  return 2.0 * std::pow(c, 0.5 * (m + ms)) * std::pow(g, 0.5 * (m + ms) - 1.0) *
         std::cyl_bessel_k(std::abs(m - ms), 2.0 * std::sqrt(c * g)) / (std::tgamma(m) * std::tgamma(ms));
}

inline double nakagami_pdf(double m, double g, double mean) {
  return std::pow(m / mean, m) * std::pow(g, m - 1.0) * std::exp(-m * g / mean) / std::tgamma(m);
}

inline double weibull_pdf(double xi, double g, double mean) {
  const double b = std::tgamma(1.0 + 1.0 / xi) / mean;
  return xi * b * std::pow(b * g, xi - 1.0) * std::exp(-std::pow(b * g, xi));
}

// values computed with mpmath at 30 digits before the library was written
inline constexpr double kRayleighAcc10 = 2.01464254470845167910;  // e^0.1 E1(0.1)
inline constexpr double kRayleighAcc40dB = 8.63408807021272533015;
inline constexpr double kKummerDeriv = 0.75159571455123294364;  // -sum (-2)^j/(j (2)_j)
inline constexpr double kExtIncGamma = 0.23987554393612289474;  // int r^-1/2 e^{-r-1/r}
inline constexpr double kErfInvHalf = 0.47693627620446987338;

// uniform-weight one-sided Gaussian boundary reproduced by this repo
inline constexpr double kOsgUniformBoundary = 0.6411758741061543;

}  // namespace oracle
