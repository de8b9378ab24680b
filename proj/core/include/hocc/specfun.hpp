#pragma once

#include <functional>
#include <span>

namespace hocc::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

/// Step and order limits for the centered Grünwald–Letnikov stencil.
struct GlConfig {
  double step = 1e-3;
  int max_order = 8;

  /// Throws DomainError unless 0 < step <= 0.01 and 0 <= max_order <= 8.
  void validate() const;
};

/// Truncation control for hypergeometric series.
struct SeriesConfig {
  double rel_tol = 1e-15;
  int max_terms = 20000;

  /// Throws DomainError unless rel_tol in (0, 1e-6] and max_terms >= 200.
  void validate() const;
};

// --- gamma family --------------------------------------------------------

double ln_gamma(double x);
double gamma(double x);

/// psi_m(x) = (d/dx)^{m+1} ln Gamma(x), x > 0.
double polygamma(int m, double x);
double digamma(double x);

// --- error function ------------------------------------------------------

double erf(double x);
double erf_inv(double y);

// --- modified Bessel function of the first kind --------------------------

/// I_nu(x) for nu >= -1, x >= 0. Throws OverflowError when the result is not
/// representable as a double.
double bessel_i(double nu, double x);

/// exp(-x) I_nu(x); finite for every x >= 0.
double bessel_i_scaled(double nu, double x);

/// ln I_nu(x). Returns -inf at x = 0 for nu > 0.
double log_bessel_i(double nu, double x);

/// ln[ I_nu(x) / (x/2)^nu ]. Finite at x = 0, where it equals -ln Gamma(nu+1).
/// Used by densities whose Bessel factor is paired with a compensating power.
double log_bessel_i_normalized(double nu, double x);

// --- generalized hypergeometric series -----------------------------------

double pfq(std::span<const double> a, std::span<const double> b, double x,
           const SeriesConfig& cfg = {});

/// Mixed derivative of pFq:
///   prod_i d^{m_i}/da_i^{m_i}  prod_j d^{n_j}/db_j^{n_j}  d^k/dx^k  pFq(a; b; x).
/// Orders are evaluated term-wise and exactly; `m` and `n` must match the sizes
/// of `a` and `b` (empty spans mean all zero).
double hod_pfq(std::span<const double> a, std::span<const double> b, double x,
               std::span<const int> m, std::span<const int> n, int k,
               const SeriesConfig& cfg = {});

// --- higher-order derivatives of Gamma(a+bk) and exp(a+bk^2) -------------

/// Complete Bell polynomial B_n(g_1, ..., g_n), n = g.size(); B_0 = 1.
double complete_bell(std::span<const double> g);

/// (d/dk)^n Gamma(a + b k).
double psi_n(int n, double a, double b, double k);

/// psi_n(n, a, b, k) / Gamma(a + b k); finite where Gamma overflows.
double psi_n_ratio(int n, double a, double b, double k);

/// (d/dk)^n exp(a + b k^2).
double phi_n(int n, double a, double b, double k);

/// Centered Grünwald–Letnikov estimate of the `order`-th derivative of f at
/// `at`:
///   1/(2 eps^k) sum_{j=0}^{k} (-1)^j C(k,j) [(-1)^k f(at + j eps) + f(at - j eps)].
double gl_derivative(const std::function<double(double)>& f, double at, int order,
                     const GlConfig& cfg = {});

// --- extended incomplete gamma -------------------------------------------

/// Gamma(alpha, x; b, beta) = int_x^inf r^{alpha-1} exp(-r - b r^{-beta}) dr.
double ext_inc_gamma(double alpha, double x, double b, double beta, double rel_tol = 1e-10);

/// Binomial coefficient as a double.
double binomial(int n, int k);

}  // namespace hocc::specfun
