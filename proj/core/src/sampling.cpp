#include <cmath>
#include <numbers>
#include <random>
#include <variant>

#include "hocc/error.hpp"
#include "hocc/fading.hpp"

namespace hocc {
namespace {

constexpr double kKappaDb = 10.0 / std::numbers::ln10;

using Rng = std::mt19937_64;

double gamma_variate(Rng& rng, double shape, double scale) {
  return std::gamma_distribution<double>(shape, scale)(rng);
}

bool is_integral(double v) { return v == std::floor(v); }

// sum of `count` squared N(0, var) draws plus one extra shifted mean
double gaussian_power(Rng& rng, int count, double var, double shift) {
  std::normal_distribution<double> normal(0.0, std::sqrt(var));
  double s = 0.0;
  for (int i = 0; i < count; ++i) {
    const double x = normal(rng) + (i == 0 ? shift : 0.0);
    s += x * x;
  }
  return s;
}

double draw(Rng& rng, const GeneralizedNakagami& g, double gbar) {
  const double u = gamma_variate(rng, g.m, 1.0);
  return gbar / gnak_beta(g.m, g.xi) * std::pow(u, 1.0 / g.xi);
}

double draw(Rng& rng, const Nakagami& g, double gbar) {
  return draw(rng, GeneralizedNakagami{g.m, 1.0}, gbar);
}

double draw(Rng& rng, const Rayleigh&, double gbar) {
  return std::exponential_distribution<double>(1.0 / gbar)(rng);
}

double draw(Rng& rng, const Weibull& g, double gbar) {
  return draw(rng, GeneralizedNakagami{1.0, g.xi}, gbar);
}

double draw(Rng& rng, const OneSidedGaussian&, double gbar) {
  const double z = std::normal_distribution<double>(0.0, 1.0)(rng);
  return gbar * z * z;
}

double draw(Rng& rng, const Lognormal& g, double gbar) {
  const double s = g.sigma_db * g.sigma_db / (2.0 * kKappaDb * kKappaDb);
  const double mu_db = kKappaDb * (std::log(gbar) - s);
  const double z = std::normal_distribution<double>(0.0, 1.0)(rng);
  return std::exp((mu_db + g.sigma_db * z) / kKappaDb);
}

double draw(Rng& rng, const Egk& g, double gbar) {
  const double u = gamma_variate(rng, g.m, 1.0);
  const double v = gamma_variate(rng, g.m_s, 1.0);
  const double c = gbar / (gnak_beta(g.m, g.xi) * gnak_beta(g.m_s, g.xi_s));
  return c * std::pow(u, 1.0 / g.xi) * std::pow(v, 1.0 / g.xi_s);
}

// 2 mu Gaussian components of variance s2, dominant power kappa * 2 mu s2.
double draw(Rng& rng, const KappaMu& g, double gbar) {
  const double s2 = gbar / (2.0 * g.mu * (1.0 + g.kappa));
  const double dof = 2.0 * g.mu;
  if (is_integral(dof) && dof <= 64.0) {
    const double shift = std::sqrt(dof * g.kappa * s2);
    return gaussian_power(rng, static_cast<int>(dof), s2, shift);
  }
  // noncentral chi-square as a Poisson mixture of central ones
  const double lambda = g.mu * g.kappa;
  const double j = lambda > 0.0 ? static_cast<double>(std::poisson_distribution<long>(lambda)(rng)) : 0.0;
  return s2 * gamma_variate(rng, g.mu + j, 2.0);
}

// in-phase and quadrature powers of 2 mu clusters with unequal variances
double draw(Rng& rng, const EtaMu& g, double gbar) {
  const double v = gbar / (2.0 * g.mu);
  double vx;
  double vy;
  if (g.format == 1) {
    vx = v * g.eta / (1.0 + g.eta);
    vy = v / (1.0 + g.eta);
  } else {
    vx = 0.5 * v * (1.0 + g.eta);
    vy = 0.5 * v * (1.0 - g.eta);
  }
  const double dof = 2.0 * g.mu;
  if (is_integral(dof) && dof <= 64.0) {
    const int n = static_cast<int>(dof);
    return gaussian_power(rng, n, vx, 0.0) + gaussian_power(rng, n, vy, 0.0);
  }
  return gamma_variate(rng, g.mu, 2.0 * vx) + gamma_variate(rng, g.mu, 2.0 * vy);
}

double draw(Rng&, const Awgn&, double gbar) { return gbar; }

}  // namespace

std::vector<double> sample(const FadingModel& model, MeanSnr mean, std::size_t count,
                           std::uint64_t seed) {
  validate(model);
  if (count == 0) throw DomainError("sample: count must be >= 1");
  Rng rng(seed);
  std::vector<double> out(count);
  std::visit(
      [&](const auto& m) {
        for (auto& x : out) x = draw(rng, m, mean.value());
      },
      model);
  return out;
}

}  // namespace hocc
