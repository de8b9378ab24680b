#include "hocc/asymptotics.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "hocc/error.hpp"
#include "hocc/specfun.hpp"

namespace hocc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_n(int n) {
  if (n < 1) throw DomainError("capacity order n must be >= 1, got " + std::to_string(n));
}

double gn_offset(double m, double xi) {
  return specfun::digamma(m) / xi - std::log(gnak_beta(m, xi));
}

// mu_1 per family in its simplest closed expression
double acc_offset(const FadingModel& model) {
  using specfun::digamma;
  constexpr double e = specfun::kEulerGamma;
  return std::visit(
      Overloaded{
          [](const GeneralizedNakagami& g) { return gn_offset(g.m, g.xi); },
          [](const Nakagami& g) { return digamma(g.m) - std::log(g.m); },
          [](const Rayleigh&) { return -e; },
          [](const Weibull& g) { return -std::lgamma(1.0 + 1.0 / g.xi) - e / g.xi; },
          [](const OneSidedGaussian&) { return gn_offset(0.5, 1.0); },
          [](const Lognormal& g) {
            const double kappa = 10.0 / std::log(10.0);
            return -g.sigma_db * g.sigma_db / (2.0 * kappa * kappa);
          },
          [](const Egk& g) {
            return -std::log(gnak_beta(g.m, g.xi) * gnak_beta(g.m_s, g.xi_s)) +
                   digamma(g.m) / g.xi + digamma(g.m_s) / g.xi_s;
          },
          [](const KappaMu& g) {
            const double a[] = {0.0};
            const double b[] = {g.mu};
            const int orders[] = {1};
            return digamma(g.mu) - std::log((g.kappa + 1.0) * g.mu) -
                   specfun::hod_pfq(a, b, -g.kappa * g.mu, orders, {}, 0);
          },
          [&model](const EtaMu&) { return mu_coeffs_gl(model, 1)[1]; },
          [](const Awgn&) { return 0.0; },
      },
      model);
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Quadrature: return "quadrature";
    case Method::MonteCarlo: return "mc";
    case Method::HighAsymptote: return "high";
    case Method::LowAsymptote: return "low";
    case Method::Jensen: return "jensen";
  }
  return "unknown";
}

HoccResult hocc_high(int n, MeanSnr mean, const AuxCoefficients& coeffs) {
  check_n(n);
  if (coeffs.values.size() < static_cast<std::size_t>(n) + 1) {
    throw DomainError("hocc_high: need mu_0..mu_" + std::to_string(n) + ", have " +
                      std::to_string(coeffs.values.size()) + " coefficients");
  }
  const double l = std::log(mean.value());
  double v = std::pow(l, n);
  for (int k = 0; k <= n; ++k) {
    v += specfun::binomial(n, k) * coeffs.values[k] * std::pow(l, n - k);
  }
  return {v, Method::HighAsymptote, 0.0};
}

HoccResult hocc_high(const FadingModel& model, int n, MeanSnr mean) {
  check_n(n);
  return hocc_high(n, mean, mu_coeffs(model, n));
}

HoccResult acc_high(const FadingModel& model, MeanSnr mean) {
  validate(model);
  return {std::log(mean.value()) + acc_offset(model), Method::HighAsymptote, 0.0};
}

HoccResult acc_high(MeanSnr mean, const AuxCoefficients& coeffs) {
  return hocc_high(1, mean, coeffs);
}

HoccResult hocc_low(const FadingModel& model, int n, MeanSnr mean) {
  check_n(n);
  if (n == 1) {
    validate(model);
    return {mean.value(), Method::LowAsymptote, 0.0};
  }
  return {moment(model, n, mean), Method::LowAsymptote, 0.0};
}

HoccResult jensen_high(int n, MeanSnr mean) {
  check_n(n);
  return {std::pow(std::log(mean.value()), n), Method::Jensen, 0.0};
}

double capacity_gap(int n, MeanSnr mean, Regime regime, const AuxCoefficients& coeffs) {
  check_n(n);
  double model_value;
  double awgn_value;
  if (regime == Regime::High) {
    model_value = hocc_high(n, mean, coeffs).value;
    awgn_value = jensen_high(n, mean).value;
  } else {
    model_value = hocc_low(coeffs.model, n, mean).value;
    awgn_value = std::pow(mean.value(), n);
  }
  if (!(model_value > 0.0) || !(awgn_value > 0.0)) {
    throw DomainError("capacity_gap: capacities must be positive (model " +
                      std::to_string(model_value) + ", awgn " + std::to_string(awgn_value) + ")");
  }
  if (regime == Regime::High) return std::log(awgn_value / model_value);
  return std::log(model_value / awgn_value);
}

double capacity_gap(const FadingModel& model, int n, MeanSnr mean, Regime regime) {
  check_n(n);
  if (regime == Regime::Low) {
    return capacity_gap(n, mean, regime, AuxCoefficients{{0.0}, CoeffMethod::ClosedForm, model});
  }
  return capacity_gap(n, mean, regime, mu_coeffs(model, n));
}

double vertical_offset(const AuxCoefficients& coeffs) {
  if (coeffs.values.size() < 2) throw DomainError("vertical_offset: mu_1 is missing");
  return -coeffs.values[1];
}

}  // namespace hocc
