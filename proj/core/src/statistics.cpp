#include "hocc/statistics.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "hocc/error.hpp"

namespace hocc {
namespace {

using specfun::binomial;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sign(int p) { return p % 2 == 0 ? 1.0 : -1.0; }

double multinomial(int k, int i, int j) {
  return binomial(k, i) * binomial(k - i, j);
}

// k-th derivative at n = 0 of Gamma(m + n/xi)/Gamma(m) * exp(-n ln beta), without the -1.
double gn_shifted(double m, double xi, int k) {
  const double lb = std::log(gnak_beta(m, xi));
  double s = 0.0;
  for (int j = 0; j <= k; ++j) {
    s += sign(j) * binomial(k, j) * specfun::psi_n_ratio(k - j, m, 1.0 / xi, 0.0) * std::pow(lb, j);
  }
  return s;
}

double lognormal_shifted(double sigma_db, int k) {
  const double kappa = 10.0 / std::log(10.0);
  const double s = sigma_db * sigma_db / (2.0 * kappa * kappa);
  double out = 0.0;
  for (int j = 0; j <= k; ++j) {
    out += sign(j) * binomial(k, j) * specfun::phi_n(k - j, j * std::log(s), s, 0.0);
  }
  return out;
}

double egk_shifted(const Egk& e, int k) {
  const double l = std::log(gnak_beta(e.m, e.xi) * gnak_beta(e.m_s, e.xi_s));
  double out = 0.0;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      const int r = k - i - j;
      out += sign(r) * multinomial(k, i, j) * specfun::psi_n_ratio(i, e.m, 1.0 / e.xi, 0.0) *
             specfun::psi_n_ratio(j, e.m_s, 1.0 / e.xi_s, 0.0) * std::pow(l, r);
    }
  }
  return out;
}

double kappa_mu_shifted(const KappaMu& km, int k) {
  const double l = std::log((km.kappa + 1.0) * km.mu);
  const double a[] = {0.0};
  const double b[] = {km.mu};
  double out = 0.0;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) {
      const int r = k - i - j;
      const int orders[] = {r};
      const double h = specfun::hod_pfq(a, b, -km.kappa * km.mu, orders, {}, 0);
      out += sign(j + r) * multinomial(k, i, j) * specfun::psi_n_ratio(i, km.mu, 1.0, 0.0) *
             std::pow(l, j) * h;
    }
  }
  return out;
}

void check_order(int max_order) {
  if (max_order < 0) throw DomainError("coefficient order must be >= 0");
}

}  // namespace

std::string_view to_string(CoeffMethod method) {
  return method == CoeffMethod::ClosedForm ? "closed-form" : "gl-numeric";
}

double aof(const FadingModel& model, double n) {
  if (n == 0.0 || n == 1.0) {
    validate(model);
    return 0.0;
  }
  return std::expm1(log_moment_ratio(model, n));
}

double aof(const FadingModel& model, double n, MeanSnr) { return aof(model, n); }

double mu_hat(const FadingModel& model, double n, MeanSnr) {
  return std::exp(log_moment_ratio(model, n));
}

bool has_closed_mu(const FadingModel& model) { return !std::holds_alternative<EtaMu>(model); }

AuxCoefficients mu_coeffs_closed(const FadingModel& model, int max_order) {
  validate(model);
  check_order(max_order);
  if (!has_closed_mu(model)) {
    throw UnsupportedModelError("closed-form mu_k is not available for " + to_string(model));
  }
  AuxCoefficients out{{}, CoeffMethod::ClosedForm, model};
  out.values.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (std::holds_alternative<Awgn>(model)) return out;
  for (int k = 1; k <= max_order; ++k) {
    out.values[k] = std::visit(
        Overloaded{
            [k](const GeneralizedNakagami& g) { return gn_shifted(g.m, g.xi, k); },
            [k](const Nakagami& g) { return gn_shifted(g.m, 1.0, k); },
            [k](const Rayleigh&) { return gn_shifted(1.0, 1.0, k); },
            [k](const Weibull& g) { return gn_shifted(1.0, g.xi, k); },
            [k](const OneSidedGaussian&) { return gn_shifted(0.5, 1.0, k); },
            [k](const Lognormal& g) { return lognormal_shifted(g.sigma_db, k); },
            [k](const Egk& g) { return egk_shifted(g, k); },
            [k](const KappaMu& g) { return kappa_mu_shifted(g, k); },
            [](const auto&) -> double { throw UnsupportedModelError("closed-form mu_k"); },
        },
        model);
  }
  return out;
}

AuxCoefficients mu_coeffs_gl(const FadingModel& model, int max_order,
                             const specfun::GlConfig& cfg) {
  validate(model);
  check_order(max_order);
  AuxCoefficients out{{}, CoeffMethod::GlNumeric, model};
  const auto f = [&model](double n) { return aof(model, n); };
  for (int k = 0; k <= max_order; ++k) {
    out.values.push_back(specfun::gl_derivative(f, 0.0, k, cfg));
  }
  return out;
}

AuxCoefficients mu_coeffs(const FadingModel& model, int max_order, const specfun::GlConfig& cfg) {
  if (has_closed_mu(model)) return mu_coeffs_closed(model, max_order);
  return mu_coeffs_gl(model, max_order, cfg);
}

}  // namespace hocc
