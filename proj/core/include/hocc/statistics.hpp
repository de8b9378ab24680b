#pragma once

#include <string_view>
#include <vector>

#include "hocc/fading.hpp"
#include "hocc/specfun.hpp"

namespace hocc {

enum class CoeffMethod { ClosedForm, GlNumeric };

std::string_view to_string(CoeffMethod method);

/// mu_0 .. mu_K, the derivatives of n -> AF_n at n = 0.
struct AuxCoefficients {
  std::vector<double> values;
  CoeffMethod method = CoeffMethod::ClosedForm;
  FadingModel model;

  std::size_t max_order() const { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t k) const { return values.at(k); }
};

/// AF_n = E[g^n] / E[g]^n - 1 (does not depend on the mean).
double aof(const FadingModel& model, double n);
double aof(const FadingModel& model, double n, MeanSnr mean);

/// mu_hat_n = AF_n + 1 = E[g^n] / mean^n.
double mu_hat(const FadingModel& model, double n, MeanSnr mean);

/// True when mu_coeffs_closed handles the model.
bool has_closed_mu(const FadingModel& model);

/// Closed forms through Psi/Phi/HOD-GH. Throws UnsupportedModelError for EtaMu.
AuxCoefficients mu_coeffs_closed(const FadingModel& model, int max_order);

/// Centered Grunwald-Letnikov stencil applied to n -> AF_n.
AuxCoefficients mu_coeffs_gl(const FadingModel& model, int max_order,
                             const specfun::GlConfig& cfg = {});

/// Closed form when available, GL otherwise.
AuxCoefficients mu_coeffs(const FadingModel& model, int max_order,
                          const specfun::GlConfig& cfg = {});

}  // namespace hocc
