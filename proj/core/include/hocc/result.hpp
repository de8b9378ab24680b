#pragma once

#include <string_view>

namespace hocc {

enum class Method { Quadrature, MonteCarlo, HighAsymptote, LowAsymptote, Jensen };

/// "quadrature", "mc", "high", "low", "jensen"
std::string_view to_string(Method method);

/// A capacity statistic in nats^n.
struct HoccResult {
  double value = 0.0;
  Method method = Method::Quadrature;
  double error = 0.0;  // quadrature error estimate or MC standard error; 0 for closed forms
};

}  // namespace hocc
