#pragma once

#include <functional>
#include <vector>

#include "hocc/fading.hpp"

namespace hocc::detail {

/// Breakpoints in (0, inf) for integrating against the pdf: gbar/100, gbar,
/// 100 gbar, plus gbar (1 +/- j cv) for j = 1..4 when they are positive.
std::vector<double> pdf_breaks(const FadingModel& model, MeanSnr mean);

/// int_0^upper f(g) pdf(g) dg with g = u^q near the origin so that the
/// g^(a-1) singularity of the pdf is removed. `upper` may be +inf.
double integrate_against_pdf(const FadingModel& model, MeanSnr mean,
                             const std::function<double(double)>& f, double upper,
                             double rel_tol, unsigned max_intervals, double* error = nullptr);

}  // namespace hocc::detail
