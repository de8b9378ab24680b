#pragma once

#include "hocc/fading.hpp"
#include "hocc/result.hpp"
#include "hocc/statistics.hpp"

namespace hocc {

enum class Regime { High, Low };

/// ln^n(mean) + sum_k C(n,k) mu_k ln^{n-k}(mean); needs coeffs up to order n.
HoccResult hocc_high(int n, MeanSnr mean, const AuxCoefficients& coeffs);
HoccResult hocc_high(const FadingModel& model, int n, MeanSnr mean);

/// ln(mean) + mu_1, using the per-family closed expressions where they exist.
HoccResult acc_high(const FadingModel& model, MeanSnr mean);
HoccResult acc_high(MeanSnr mean, const AuxCoefficients& coeffs);

/// mu_hat_n mean^n.
HoccResult hocc_low(const FadingModel& model, int n, MeanSnr mean);

/// ln^n(mean).
HoccResult jensen_high(int n, MeanSnr mean);

/// High: ln(jensen / hocc_high). Low: ln(hocc_low / mean^n), mean^n being the AWGN low asymptote.
/// Throws DomainError if either capacity is not positive.
double capacity_gap(const FadingModel& model, int n, MeanSnr mean, Regime regime);
double capacity_gap(int n, MeanSnr mean, Regime regime, const AuxCoefficients& coeffs);

/// ln(mean) - (ln(mean) + mu_1) = -mu_1: the n = 1 distance to the AWGN asymptote.
double vertical_offset(const AuxCoefficients& coeffs);

}  // namespace hocc
