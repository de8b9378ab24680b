#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hocc/fading.hpp"
#include "hocc/result.hpp"

namespace hocc {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  unsigned max_subdivisions = 2000;

  /// Throws DomainError unless rel_tol in (0, 1e-4] and max_subdivisions >= 10.
  void validate() const;
};

struct McConfig {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 20160401;
  std::size_t batch = 1 << 16;
  unsigned threads = 0;  // 0 = all cores

  /// Throws DomainError unless samples >= 1e4 and batch >= 1.
  void validate() const;
};

/// E[ln^n(1 + g)] by adaptive quadrature of the density.
HoccResult hocc_quadrature(const FadingModel& model, int n, MeanSnr mean,
                           const QuadratureConfig& cfg = {});

/// Sample mean of ln^n(1 + g) with its standard error.
HoccResult hocc_monte_carlo(const FadingModel& model, int n, MeanSnr mean,
                            const McConfig& cfg = {});

/// Orders 1..max_order from one shared sample stream; element i is order i+1
/// and equals hocc_monte_carlo(model, i+1, mean, cfg).
std::vector<HoccResult> hocc_monte_carlo_orders(const FadingModel& model, int max_order,
                                                MeanSnr mean, const McConfig& cfg = {});

/// Seed of Monte Carlo batch `index`.
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hocc
