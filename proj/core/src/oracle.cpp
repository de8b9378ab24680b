#include "hocc/oracle.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "detail.hpp"
#include "hocc/error.hpp"
#include "hocc/parallel.hpp"

namespace hocc {
namespace {

void check_n(int n) {
  if (n < 1) throw DomainError("capacity order n must be >= 1, got " + std::to_string(n));
}

// per-batch running mean and sum of squared deviations (Welford / Chan)
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double d = x - mean;
    mean += d / count;
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    const double d = o.mean - mean;
    mean += d * o.count / total;
    m2 += o.m2 + d * d * count * o.count / total;
    count = total;
  }
};

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4)) {
    throw DomainError("QuadratureConfig.rel_tol must lie in (0, 1e-4], got " +
                      std::to_string(rel_tol));
  }
  if (max_subdivisions < 10) throw DomainError("QuadratureConfig.max_subdivisions must be >= 10");
}

void McConfig::validate() const {
  if (samples < 10000) {
    throw DomainError("McConfig.samples must be >= 10000, got " + std::to_string(samples));
  }
  if (batch < 1) throw DomainError("McConfig.batch must be >= 1");
}

std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser of seed ^ golden-ratio-spread index
  std::uint64_t z = seed ^ (index * 0x9E3779B97F4A7C15ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

HoccResult hocc_quadrature(const FadingModel& model, int n, MeanSnr mean,
                           const QuadratureConfig& cfg) {
  validate(model);
  cfg.validate();
  check_n(n);
  if (std::holds_alternative<Awgn>(model)) {
    return {std::pow(std::log1p(mean.value()), n), Method::Quadrature, 0.0};
  }
  const auto f = [n](double g) { return std::pow(std::log1p(g), n); };
  double err = 0.0;
  const double v = detail::integrate_against_pdf(model, mean, f, INFINITY, cfg.rel_tol,
                                                 cfg.max_subdivisions, &err);
  return {v, Method::Quadrature, err};
}

std::vector<HoccResult> hocc_monte_carlo_orders(const FadingModel& model, int max_order,
                                                MeanSnr mean, const McConfig& cfg) {
  validate(model);
  cfg.validate();
  check_n(max_order);
  const std::size_t batches = (cfg.samples + cfg.batch - 1) / cfg.batch;
  const std::size_t orders = static_cast<std::size_t>(max_order);
  std::vector<std::vector<Moments>> partial(batches, std::vector<Moments>(orders));

  parallel_for(
      batches,
      [&](std::size_t b) {
        const std::size_t count = std::min(cfg.batch, cfg.samples - b * cfg.batch);
        const auto draws = sample(model, mean, count, batch_seed(cfg.seed, b));
        auto& acc = partial[b];
        for (double g : draws) {
          const double l = std::log1p(g);
          double p = 1.0;
          for (std::size_t k = 0; k < orders; ++k) {
            p *= l;
            acc[k].add(p);
          }
        }
      },
      cfg.threads);

  std::vector<HoccResult> out;
  for (std::size_t k = 0; k < orders; ++k) {
    Moments total;
    for (std::size_t b = 0; b < batches; ++b) total.merge(partial[b][k]);
    const double var = total.count > 1.0 ? total.m2 / (total.count - 1.0) : 0.0;
    out.push_back({total.mean, Method::MonteCarlo, std::sqrt(var / total.count)});
  }
  return out;
}

HoccResult hocc_monte_carlo(const FadingModel& model, int n, MeanSnr mean, const McConfig& cfg) {
  check_n(n);
  return hocc_monte_carlo_orders(model, n, mean, cfg).back();
}

}  // namespace hocc
