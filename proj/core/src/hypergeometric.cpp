#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hocc/error.hpp"
#include "hocc/specfun.hpp"

namespace hocc::specfun {
namespace {

// Truncated Taylor series in a perturbation e, stored with a shared log scale
// so that Pochhammer growth never overflows.
struct Factor {
  std::vector<double> c;
  double log_scale = 0.0;

  explicit Factor(int order) : c(static_cast<std::size_t>(order) + 1, 0.0) { c[0] = 1.0; }

  void renormalize() {
    double peak = 0.0;
    for (double v : c) peak = std::max(peak, std::abs(v));
    if (peak > 1e100 || (peak > 0.0 && peak < 1e-100)) {
      for (double& v : c) v /= peak;
      log_scale += std::log(peak);
    }
  }

  // (s + e)_j -> (s + e)_{j+1}: multiply by (s + j + e).
  void times_linear(double shift) {
    for (std::size_t d = c.size(); d-- > 0;) {
      c[d] = shift * c[d] + (d > 0 ? c[d - 1] : 0.0);
    }
    renormalize();
  }

  // multiply by 1 / (shift + e) = sum_r (-1)^r e^r / shift^{r+1}
  void over_linear(double shift) {
    const std::size_t n = c.size();
    std::vector<double> inv(n);
    double p = 1.0 / shift;
    for (std::size_t r = 0; r < n; ++r) {
      inv[r] = (r % 2 == 0) ? p : -p;
      p /= shift;
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t r = 0; r <= d; ++r) out[d] += c[d - r] * inv[r];
    }
    c = std::move(out);
    renormalize();
  }

  void scale(double s) {
    for (double& v : c) v *= s;
    renormalize();
  }

  double top() const { return c.back(); }
};

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

std::vector<int> orders_or_zero(std::span<const int> orders, std::size_t size, const char* what) {
  if (orders.empty()) return std::vector<int>(size, 0);
  if (orders.size() != size) {
    throw DomainError(std::string("hod_pfq: ") + what + " orders must match the parameter count");
  }
  for (int o : orders) {
    if (o < 0) throw DomainError("hod_pfq: derivative orders must be >= 0");
  }
  return {orders.begin(), orders.end()};
}

}  // namespace

double hod_pfq(std::span<const double> a, std::span<const double> b, double x,
               std::span<const int> m, std::span<const int> n, int k, const SeriesConfig& cfg) {
  cfg.validate();
  if (k < 0) throw DomainError("hod_pfq: argument derivative order must be >= 0");
  const std::vector<int> ma = orders_or_zero(m, a.size(), "upper");
  const std::vector<int> nb = orders_or_zero(n, b.size(), "lower");

  for (double bl : b) {
    if (is_nonpositive_integer(bl)) {
      throw PoleError("pfq: lower parameter " + std::to_string(bl) + " is a non-positive integer");
    }
  }

  // A term (a_i)_j with no derivative taken vanishes for j > -a_i.
  long last = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ma[i] == 0 && is_nonpositive_integer(a[i])) {
      const long cut = static_cast<long>(-a[i]);
      last = last < 0 ? cut : std::min(last, cut);
    }
  }
  const bool terminating = last >= 0;
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  if (!terminating) {
    if (p == q + 1 && !(std::abs(x) < 1.0)) {
      throw DivergenceError("pfq: p = q + 1 requires |x| < 1, got x = " + std::to_string(x));
    }
    if (p > q + 1 && x != 0.0) {
      throw DivergenceError("pfq: series diverges for p > q + 1");
    }
  }
  if (terminating && last < k) return 0.0;

  std::vector<Factor> up;
  std::vector<Factor> down;
  double derivative_weight = 1.0;
  for (std::size_t i = 0; i < p; ++i) {
    up.emplace_back(ma[i]);
    derivative_weight *= std::tgamma(ma[i] + 1.0);
  }
  for (std::size_t l = 0; l < q; ++l) {
    down.emplace_back(nb[l]);
    derivative_weight *= std::tgamma(nb[l] + 1.0);
  }
  Factor power(0);  // x^{j-k} / (j-k)!, only read once j >= k

  auto term_value = [&]() {
    double log_mag = power.log_scale;
    double sign = 1.0;
    auto absorb = [&](const Factor& f) {
      const double t = f.top();
      if (t == 0.0) return false;
      sign *= t < 0.0 ? -1.0 : 1.0;
      log_mag += f.log_scale + std::log(std::abs(t));
      return true;
    };
    if (!absorb(power)) return 0.0;
    for (const auto& f : up) {
      if (!absorb(f)) return 0.0;
    }
    for (const auto& f : down) {
      if (!absorb(f)) return 0.0;
    }
    return sign * derivative_weight * std::exp(log_mag);
  };

  // leading terms of high-order parameter derivatives are exactly zero
  long j_min = k + 2;
  for (int o : ma) j_min += o;

  const double tail_factor = (p == q + 1) ? 1.0 / (1.0 - std::abs(x)) : 1.0;
  double sum = 0.0;
  double prev = 0.0;
  int quiet = 0;
  for (long j = 0;; ++j) {
    if (j >= cfg.max_terms) {
      throw ConvergenceError("pfq: no convergence within " + std::to_string(cfg.max_terms) +
                             " terms");
    }
    const double term = (j >= k) ? term_value() : 0.0;
    if (!std::isfinite(term)) throw OverflowError("pfq: series term overflowed");
    sum += term;

    if (terminating && j >= last) break;
    if (x == 0.0 && j >= k) break;
    if (j >= j_min) {
      const bool small = std::abs(term) * tail_factor <= cfg.rel_tol * std::abs(sum) + 1e-300;
      const bool shrinking = std::abs(term) <= std::abs(prev);
      quiet = (small && shrinking) ? quiet + 1 : 0;
      if (quiet >= 3) break;
    }
    prev = term;

    const double jd = static_cast<double>(j);
    for (std::size_t i = 0; i < p; ++i) up[i].times_linear(a[i] + jd);
    for (std::size_t l = 0; l < q; ++l) down[l].over_linear(b[l] + jd);
    if (j + 1 > k) power.scale(x / static_cast<double>(j + 1 - k));
  }
  if (!std::isfinite(sum)) throw OverflowError("pfq: sum overflowed");
  return sum;
}

double pfq(std::span<const double> a, std::span<const double> b, double x,
           const SeriesConfig& cfg) {
  return hod_pfq(a, b, x, {}, {}, 0, cfg);
}

}  // namespace hocc::specfun
