#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hocc {

struct GeneralizedNakagami {
  double m = 1.0;   // fading figure, >= 0.5
  double xi = 1.0;  // shaping parameter, > 0
};

struct Nakagami {
  double m = 1.0;
};

struct Rayleigh {};

struct Weibull {
  double xi = 1.0;
};

// Nakagami m = 1/2, the worst-case fading.
struct OneSidedGaussian {};

// Location is derived from the mean SNR.
struct Lognormal {
  double sigma_db = 6.0;
};

// Extended generalized-K: fading (m, xi) on top of shadowing (m_s, xi_s).
struct Egk {
  double m = 1.0;
  double xi = 1.0;
  double m_s = 1.0;
  double xi_s = 1.0;
};

struct KappaMu {
  double kappa = 0.0;
  double mu = 1.0;
};

// format 1: 0 < eta < inf; format 2: -1 < eta < 1.
struct EtaMu {
  double eta = 0.5;
  double mu = 1.0;
  int format = 2;
};

// No fading: gamma equals its mean with probability one.
struct Awgn {};

using FadingModel = std::variant<GeneralizedNakagami, Nakagami, Rayleigh, Weibull,
                                 OneSidedGaussian, Lognormal, Egk, KappaMu, EtaMu, Awgn>;

class MeanSnr {
 public:
  /// Linear mean SNR; throws DomainError unless value > 0 and finite.
  explicit MeanSnr(double linear);

  static MeanSnr from_db(double db);

  double value() const noexcept { return value_; }
  double db() const noexcept;

 private:
  double value_;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Evenly spaced points in dB, stored linearly.
class SnrGrid {
 public:
  /// Throws DomainError unless points >= 2 and start_db < stop_db.
  static SnrGrid linspace_db(double start_db, double stop_db, std::size_t points);

  explicit SnrGrid(std::vector<MeanSnr> points);

  const std::vector<MeanSnr>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const MeanSnr& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<MeanSnr> points_;
};

/// Throws DomainError when a parameter is outside its family's range.
void validate(const FadingModel& model);

/// Canonical spec string, e.g. "gnak:m=2.5,xi=0.7". Round-trips through parse_model.
std::string to_string(const FadingModel& model);

/// Parse `name:key=val,...`. Names: gnak, nak, ray, wei, osg, logn, egk, kmu,
/// emu, awgn (alias awgn-proxy). Throws ParseError with a 1-based column on
/// malformed text, DomainError on out-of-range values.
FadingModel parse_model(std::string_view spec);

/// Gamma(m + 1/xi) / Gamma(m).
double gnak_beta(double m, double xi);

/// (h, H) of the eta-mu density for the model's format.
struct EtaMuShape {
  double h;
  double big_h;
};
EtaMuShape eta_mu_shape(const EtaMu& model);

/// Density of the instantaneous SNR. For Awgn the density is a point mass and
/// this throws UnsupportedModelError.
double pdf(const FadingModel& model, double gamma, MeanSnr mean);

double cdf(const FadingModel& model, double gamma, MeanSnr mean);

/// ln(E[gamma^n] / mean^n), which does not depend on the mean.
double log_moment_ratio(const FadingModel& model, double n);

/// E[gamma^n]. Throws DomainError where the moment does not exist.
double moment(const FadingModel& model, double n, MeanSnr mean);

/// Exponent a with pdf(g) ~ g^(a-1) as g -> 0 (drives the quadrature map near 0).
double origin_exponent(const FadingModel& model);

/// `count` i.i.d. draws of gamma; identical for identical seeds.
std::vector<double> sample(const FadingModel& model, MeanSnr mean, std::size_t count,
                           std::uint64_t seed);

}  // namespace hocc
