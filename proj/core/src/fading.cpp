#include "hocc/fading.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "detail.hpp"
#include "hocc/error.hpp"
#include "hocc/quadrature.hpp"
#include "hocc/specfun.hpp"

namespace hocc {
namespace {

constexpr double kKappaDb = 10.0 / std::numbers::ln10;  // dB per neper of power

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

bool finite_all(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double v) { return std::isfinite(v); });
}

// c * ln(g) with 0 * ln(0) = 0
double xlogy(double c, double g) { return c == 0.0 ? 0.0 : c * std::log(g); }

// Everything from the generalized-Nakagami family is reduced to (m, xi).
struct GnParams {
  double m;
  double xi;
};

std::optional<GnParams> as_gn(const FadingModel& model) {
  return std::visit(
      Overloaded{
          [](const GeneralizedNakagami& g) -> std::optional<GnParams> { return GnParams{g.m, g.xi}; },
          [](const Nakagami& g) -> std::optional<GnParams> { return GnParams{g.m, 1.0}; },
          [](const Rayleigh&) -> std::optional<GnParams> { return GnParams{1.0, 1.0}; },
          [](const Weibull& g) -> std::optional<GnParams> { return GnParams{1.0, g.xi}; },
          [](const OneSidedGaussian&) -> std::optional<GnParams> { return GnParams{0.5, 1.0}; },
          [](const auto&) -> std::optional<GnParams> { return std::nullopt; },
      },
      model);
}

double gn_log_ratio(double m, double xi, double n) {
  require(m + n / xi > 0.0, "moment of order " + fmt(n) + " does not exist (m + n/xi <= 0)");
  return std::lgamma(m + n / xi) - std::lgamma(m) - n * std::log(gnak_beta(m, xi));
}

double gn_log_pdf(double m, double xi, double g, double gbar) {
  const double beta = gnak_beta(m, xi);
  const double y = beta * g / gbar;
  return std::log(xi) - std::lgamma(m) + xi * m * std::log(beta / gbar) + xlogy(xi * m - 1.0, g) -
         std::pow(y, xi);
}

double lognormal_mu_db(double sigma_db, double gbar) {
  const double s = sigma_db * sigma_db / (2.0 * kKappaDb * kKappaDb);
  return kKappaDb * (std::log(gbar) - s);
}

}  // namespace

// --- MeanSnr / SnrGrid -----------------------------------------------------

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

MeanSnr::MeanSnr(double linear) : value_(linear) {
  if (!(linear > 0.0) || !std::isfinite(linear)) {
    throw DomainError("mean SNR must be positive and finite, got " + fmt(linear));
  }
}

MeanSnr MeanSnr::from_db(double db) { return MeanSnr(db_to_linear(db)); }

double MeanSnr::db() const noexcept { return linear_to_db(value_); }

SnrGrid SnrGrid::linspace_db(double start_db, double stop_db, std::size_t points) {
  require(points >= 2, "SNR grid needs at least 2 points");
  require(start_db < stop_db, "SNR grid needs start < stop");
  std::vector<MeanSnr> out;
  out.reserve(points);
  const double step = (stop_db - start_db) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double db = (i + 1 == points) ? stop_db : start_db + step * static_cast<double>(i);
    out.push_back(MeanSnr::from_db(db));
  }
  return SnrGrid(std::move(out));
}

SnrGrid::SnrGrid(std::vector<MeanSnr> points) : points_(std::move(points)) {
  require(!points_.empty(), "SNR grid is empty");
}

// --- parameters ------------------------------------------------------------

double gnak_beta(double m, double xi) {
  return std::exp(std::lgamma(m + 1.0 / xi) - std::lgamma(m));
}

EtaMuShape eta_mu_shape(const EtaMu& e) {
  if (e.format == 1) {
    return {(2.0 + 1.0 / e.eta + e.eta) / 4.0, (1.0 / e.eta - e.eta) / 4.0};
  }
  const double d = 1.0 - e.eta * e.eta;
  return {1.0 / d, e.eta / d};
}

void validate(const FadingModel& model) {
  std::visit(
      Overloaded{
          [](const GeneralizedNakagami& g) {
            require(finite_all({g.m, g.xi}), "gnak: parameters must be finite");
            require(g.m >= 0.5, "gnak: m must be >= 0.5, got " + fmt(g.m));
            require(g.xi > 0.0, "gnak: xi must be > 0, got " + fmt(g.xi));
          },
          [](const Nakagami& g) {
            require(std::isfinite(g.m) && g.m >= 0.5, "nak: m must be >= 0.5, got " + fmt(g.m));
          },
          [](const Rayleigh&) {},
          [](const Weibull& g) {
            require(std::isfinite(g.xi) && g.xi > 0.0, "wei: xi must be > 0, got " + fmt(g.xi));
          },
          [](const OneSidedGaussian&) {},
          [](const Lognormal& g) {
            require(std::isfinite(g.sigma_db) && g.sigma_db > 0.0,
                    "logn: sigma must be > 0 dB, got " + fmt(g.sigma_db));
          },
          [](const Egk& g) {
            require(finite_all({g.m, g.xi, g.m_s, g.xi_s}), "egk: parameters must be finite");
            require(g.m >= 0.5, "egk: m must be >= 0.5, got " + fmt(g.m));
            require(g.xi > 0.0, "egk: xi must be > 0, got " + fmt(g.xi));
            require(g.m_s >= 0.5, "egk: m_s must be >= 0.5, got " + fmt(g.m_s));
            require(g.xi_s > 0.0, "egk: xi_s must be > 0, got " + fmt(g.xi_s));
          },
          [](const KappaMu& g) {
            require(finite_all({g.kappa, g.mu}), "kmu: parameters must be finite");
            require(g.kappa >= 0.0, "kmu: kappa must be >= 0, got " + fmt(g.kappa));
            require(g.mu > 0.0, "kmu: mu must be > 0, got " + fmt(g.mu));
          },
          [](const EtaMu& g) {
            require(finite_all({g.eta, g.mu}), "emu: parameters must be finite");
            require(g.mu > 0.0, "emu: mu must be > 0, got " + fmt(g.mu));
            if (g.format == 1) {
              require(g.eta > 0.0, "emu: format 1 needs eta > 0, got " + fmt(g.eta));
            } else if (g.format == 2) {
              require(g.eta > -1.0 && g.eta < 1.0,
                      "emu: format 2 needs -1 < eta < 1, got " + fmt(g.eta));
            } else {
              throw DomainError("emu: format must be 1 or 2, got " + std::to_string(g.format));
            }
          },
          [](const Awgn&) {},
      },
      model);
}

std::string to_string(const FadingModel& model) {
  return std::visit(
      Overloaded{
          [](const GeneralizedNakagami& g) { return "gnak:m=" + fmt(g.m) + ",xi=" + fmt(g.xi); },
          [](const Nakagami& g) { return "nak:m=" + fmt(g.m); },
          [](const Rayleigh&) { return std::string("ray"); },
          [](const Weibull& g) { return "wei:xi=" + fmt(g.xi); },
          [](const OneSidedGaussian&) { return std::string("osg"); },
          [](const Lognormal& g) { return "logn:sigma=" + fmt(g.sigma_db); },
          [](const Egk& g) {
            return "egk:m=" + fmt(g.m) + ",xi=" + fmt(g.xi) + ",ms=" + fmt(g.m_s) +
                   ",xis=" + fmt(g.xi_s);
          },
          [](const KappaMu& g) { return "kmu:kappa=" + fmt(g.kappa) + ",mu=" + fmt(g.mu); },
          [](const EtaMu& g) {
            return "emu:eta=" + fmt(g.eta) + ",mu=" + fmt(g.mu) +
                   ",format=" + std::to_string(g.format);
          },
          [](const Awgn&) { return std::string("awgn"); },
      },
      model);
}

// --- parsing ---------------------------------------------------------------

namespace {

struct KeyValue {
  std::string key;
  double value;
  int column;  // 1-based column of the key
};

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
  throw ParseError("model spec: " + what + " at column " + std::to_string(offset + 1), 0,
                   static_cast<int>(offset + 1));
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

}  // namespace

FadingModel parse_model(std::string_view spec) {
  std::size_t begin = 0;
  std::size_t end = spec.size();
  while (begin < end && is_space(spec[begin])) ++begin;
  while (end > begin && is_space(spec[end - 1])) --end;
  if (begin == end) parse_fail("empty model name", begin);

  const std::size_t colon = spec.find(':', begin);
  const std::size_t name_end = (colon == std::string_view::npos || colon > end) ? end : colon;
  const std::string name(spec.substr(begin, name_end - begin));

  std::vector<KeyValue> kvs;
  if (name_end < end) {
    std::size_t pos = name_end + 1;
    if (pos >= end) parse_fail("expected key=value after ':'", pos);
    while (pos <= end) {
      std::size_t comma = spec.find(',', pos);
      if (comma == std::string_view::npos || comma > end) comma = end;
      std::size_t kb = pos;
      while (kb < comma && is_space(spec[kb])) ++kb;
      const std::size_t eq = spec.find('=', kb);
      if (eq == std::string_view::npos || eq >= comma) parse_fail("expected key=value", kb);
      std::size_t ke = eq;
      while (ke > kb && is_space(spec[ke - 1])) --ke;
      if (ke == kb) parse_fail("empty key", kb);
      std::size_t vb = eq + 1;
      while (vb < comma && is_space(spec[vb])) ++vb;
      std::size_t ve = comma;
      while (ve > vb && is_space(spec[ve - 1])) --ve;
      if (vb == ve) parse_fail("missing value", vb);
      double value = 0.0;
      const char* first = spec.data() + vb;
      const char* last = spec.data() + ve;
      auto res = std::from_chars(first, last, value);
      if (res.ec != std::errc() || res.ptr != last) {
        const std::size_t bad = (res.ec != std::errc()) ? vb : static_cast<std::size_t>(res.ptr - spec.data());
        parse_fail("invalid number", bad);
      }
      const std::string key(spec.substr(kb, ke - kb));
      for (const auto& kv : kvs) {
        if (kv.key == key) parse_fail("duplicate key '" + key + "'", kb);
      }
      kvs.push_back({key, value, static_cast<int>(kb + 1)});
      if (comma == end) break;
      pos = comma + 1;
      if (pos >= end) parse_fail("trailing ','", comma);
    }
  }

  // Look up one key (with optional alias); unknown keys are rejected below.
  std::vector<bool> used(kvs.size(), false);
  auto take = [&](std::initializer_list<const char*> names, std::optional<double> fallback) {
    for (std::size_t i = 0; i < kvs.size(); ++i) {
      for (const char* n : names) {
        if (kvs[i].key == n) {
          used[i] = true;
          return kvs[i].value;
        }
      }
    }
    if (fallback) return *fallback;
    parse_fail("missing key '" + std::string(*names.begin()) + "' for model '" + name + "'", end);
  };

  FadingModel model;
  if (name == "gnak") {
    const double m = take({"m"}, std::nullopt);
    model = GeneralizedNakagami{m, take({"xi"}, std::nullopt)};
  } else if (name == "nak") {
    model = Nakagami{take({"m"}, std::nullopt)};
  } else if (name == "ray") {
    model = Rayleigh{};
  } else if (name == "wei") {
    model = Weibull{take({"xi"}, std::nullopt)};
  } else if (name == "osg") {
    model = OneSidedGaussian{};
  } else if (name == "logn") {
    model = Lognormal{take({"sigma", "sigma_db"}, std::nullopt)};
  } else if (name == "egk") {
    const double m = take({"m"}, std::nullopt);
    const double xi = take({"xi"}, std::nullopt);
    const double ms = take({"ms", "m_s"}, std::nullopt);
    model = Egk{m, xi, ms, take({"xis", "xi_s"}, std::nullopt)};
  } else if (name == "kmu") {
    const double kappa = take({"kappa", "k"}, std::nullopt);
    model = KappaMu{kappa, take({"mu"}, std::nullopt)};
  } else if (name == "emu") {
    const double eta = take({"eta"}, std::nullopt);
    const double mu = take({"mu"}, std::nullopt);
    const double format = take({"format"}, 2.0);
    if (format != 1.0 && format != 2.0) {
      for (const auto& kv : kvs) {
        if (kv.key == "format") parse_fail("format must be 1 or 2", kv.column - 1);
      }
    }
    model = EtaMu{eta, mu, static_cast<int>(format)};
  } else if (name == "awgn" || name == "awgn-proxy") {
    model = Awgn{};
  } else {
    parse_fail("unknown model '" + name + "'", begin);
  }
  for (std::size_t i = 0; i < kvs.size(); ++i) {
    if (!used[i]) parse_fail("unknown key '" + kvs[i].key + "' for model '" + name + "'", kvs[i].column - 1);
  }
  validate(model);
  return model;
}

// --- moments ---------------------------------------------------------------

double log_moment_ratio(const FadingModel& model, double n) {
  validate(model);
  if (n == 0.0 || n == 1.0) return 0.0;
  if (auto gn = as_gn(model)) return gn_log_ratio(gn->m, gn->xi, n);
  return std::visit(
      Overloaded{
          [n](const Lognormal& g) {
            const double s = g.sigma_db * g.sigma_db / (2.0 * kKappaDb * kKappaDb);
            return s * (n * n - n);
          },
          [n](const Egk& g) { return gn_log_ratio(g.m, g.xi, n) + gn_log_ratio(g.m_s, g.xi_s, n); },
          [n](const KappaMu& g) {
            require(g.mu + n > 0.0, "kmu: moment of order " + fmt(n) + " does not exist");
            const double km = g.kappa * g.mu;
            const double a[] = {g.mu + n};
            const double b[] = {g.mu};
            return std::lgamma(g.mu + n) - std::lgamma(g.mu) - n * std::log((1.0 + g.kappa) * g.mu) -
                   km + std::log(specfun::pfq(a, b, km));
          },
          [n](const EtaMu& g) {
            require(2.0 * g.mu + n > 0.0, "emu: moment of order " + fmt(n) + " does not exist");
            const auto [h, big_h] = eta_mu_shape(g);
            const double r = big_h / h;
            const double a[] = {g.mu + 0.5 * n + 0.5, g.mu + 0.5 * n};
            const double b[] = {g.mu + 0.5};
            return std::lgamma(2.0 * g.mu + n) - std::lgamma(2.0 * g.mu) - (g.mu + n) * std::log(h) -
                   n * std::log(2.0 * g.mu) + std::log(specfun::pfq(a, b, r * r));
          },
          [](const Awgn&) { return 0.0; },
          [](const auto&) -> double { throw UnsupportedModelError("log_moment_ratio: unhandled model"); },
      },
      model);
}

double moment(const FadingModel& model, double n, MeanSnr mean) {
  const double l = log_moment_ratio(model, n);
  if (n == 0.0) return 1.0;
  if (n == 1.0) return mean.value();
  const double r = l + n * std::log(mean.value());
  if (r > 709.782712893384) throw OverflowError("moment of order " + fmt(n) + " overflows");
  return std::exp(r);
}

double origin_exponent(const FadingModel& model) {
  validate(model);
  if (auto gn = as_gn(model)) return gn->xi * gn->m;
  return std::visit(
      Overloaded{
          [](const Egk& g) { return std::min(g.xi * g.m, g.xi_s * g.m_s); },
          [](const KappaMu& g) { return g.mu; },
          [](const EtaMu& g) { return 2.0 * g.mu; },
          [](const auto&) { return 1.0; },
      },
      model);
}

// --- densities -------------------------------------------------------------

double pdf(const FadingModel& model, double g, MeanSnr mean) {
  validate(model);
  require(g >= 0.0, "pdf: gamma must be >= 0, got " + fmt(g));
  const double gbar = mean.value();
  if (auto gn = as_gn(model)) return std::exp(gn_log_pdf(gn->m, gn->xi, g, gbar));
  return std::visit(
      Overloaded{
          [&](const Lognormal& l) {
            if (g == 0.0) return 0.0;
            const double mu = lognormal_mu_db(l.sigma_db, gbar);
            const double z = (10.0 * std::log10(g) - mu) / l.sigma_db;
            return kKappaDb / (std::sqrt(2.0 * std::numbers::pi) * l.sigma_db * g) *
                   std::exp(-0.5 * z * z);
          },
          [&](const Egk& e) {
            const double c = gbar / (gnak_beta(e.m, e.xi) * gnak_beta(e.m_s, e.xi_s));
            const double alpha = e.m_s - e.m * e.xi / e.xi_s;
            if (g == 0.0) {
              const double a = origin_exponent(model);
              if (a > 1.0) return 0.0;
              if (a < 1.0) return std::numeric_limits<double>::infinity();
              if (alpha <= 0.0) return std::numeric_limits<double>::infinity();  // log factor
            }
            const double y = g / c;
            const double eig = specfun::ext_inc_gamma(alpha, 0.0, std::pow(y, e.xi), e.xi / e.xi_s);
            const double lp = std::log(e.xi) - std::lgamma(e.m) - std::lgamma(e.m_s) -
                              e.xi * e.m * std::log(c) + xlogy(e.xi * e.m - 1.0, g);
            return std::exp(lp) * eig;
          },
          [&](const KappaMu& k) {
            const double mu = k.mu;
            const double r = mu * (1.0 + k.kappa) / gbar;
            const double z = 2.0 * mu * std::sqrt(k.kappa * (1.0 + k.kappa) * g / gbar);
            const double lp = mu * std::log(r) + xlogy(mu - 1.0, g) - mu * k.kappa - r * g +
                              specfun::log_bessel_i_normalized(mu - 1.0, z);
            return std::exp(lp);
          },
          [&](const EtaMu& e) {
            const auto [h, big_h] = eta_mu_shape(e);
            const double mu = e.mu;
            const double z = 2.0 * mu * std::abs(big_h) * g / gbar;
            const double lp = std::log(2.0 * std::sqrt(std::numbers::pi)) + 2.0 * mu * std::log(mu / gbar) +
                              mu * std::log(h) - std::lgamma(mu) + xlogy(2.0 * mu - 1.0, g) -
                              2.0 * mu * h * g / gbar +
                              specfun::log_bessel_i_normalized(mu - 0.5, z);
            return std::exp(lp);
          },
          [](const Awgn&) -> double {
            throw UnsupportedModelError("pdf: the awgn model is a point mass and has no density");
          },
          [](const auto&) -> double { throw UnsupportedModelError("pdf: unhandled model"); },
      },
      model);
}

double cdf(const FadingModel& model, double g, MeanSnr mean) {
  validate(model);
  require(g >= 0.0, "cdf: gamma must be >= 0, got " + fmt(g));
  if (g == 0.0) return 0.0;
  const double gbar = mean.value();
  if (std::holds_alternative<OneSidedGaussian>(model)) return std::erf(std::sqrt(0.5 * g / gbar));
  if (std::holds_alternative<Rayleigh>(model)) return -std::expm1(-g / gbar);
  if (std::holds_alternative<Awgn>(model)) return g >= gbar ? 1.0 : 0.0;
  if (auto gn = as_gn(model)) {
    const double y = std::pow(gnak_beta(gn->m, gn->xi) * g / gbar, gn->xi);
    if (std::isinf(y)) return 1.0;
    return boost::math::gamma_p(gn->m, y);
  }
  if (const auto* l = std::get_if<Lognormal>(&model)) {
    const double z = (10.0 * std::log10(g) - lognormal_mu_db(l->sigma_db, gbar)) / l->sigma_db;
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
  }
  // No closed form: integrate the density, from whichever side is smaller.
  auto one = [](double) { return 1.0; };
  double p;
  if (g <= gbar) {
    p = detail::integrate_against_pdf(model, mean, one, g, 1e-10, 4000);
  } else {
    const double upper = quadrature::integrate_tail(
                             [&](double x) { return pdf(model, x, mean); }, g, gbar, 1e-10, 4000)
                             .value;
    p = 1.0 - upper;
  }
  return std::clamp(p, 0.0, 1.0);
}

// --- integration against the density ----------------------------------------

namespace detail {

std::vector<double> pdf_breaks(const FadingModel& model, MeanSnr mean) {
  const double gbar = mean.value();
  std::vector<double> out{gbar / 100.0, gbar, 100.0 * gbar};
  const double af2 = std::expm1(log_moment_ratio(model, 2.0));
  const double cv = std::sqrt(std::max(af2, 0.0));
  if (cv > 0.0) {
    for (int j = 1; j <= 4; ++j) {
      for (double s : {-1.0, 1.0}) {
        const double p = gbar * (1.0 + s * j * cv);
        if (p > gbar / 100.0 && p < 100.0 * gbar) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double integrate_against_pdf(const FadingModel& model, MeanSnr mean,
                             const std::function<double(double)>& f, double upper, double rel_tol,
                             unsigned max_intervals, double* error) {
  std::vector<double> breaks;
  for (double b : pdf_breaks(model, mean)) {
    if (b < upper) breaks.push_back(b);
  }
  const bool infinite = std::isinf(upper);
  if (!infinite) breaks.push_back(upper);
  if (breaks.empty()) breaks.push_back(upper);

  auto integrand = [&](double g) {
    const double p = pdf(model, g, mean);
    return p == 0.0 ? 0.0 : f(g) * p;
  };

  const double alpha = origin_exponent(model);
  const double q = std::max(2.0, std::ceil(1.0 / alpha));
  const double first = breaks.front();
  auto near_origin = [&](double u) {
    const double g = std::pow(u, q);
    if (g == 0.0) return 0.0;
    return integrand(g) * q * g / u;
  };

  double total = 0.0;
  double err = 0.0;
  auto add = [&](const quadrature::Estimate& e) {
    total += e.value;
    err += e.error;
  };
  add(quadrature::integrate(near_origin, 0.0, std::pow(first, 1.0 / q), rel_tol, max_intervals));
  if (breaks.size() > 1) {
    add(quadrature::integrate_segments(integrand, breaks, rel_tol, max_intervals));
  }
  if (infinite) {
    const double last = breaks.back();
    add(quadrature::integrate_tail(integrand, last, last, rel_tol, max_intervals));
  }
  if (error) *error = err;
  return total;
}

}  // namespace detail
}  // namespace hocc
