#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hocc/hocc.hpp"
#include "hocc_cli/cli.hpp"

namespace hocc::cli {
namespace {

const char* const kMethods[] = {"quadrature", "mc", "high", "low", "jensen", "gap"};

std::string format_db(double db) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, db, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string row(const std::string& snr_db, std::string_view method, int order, double value,
                double err) {
  return snr_db + "," + std::string(method) + "," + std::to_string(order) + "," +
         format_number(value) + "," + format_number(err) + "\n";
}

std::vector<double> grid_db(const RunConfig& cfg) {
  std::vector<double> out(cfg.points);
  const double step = (cfg.snr_stop_db - cfg.snr_start_db) / static_cast<double>(cfg.points - 1);
  for (std::size_t i = 0; i < cfg.points; ++i) out[i] = cfg.snr_start_db + step * static_cast<double>(i);
  out.back() = cfg.snr_stop_db;
  return out;
}

}  // namespace

void cmd_curve(const RunConfig& cfg, std::ostream& csv, std::ostream& log) {
  cfg.validate();
  const FadingModel model = parse_model(cfg.model);
  for (const auto& m : cfg.methods) {
    if (std::find(std::begin(kMethods), std::end(kMethods), m) == std::end(kMethods)) {
      throw DomainError("unknown method '" + m + "' (use quadrature, mc, high, low, jensen, gap)");
    }
  }
  const bool wants_high = std::any_of(cfg.methods.begin(), cfg.methods.end(),
                                      [](const std::string& m) { return m == "high" || m == "gap"; });
  if (std::holds_alternative<Awgn>(model) &&
      std::find(cfg.methods.begin(), cfg.methods.end(), "mc") != cfg.methods.end()) {
    log << "note: awgn is deterministic; mc rows have zero error\n";
  }

  AuxCoefficients coeffs;
  if (wants_high) {
    specfun::GlConfig gl;
    gl.step = cfg.eps;
    if (!has_closed_mu(model)) {
      log << "note: no closed-form mu_k for " << to_string(model)
          << "; using the GL stencil with eps = " << format_number(cfg.eps) << "\n";
    }
    coeffs = mu_coeffs(model, cfg.order, gl);
  }

  McConfig mc;
  mc.samples = cfg.samples;
  mc.seed = cfg.seed;
  mc.threads = 1;

  const auto dbs = grid_db(cfg);
  std::vector<std::string> rows(dbs.size());
  parallel_for(
      dbs.size(),
      [&](std::size_t i) {
        const MeanSnr mean = MeanSnr::from_db(dbs[i]);
        const std::string label = format_db(dbs[i]);
        std::string text;
        for (const auto& m : cfg.methods) {
          HoccResult r;
          if (m == "quadrature") {
            r = hocc_quadrature(model, cfg.order, mean);
          } else if (m == "mc") {
            r = hocc_monte_carlo(model, cfg.order, mean, mc);
          } else if (m == "high") {
            r = hocc_high(cfg.order, mean, coeffs);
          } else if (m == "low") {
            r = hocc_low(model, cfg.order, mean);
          } else if (m == "jensen") {
            r = jensen_high(cfg.order, mean);
          } else {
            // log-domain distance to the AWGN asymptote; undefined where either side is <= 0
            double g = std::nan("");
            try {
              g = capacity_gap(cfg.order, mean, Regime::High, coeffs);
            } catch (const DomainError&) {
            }
            text += row(label, "gap", cfg.order, g, 0.0);
            continue;
          }
          text += row(label, to_string(r.method), cfg.order, r.value, r.error);
        }
        rows[i] = std::move(text);
      },
      cfg.threads);

  csv << "snr_db,method,order,value,err\n";
  for (const auto& r : rows) csv << r;
}

void cmd_boundary(const RunConfig& cfg, std::ostream& report, std::ostream& csv, std::ostream& log) {
  const FadingModel model = parse_model(cfg.model);
  BoundaryConfig bc;
  bc.weights = cfg.weights;
  bc.first_order = cfg.delta_start;
  bc.threads = cfg.threads;
  bc.validate();

  const MeanSnr onset = high_onset(model);
  const BoundaryScan scan = low_boundary_scan(model, bc);
  if (scan.flat) log << "warning: boundary objective is flat over the bracket\n";

  report << "# model=" << to_string(model) << "\n"
         << "# high_onset=" << format_number(onset.value()) << " (" << format_db(onset.db())
         << " dB)\n"
         << "# low_boundary=" << format_number(scan.optimum.value()) << " ("
         << format_db(scan.optimum.db()) << " dB)\n"
         << "# objective_at_boundary=" << format_number(scan.objective_at_optimum) << "\n"
         << "# infimum=" << format_number(kInfimumBoundary) << "\n"
         << "# supremum=" << format_number(kSupremumBoundary) << "\n";
  csv << "snr,snr_db,objective\n";
  for (const auto& [g, v] : scan.objective) {
    csv << format_number(g) << "," << format_db(linear_to_db(g)) << "," << format_number(v) << "\n";
  }
}

// --- validate ---------------------------------------------------------------

namespace {

struct Table {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& name, const std::string& model, const std::string& detail) {
    if (!ok) ++failures;
    out << (ok ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << name << std::setw(32) << model
        << detail << "\n";
  }
};

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

const char* const kDefaultModels[] = {
    "gnak:m=2.5,xi=0.7", "nak:m=2",   "ray",
    "wei:xi=2",          "osg",       "logn:sigma=6",
    "egk:m=2,xi=1.5,ms=1.5,xis=0.8", "egk:m=0.8,xi=2,ms=3,xis=1",
    "kmu:kappa=1,mu=1.5", "emu:eta=0.5,mu=1", "awgn"};

void validate_model(const FadingModel& model, const RunConfig& cfg, Table& t) {
  const std::string name = to_string(model);
  const bool point_mass = std::holds_alternative<Awgn>(model);

  if (!point_mass) {
    const double q = std::max(2.0, std::ceil(1.0 / origin_exponent(model)));
    double worst = 0.0;
    for (double gb : {0.01, 1.0, 100.0}) {
      const MeanSnr mean(gb);
      auto head = [&](double u) {
        const double g = std::pow(u, q);
        return g == 0.0 ? 0.0 : pdf(model, g, mean) * q * g / u;
      };
      auto tail = [&](double g) { return pdf(model, g, mean); };
      const double v = quadrature::integrate(head, 0.0, std::pow(gb, 1.0 / q), 1e-10, 4000).value +
                       quadrature::integrate_tail(tail, gb, gb, 1e-10, 4000).value;
      worst = std::max(worst, std::abs(v - 1.0));
    }
    t.check(worst <= 1e-6, "normalization", name, "max |I - 1| = " + sci(worst));
  }

  const double af1 = aof(model, 1.0);
  t.check(std::abs(af1) <= 1e-9, "aof_1", name, "AF_1 = " + sci(af1));
  const double m1 = moment(model, 1.0, MeanSnr(3.7));
  t.check(m1 == 3.7, "mean_contract", name, "E[g] at 3.7 = " + format_number(m1));

  if (has_closed_mu(model)) {
    specfun::GlConfig gl;
    gl.step = cfg.eps;
    const auto c = mu_coeffs_closed(model, 4);
    const auto g = mu_coeffs_gl(model, 4, gl);
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k) {
      worst = std::max(worst, std::abs(c[k] - g[k]) / std::max(1.0, std::abs(c[k])));
    }
    t.check(worst <= 1e-2 && std::abs(c[0]) <= 1e-9, "mu_closed_vs_gl", name, "max rel dev = " + sci(worst));
  }

  McConfig mc;
  mc.samples = cfg.samples;
  mc.seed = cfg.seed;
  mc.threads = cfg.threads;
  double worst_ratio = 0.0;
  for (double db : {-20.0, 0.0, 20.0}) {
    const MeanSnr mean = MeanSnr::from_db(db);
    const auto sim = hocc_monte_carlo_orders(model, 4, mean, mc);
    for (int n = 1; n <= 4; ++n) {
      const auto q = hocc_quadrature(model, n, mean);
      const double diff = std::abs(sim[n - 1].value - q.value);
      const double budget = 4.0 * sim[n - 1].error + q.error + 1e-12 * q.value;
      worst_ratio = std::max(worst_ratio, diff / budget);
    }
  }
  t.check(worst_ratio <= 1.0, "quadrature_vs_mc", name, "max |diff| / (4 se + qerr) = " + sci(worst_ratio));

  double high_excess = -INFINITY;
  double low_deficit = -INFINITY;
  for (int n = 1; n <= 4; ++n) {
    const auto coeffs = mu_coeffs(model, n);
    for (double db : {25.0, 30.0, 40.0}) {
      const MeanSnr mean = MeanSnr::from_db(db);
      high_excess = std::max(high_excess, hocc_high(n, mean, coeffs).value -
                                              hocc_quadrature(model, n, mean).value);
    }
    for (double db : {-10.0, -20.0, -30.0}) {
      const MeanSnr mean = MeanSnr::from_db(db);
      low_deficit = std::max(low_deficit, hocc_quadrature(model, n, mean).value -
                                              hocc_low(model, n, mean).value);
    }
  }
  t.check(high_excess <= 1e-6, "high_snr_lower_bound", name, "max(high - exact) = " + sci(high_excess));
  t.check(low_deficit <= 1e-6, "low_snr_upper_bound", name, "max(exact - low) = " + sci(low_deficit));
}

}  // namespace

int cmd_validate(const RunConfig& cfg, bool all_models, std::ostream& out) {
  Table t{out};
  std::vector<FadingModel> models;
  if (all_models) {
    for (const char* s : kDefaultModels) models.push_back(parse_model(s));
  } else {
    models.push_back(parse_model(cfg.model));
  }
  for (const auto& m : models) validate_model(m, cfg, t);

  if (all_models) {
    const double onset = high_onset(OneSidedGaussian{}).value();
    t.check(std::abs(onset / 17.5848747065 - 1.0) <= 1e-5, "high_onset", "osg",
            "= " + format_number(onset));
    const double sup = supremum_boundary().value();
    t.check(std::abs(sup - kSupremumBoundary) <= 1e-9, "supremum_boundary", "-", "= " + format_number(sup));
    BoundaryConfig bc;
    bc.threads = cfg.threads;
    const double inf = low_boundary(OneSidedGaussian{}, bc).value();
    t.check(std::abs(inf - kInfimumBoundary) <= 0.05, "low_boundary", "osg", "= " + format_number(inf));
  }
  out << (t.failures == 0 ? "all checks passed" : std::to_string(t.failures) + " check(s) failed")
      << "\n";
  return t.failures;
}

}  // namespace hocc::cli
