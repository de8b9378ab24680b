#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hocc/error.hpp"
#include "hocc/fading.hpp"
#include "hocc/statistics.hpp"
#include "oracles.hpp"

using namespace hocc;

namespace {

std::vector<FadingModel> closed_grid() {
  std::vector<FadingModel> out;
  for (double m : {0.5, 1.0, 2.5}) {
    for (double xi : {0.5, 1.0, 2.0}) out.push_back(GeneralizedNakagami{m, xi});
  }
  for (double s : {3.0, 6.0, 9.0}) out.push_back(Lognormal{s});
  out.push_back(Egk{2.0, 1.5, 1.5, 0.8});
  out.push_back(Egk{0.8, 2.0, 3.0, 1.0});
  for (double k : {0.0, 1.0, 3.0}) {
    for (double mu : {0.5, 1.0, 2.0}) out.push_back(KappaMu{k, mu});
  }
  return out;
}

// 2F1 by its plain power series
double f21(double a, double b, double c, double x) {
  double term = 1.0, sum = 1.0;
  for (int j = 0; j < 5000 && std::abs(term) > 1e-18 * std::abs(sum); ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(Aof, Definitions) {
  for (const auto& m : closed_grid()) EXPECT_NEAR(aof(m, 1.0), 0.0, 1e-12) << to_string(m);
  EXPECT_NEAR(aof(EtaMu{0.4, 1.3, 1}, 1.0), 0.0, 1e-12);
  EXPECT_NEAR(aof(Rayleigh{}, 2.0), 1.0, 1e-13);
  const double m = 2.5, xi = 0.7, n = 1.6;
  const double beta = std::tgamma(m + 1.0 / xi) / std::tgamma(m);
  EXPECT_NEAR(aof(GeneralizedNakagami{m, xi}, n),
              std::tgamma(m + n / xi) / std::tgamma(m) * std::pow(beta, -n) - 1.0, 1e-12);
}

TEST(Aof, ScaleInvariant) {
  for (const auto& m : closed_grid()) {
    for (double n : {0.3, 2.0, 3.5}) {
      EXPECT_NEAR(aof(m, n, MeanSnr(1.0)), aof(m, n, MeanSnr(100.0)),
                  1e-10 * std::max(1.0, std::abs(aof(m, n)))) << to_string(m);
    }
  }
}

TEST(MuHat, Values) {
  EXPECT_NEAR(mu_hat(Rayleigh{}, 1.0, MeanSnr(3.0)), 1.0, 1e-15);
  EXPECT_NEAR(mu_hat(Rayleigh{}, 2.0, MeanSnr(3.0)), 2.0, 1e-13);
}

TEST(MuHat, EtaMuHypergeometricForm) {
  for (int format : {1, 2}) {
    const EtaMu model{0.4, 1.3, format};
    const auto [h, big_h] = eta_mu_shape(model);
    const double mu = model.mu;
    for (double n : {1.0, 2.0, 3.0}) {
      const double pref = std::tgamma(2.0 * mu + n) /
                          (std::pow(h, mu + n) * std::pow(2.0 * mu, n) * std::tgamma(2.0 * mu));
      const double hyp = f21((2.0 * mu + n) / 2.0, (2.0 * mu + n + 1.0) / 2.0, mu + 0.5,
                             (big_h / h) * (big_h / h));
      EXPECT_NEAR(mu_hat(model, n, MeanSnr(1.0)) / (pref * hyp), 1.0, 1e-12) << format << " " << n;
    }
  }
}

TEST(MuCoeffs, ZerothVanishes) {
  for (const auto& m : closed_grid()) {
    EXPECT_NEAR(mu_coeffs_closed(m, 4)[0], 0.0, 1e-9) << to_string(m);
    EXPECT_NEAR(mu_coeffs_gl(m, 4)[0], 0.0, 1e-6) << to_string(m);
  }
  EXPECT_NEAR(mu_coeffs_gl(EtaMu{0.5, 1.0, 2}, 4)[0], 0.0, 1e-6);
}

TEST(MuCoeffs, FirstOrderValues) {
  EXPECT_NEAR(mu_coeffs_gl(Rayleigh{}, 1)[1], -oracle::kEuler, 5e-3);
  EXPECT_NEAR(mu_coeffs_closed(Rayleigh{}, 1)[1], -oracle::kEuler, 1e-12);
  EXPECT_NEAR(mu_coeffs_gl(Nakagami{2.0}, 1)[1], (1.0 - oracle::kEuler) - std::log(2.0), 5e-3);
  EXPECT_NEAR(mu_coeffs_closed(GeneralizedNakagami{1.0, 1.0}, 1)[1], -oracle::kEuler, 1e-12);
  const double kappa = 10.0 / std::log(10.0);
  EXPECT_NEAR(mu_coeffs_closed(Lognormal{6.0}, 1)[1], -36.0 / (2.0 * kappa * kappa), 1e-12);
}

TEST(MuCoeffs, RayleighHigherOrders) {
  // AF_n + 1 = Gamma(1+n): derivatives at 0 are E[ln^k X], X ~ Exp(1)
  const double z3 = 1.2020569031595942;
  const double e = oracle::kEuler;
  const double pi2 = oracle::kPi * oracle::kPi;
  const auto c = mu_coeffs_closed(Rayleigh{}, 3);
  EXPECT_NEAR(c[2], e * e + pi2 / 6.0, 1e-12);
  EXPECT_NEAR(c[3], -(e * e * e + e * pi2 / 2.0 + 2.0 * z3), 1e-12);
}

TEST(MuCoeffs, ClosedAgainstGl) {
  for (const auto& m : closed_grid()) {
    const auto c = mu_coeffs_closed(m, 4);
    const auto g = mu_coeffs_gl(m, 4);
    ASSERT_EQ(c.max_order(), 4u);
    EXPECT_EQ(c.method, CoeffMethod::ClosedForm);
    EXPECT_EQ(g.method, CoeffMethod::GlNumeric);
    for (std::size_t k = 0; k <= 4; ++k) {
      EXPECT_LE(std::abs(c[k] - g[k]) / std::max(1.0, std::abs(c[k])), 1e-2)
          << to_string(m) << " k=" << k;
    }
  }
}

TEST(MuCoeffs, KappaToZeroChain) {
  for (double m : {0.7, 1.0, 2.5}) {
    EXPECT_NEAR(mu_coeffs_closed(KappaMu{1e-8, m}, 1)[1], mu_coeffs_closed(Nakagami{m}, 1)[1], 1e-4);
  }
}

TEST(MuCoeffs, Dispatch) {
  EXPECT_FALSE(has_closed_mu(EtaMu{}));
  EXPECT_TRUE(has_closed_mu(OneSidedGaussian{}));
  EXPECT_THROW(mu_coeffs_closed(EtaMu{}, 2), UnsupportedModelError);
  EXPECT_EQ(mu_coeffs(EtaMu{}, 2).method, CoeffMethod::GlNumeric);
  EXPECT_EQ(mu_coeffs(Rayleigh{}, 2).method, CoeffMethod::ClosedForm);
  for (double v : mu_coeffs(Awgn{}, 4).values) EXPECT_EQ(v, 0.0);
  specfun::GlConfig cfg;
  cfg.max_order = 2;
  EXPECT_THROW(mu_coeffs_gl(Rayleigh{}, 3, cfg), DomainError);
}
