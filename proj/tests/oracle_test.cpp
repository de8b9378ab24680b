#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hocc/error.hpp"
#include "hocc/oracle.hpp"
#include "oracles.hpp"

using namespace hocc;

namespace {

std::vector<FadingModel> models() {
  return {GeneralizedNakagami{2.5, 0.7}, Nakagami{2.0},          Rayleigh{},
          Weibull{2.0},                  OneSidedGaussian{},     Lognormal{6.0},
          Egk{2.0, 1.5, 1.5, 0.8},       Egk{0.8, 2.0, 3.0, 1.0}, KappaMu{1.0, 1.5},
          EtaMu{0.5, 1.0, 2},            Awgn{}};
}

}  // namespace

TEST(Quadrature, RayleighExponentialIntegral) {
  EXPECT_NEAR(std::exp(0.1) * oracle::e1_series(0.1), oracle::kRayleighAcc10, 1e-13);
  const auto r = hocc_quadrature(Rayleigh{}, 1, MeanSnr(10.0));
  EXPECT_NEAR(r.value, oracle::kRayleighAcc10, 1e-9);
  EXPECT_EQ(r.method, Method::Quadrature);
  EXPECT_LT(r.error, 1e-7);
  EXPECT_NEAR(hocc_quadrature(Rayleigh{}, 1, MeanSnr(1e4)).value, oracle::kRayleighAcc40dB, 1e-9);
  EXPECT_NEAR(hocc_quadrature(Rayleigh{}, 1, MeanSnr(1.0)).value, std::exp(1.0) * oracle::e1_series(1.0),
              1e-9);
}

TEST(Quadrature, TinyMeanBelowMean) {
  for (const auto& m : models()) {
    EXPECT_LE(hocc_quadrature(m, 1, MeanSnr(1e-6)).value, 1e-6) << to_string(m);
  }
}

TEST(Quadrature, KappaToZeroIsNakagami) {
  for (double g : {0.1, 10.0}) {
    for (int n = 1; n <= 3; ++n) {
      EXPECT_NEAR(hocc_quadrature(KappaMu{1e-8, 2.5}, n, MeanSnr(g)).value,
                  hocc_quadrature(Nakagami{2.5}, n, MeanSnr(g)).value, 1e-6);
    }
  }
}

TEST(Quadrature, AwgnIsExact) {
  EXPECT_DOUBLE_EQ(hocc_quadrature(Awgn{}, 3, MeanSnr(2.0)).value, std::pow(std::log1p(2.0), 3));
}

TEST(Quadrature, MonotoneInMean) {
  for (const auto& m : models()) {
    for (int n = 1; n <= 4; ++n) {
      double prev = 0.0;
      for (double db : {-20.0, -5.0, 5.0, 20.0, 35.0}) {
        const double v = hocc_quadrature(m, n, MeanSnr::from_db(db)).value;
        EXPECT_GT(v, prev) << to_string(m) << " n=" << n << " " << db;
        prev = v;
      }
    }
  }
}

TEST(Quadrature, JensenOrdering) {
  for (const auto& m : models()) {
    for (double g : {0.01, 1.0, 100.0}) {
      EXPECT_LE(hocc_quadrature(m, 1, MeanSnr(g)).value, std::log1p(g) + 1e-9) << to_string(m);
    }
  }
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(hocc_quadrature(Rayleigh{}, 0, MeanSnr(1.0)), DomainError);
  EXPECT_THROW(hocc_quadrature(Nakagami{0.2}, 1, MeanSnr(1.0)), DomainError);
  QuadratureConfig cfg;
  cfg.rel_tol = 0.1;
  EXPECT_THROW(hocc_quadrature(Rayleigh{}, 1, MeanSnr(1.0), cfg), DomainError);
}

TEST(MonteCarlo, AgreesWithQuadrature) {
  McConfig cfg;
  cfg.samples = 200000;
  for (const auto& m : models()) {
    for (double db : {-20.0, 0.0, 20.0}) {
      const MeanSnr mean = MeanSnr::from_db(db);
      const auto sim = hocc_monte_carlo_orders(m, 4, mean, cfg);
      for (int n = 1; n <= 4; ++n) {
        const auto q = hocc_quadrature(m, n, mean);
        EXPECT_GE(sim[n - 1].value, 0.0);
        EXPECT_LE(std::abs(sim[n - 1].value - q.value), 4.0 * sim[n - 1].error + q.error + 1e-12 * q.value)
            << to_string(m) << " n=" << n << " " << db << " dB";
      }
    }
  }
}

TEST(MonteCarlo, StandardErrorScaling) {
  McConfig cfg;
  cfg.samples = 200000;
  const double e1 = hocc_monte_carlo(Rayleigh{}, 2, MeanSnr(3.0), cfg).error;
  cfg.samples = 400000;
  const double e2 = hocc_monte_carlo(Rayleigh{}, 2, MeanSnr(3.0), cfg).error;
  EXPECT_NEAR(e1 / e2, std::sqrt(2.0), 0.05);
}

TEST(MonteCarlo, DeterministicAcrossThreads) {
  McConfig cfg;
  cfg.samples = 100000;
  cfg.batch = 10000;
  cfg.threads = 1;
  const auto a = hocc_monte_carlo_orders(KappaMu{1.0, 1.5}, 3, MeanSnr(2.0), cfg);
  cfg.threads = 4;
  const auto b = hocc_monte_carlo_orders(KappaMu{1.0, 1.5}, 3, MeanSnr(2.0), cfg);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].error, b[i].error);
  }
  EXPECT_EQ(hocc_monte_carlo(KappaMu{1.0, 1.5}, 2, MeanSnr(2.0), cfg).value, a[1].value);
  cfg.seed = 99;
  EXPECT_NE(hocc_monte_carlo(KappaMu{1.0, 1.5}, 2, MeanSnr(2.0), cfg).value, a[1].value);
}

TEST(MonteCarlo, Config) {
  McConfig cfg;
  cfg.samples = 100;
  EXPECT_THROW(hocc_monte_carlo(Rayleigh{}, 1, MeanSnr(1.0), cfg), DomainError);
  EXPECT_NE(batch_seed(1, 0), batch_seed(1, 1));
  EXPECT_NE(batch_seed(1, 0), batch_seed(2, 0));
}
