#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hocc/error.hpp"
#include "hocc/fading.hpp"
#include "hocc/quadrature.hpp"
#include "oracles.hpp"

using namespace hocc;

namespace {

std::vector<FadingModel> continuous_models() {
  return {GeneralizedNakagami{2.5, 0.7}, Nakagami{2.0},        Rayleigh{},
          Weibull{2.0},                  OneSidedGaussian{},   Lognormal{6.0},
          Egk{2.0, 1.5, 1.5, 0.8},       Egk{0.8, 2.0, 3.0, 1.0}, KappaMu{1.0, 1.5},
          EtaMu{0.5, 1.0, 2},            EtaMu{0.5, 1.0, 1},   KappaMu{3.0, 0.5}};
}

double pdf_integral(const FadingModel& model, MeanSnr mean) {
  const double q = std::max(2.0, std::ceil(1.0 / origin_exponent(model)));
  const double g = mean.value();
  auto head = [&](double u) {
    const double x = std::pow(u, q);
    return x == 0.0 ? 0.0 : pdf(model, x, mean) * q * x / u;
  };
  return quadrature::integrate(head, 0.0, std::pow(g, 1.0 / q), 1e-11, 4000).value +
         quadrature::integrate_tail([&](double x) { return pdf(model, x, mean); }, g, g, 1e-11, 4000)
             .value;
}

}  // namespace

TEST(MeanSnr, Conversions) {
  EXPECT_NEAR(MeanSnr::from_db(20.0).value(), 100.0, 1e-12);
  EXPECT_NEAR(MeanSnr(1000.0).db(), 30.0, 1e-12);
  EXPECT_THROW(MeanSnr(0.0), DomainError);
  EXPECT_THROW(MeanSnr(-1.0), DomainError);
  const auto grid = SnrGrid::linspace_db(0.0, 10.0, 3);
  ASSERT_EQ(grid.size(), 3u);
  EXPECT_NEAR(grid[1].value(), std::sqrt(10.0), 1e-12);
  EXPECT_THROW(SnrGrid::linspace_db(10.0, 0.0, 3), DomainError);
  EXPECT_THROW(SnrGrid::linspace_db(0.0, 10.0, 1), DomainError);
}

TEST(Validate, RejectsOutOfRange) {
  EXPECT_THROW(validate(Nakagami{0.1}), DomainError);
  EXPECT_THROW(validate(GeneralizedNakagami{1.0, 0.0}), DomainError);
  EXPECT_THROW(validate(Weibull{-1.0}), DomainError);
  EXPECT_THROW(validate(Lognormal{0.0}), DomainError);
  EXPECT_THROW(validate(KappaMu{-0.5, 1.0}), DomainError);
  EXPECT_THROW(validate(EtaMu{0.5, 1.0, 3}), DomainError);
  EXPECT_THROW(validate(Egk{1.0, 1.0, 0.0, 1.0}), DomainError);
  EXPECT_NO_THROW(validate(Nakagami{0.5}));
}

TEST(ParseModel, RoundTrip) {
  for (const auto& m : continuous_models()) {
    const std::string s = to_string(m);
    EXPECT_EQ(to_string(parse_model(s)), s);
  }
  EXPECT_EQ(to_string(parse_model("ray")), "ray");
  EXPECT_EQ(to_string(parse_model("awgn-proxy")), "awgn");
  EXPECT_EQ(to_string(parse_model("nak:m=2")), "nak:m=2");
  EXPECT_EQ(to_string(parse_model("logn:sigma_db=6")), "logn:sigma=6");
}

TEST(ParseModel, ReportsColumn) {
  try {
    parse_model("nak:m=2,q=3");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9);
  }
  EXPECT_THROW(parse_model("rice:k=2"), ParseError);
  EXPECT_THROW(parse_model("nak:m=abc"), ParseError);
  EXPECT_THROW(parse_model("nak:m=2,m=3"), ParseError);
  EXPECT_THROW(parse_model("nak"), ParseError);
  EXPECT_THROW(parse_model("nak:m=0.1"), DomainError);
}

TEST(Pdf, RayleighAtOrigin) {
  EXPECT_DOUBLE_EQ(pdf(Rayleigh{}, 0.0, MeanSnr(1.0)), 1.0);
  EXPECT_THROW(pdf(Awgn{}, 1.0, MeanSnr(1.0)), UnsupportedModelError);
}

class Normalization : public ::testing::TestWithParam<FadingModel> {};

TEST_P(Normalization, IntegratesToOne) {
  for (double g : {0.01, 1.0, 100.0}) {
    EXPECT_NEAR(pdf_integral(GetParam(), MeanSnr(g)), 1.0, 1e-6) << to_string(GetParam()) << " " << g;
  }
}

TEST_P(Normalization, MomentsMatchQuadrature) {
  const MeanSnr mean(2.0);
  for (double n : {0.5, 1.0, 2.0, 3.0}) {
    const auto& model = GetParam();
    const double q = quadrature::integrate_tail(
                         [&](double x) { return std::pow(x, n) * pdf(model, x, mean); }, 0.0, 2.0,
                         1e-11, 4000)
                         .value;
    EXPECT_NEAR(moment(model, n, mean) / q, 1.0, 1e-7) << to_string(model) << " n=" << n;
  }
}

INSTANTIATE_TEST_SUITE_P(AllModels, Normalization, ::testing::ValuesIn(continuous_models()));

TEST(Pdf, LimitingCases) {
  const MeanSnr mean(1.7);
  for (double g : {0.1, 1.0, 5.0}) {
    EXPECT_NEAR(pdf(GeneralizedNakagami{1.0, 1.0}, g, mean), pdf(Rayleigh{}, g, mean), 1e-12);
    EXPECT_NEAR(pdf(GeneralizedNakagami{2.5, 1.0}, g, mean), oracle::nakagami_pdf(2.5, g, 1.7), 1e-12);
    EXPECT_NEAR(pdf(GeneralizedNakagami{1.0, 1.6}, g, mean), oracle::weibull_pdf(1.6, g, 1.7), 1e-12);
    EXPECT_NEAR(pdf(Nakagami{2.5}, g, mean), oracle::nakagami_pdf(2.5, g, 1.7), 1e-12);
    EXPECT_NEAR(pdf(KappaMu{0.0, 2.5}, g, mean), oracle::nakagami_pdf(2.5, g, 1.7), 1e-8);
    EXPECT_NEAR(pdf(KappaMu{1e-8, 2.5}, g, mean), oracle::nakagami_pdf(2.5, g, 1.7), 1e-8);
    EXPECT_NEAR(pdf(Egk{2.0, 1.0, 3.5, 1.0}, g, mean), oracle::generalized_k_pdf(2.0, 3.5, g, 1.7), 1e-8);
    EXPECT_NEAR(pdf(OneSidedGaussian{}, g, mean), oracle::nakagami_pdf(0.5, g, 1.7), 1e-12);
  }
}

TEST(Cdf, KnownValues) {
  for (const auto& m : continuous_models()) EXPECT_EQ(cdf(m, 0.0, MeanSnr(3.0)), 0.0);
  EXPECT_NEAR(cdf(Rayleigh{}, 2.0, MeanSnr(2.0)), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(cdf(OneSidedGaussian{}, 8.0, MeanSnr(17.5848747065)), 0.5, 1e-6);
  EXPECT_EQ(cdf(Awgn{}, 0.5, MeanSnr(1.0)), 0.0);
  EXPECT_EQ(cdf(Awgn{}, 1.5, MeanSnr(1.0)), 1.0);
}

TEST(Cdf, MatchesIntegratedPdf) {
  const MeanSnr mean(1.3);
  for (const auto& m : continuous_models()) {
    for (double x : {0.2, 1.3, 6.0}) {
      const double q = std::max(2.0, std::ceil(1.0 / origin_exponent(m)));
      auto head = [&](double u) {
        const double t = std::pow(u, q);
        return t == 0.0 ? 0.0 : pdf(m, t, mean) * q * t / u;
      };
      const double ref = quadrature::integrate(head, 0.0, std::pow(x, 1.0 / q), 1e-11, 4000).value;
      EXPECT_NEAR(cdf(m, x, mean), ref, 1e-7) << to_string(m) << " " << x;
    }
  }
}

TEST(Moment, Contracts) {
  for (const auto& m : continuous_models()) {
    EXPECT_DOUBLE_EQ(moment(m, 0.0, MeanSnr(4.0)), 1.0);
    EXPECT_EQ(moment(m, 1.0, MeanSnr(4.0)), 4.0) << to_string(m);
  }
  EXPECT_NEAR(moment(Rayleigh{}, 3.0, MeanSnr(2.0)), 48.0, 1e-12);
  EXPECT_NEAR(moment(Awgn{}, 2.5, MeanSnr(3.0)), std::pow(3.0, 2.5), 1e-13);
}

TEST(Sample, MeanAndDeterminism) {
  for (const auto& m : continuous_models()) {
    const auto a = sample(m, MeanSnr(2.0), 200000, 7);
    double s = 0.0, s2 = 0.0;
    for (double x : a) {
      ASSERT_GE(x, 0.0);
      s += x;
      s2 += x * x;
    }
    const double n = static_cast<double>(a.size());
    const double mu = s / n;
    const double se = std::sqrt((s2 / n - mu * mu) / n);
    EXPECT_LE(std::abs(mu - 2.0), 4.0 * se) << to_string(m);
    const auto b = sample(m, MeanSnr(2.0), 1000, 7);
    EXPECT_TRUE(std::equal(b.begin(), b.end(), a.begin())) << to_string(m);
  }
}

TEST(Sample, EmpiricalCdfWithinDkwBound) {
  const std::size_t n = 100000;
  // DKW: P(sup|F_n - F| > e) <= 2 exp(-2 n e^2); e for 1e-6
  const double eps = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * n));
  for (const auto& m : continuous_models()) {
    const MeanSnr mean(1.0);
    auto draws = sample(m, mean, n, 11);
    for (double x : {0.3, 1.0, 2.5}) {
      const double emp = static_cast<double>(std::count_if(draws.begin(), draws.end(),
                                                           [x](double v) { return v <= x; })) / n;
      EXPECT_LE(std::abs(emp - cdf(m, x, mean)), eps) << to_string(m) << " " << x;
    }
  }
}
