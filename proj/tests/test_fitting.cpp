#include <catch2/catch_amalgamated.hpp>

#include <polynet/fitting.hpp>

#include <cmath>

#include "test_util.hpp"

using namespace polynet;

namespace {

// model census c_N = mu^N N^(g-1), embedded as dyadic rationals (exact to
// ~1e-9 relative, which is "no rounding" at the tolerances under test);
// the amplitude is centered to keep numerators inside 64 bits
WalkCensus model_census(double mu, double g, int n_lo, int n_hi, int stride = 1) {
  WalkCensus census;
  census.n_max = n_hi;
  const double mid = 0.5 * (n_lo + n_hi);
  for (int n = n_lo; n <= n_hi; n += stride) {
    const double v = std::pow(mu, n - mid) * std::pow(n, g - 1.0);
    census.counts[n] =
        ExactScalar(Rational(std::llround(v * (1LL << 30)), 1LL << 30));
  }
  return census;
}

WalkCensus rounded_census(double mu, double g, int n_hi) {
  WalkCensus census;
  census.n_max = n_hi;
  for (int n = 1; n <= n_hi; ++n)
    census.counts[n] =
        ExactScalar(std::llround(std::pow(mu, n) * std::pow(n, g - 1.0)));
  return census;
}

}  // namespace

TEST_CASE("three-point solve recovers a rounded power-law census") {
  const auto census = rounded_census(2.5, 1.25, 20);
  const auto fit = fit_entropic(census, FitMethod::ThreePointSolve);
  REQUIRE(fit.exponent_estimate == Catch::Approx(1.25).margin(0.05));
  REQUIRE(fit.mu_estimate == Catch::Approx(2.5).margin(0.05));
  REQUIRE(fit.exponent_spread >= 0.0);
  REQUIRE(fit.window_hi - fit.window_lo >= 4);
  REQUIRE(fit.method == FitMethod::ThreePointSolve);

  const auto ratio = fit_entropic(census, FitMethod::RatioExtrapolation);
  REQUIRE(ratio.exponent_estimate == Catch::Approx(1.25).margin(0.05));
  REQUIRE(ratio.mu_estimate == Catch::Approx(2.5).margin(0.05));
  REQUIRE(fits_agree(fit, ratio));
}

TEST_CASE("exact model censuses are recovered to high accuracy") {
  for (double mu : {2.0, 2.5, 3.0}) {
    for (double g : {-1.0, 0.3, 2.0}) {
      INFO("mu=" << mu << " g=" << g);
      const auto census = model_census(mu, g, 1, 24);
      const auto tps = fit_entropic(census, FitMethod::ThreePointSolve);
      REQUIRE(tps.exponent_estimate == Catch::Approx(g).margin(1e-3));
      const auto ratio = fit_entropic(census, FitMethod::RatioExtrapolation);
      REQUIRE(ratio.exponent_estimate == Catch::Approx(g).margin(1e-3));
    }
  }
}

TEST_CASE("stride-two censuses fit the same model") {
  const auto census = model_census(2.5, 0.5, 4, 26, 2);
  const auto fit = fit_entropic(census, FitMethod::ThreePointSolve);
  REQUIRE(fit.exponent_estimate == Catch::Approx(0.5).margin(1e-3));
  REQUIRE(fit.window_hi - fit.window_lo >= 4);
}

TEST_CASE("fit determinism") {
  const auto census = rounded_census(2.64, 1.34, 18);
  const auto a = fit_entropic(census, FitMethod::RatioExtrapolation);
  const auto b = fit_entropic(census, FitMethod::RatioExtrapolation);
  REQUIRE(a.exponent_estimate == b.exponent_estimate);
  REQUIRE(a.mu_estimate == b.mu_estimate);
  REQUIRE(a.exponent_spread == b.exponent_spread);
}

TEST_CASE("metric exponent from distance sums") {
  // R^2(N) = N^(3/2) with unit counts
  WalkCensus census;
  census.n_max = 20;
  for (int n = 1; n <= 20; ++n) {
    census.counts[n] =
        ExactScalar(Rational(std::llround(std::pow(n, 1.5) * (1LL << 30)), 1LL << 30));
    census.r2_sums[n] = static_cast<long long>(n) * n * n;
  }
  const auto fit = fit_nu(census);
  REQUIRE(fit.exponent_estimate == Catch::Approx(0.75).margin(1e-6));

  // ideal-walk control: counts 4^N, total distance N 4^N, mean exactly N
  WalkCensus ideal;
  ideal.n_max = 20;
  long long power = 1;
  for (int n = 1; n <= 20; ++n) {
    power *= 4;
    ideal.counts[n] = ExactScalar(power);
    ideal.r2_sums[n] = n * power;
  }
  const auto brownian = fit_nu(ideal);
  REQUIRE(brownian.exponent_estimate == Catch::Approx(0.5).margin(1e-3));
  REQUIRE(brownian.mu_estimate == Catch::Approx(4.0).margin(1e-6));
}

TEST_CASE("polygon weighting shift from a census ratio") {
  // weighted = unit * N^phi: the per-length ratio is a clean power law and
  // the shift comes back to float accuracy
  const double phi = 0.5;
  const auto unit = model_census(2.0, 0.5, 4, 26, 2);
  auto reweigh = [](const WalkCensus& base, auto&& factor) {
    WalkCensus out = base;
    for (auto& [n, c] : out.counts) {
      const double v = c.to_double() * factor(n);
      c = ExactScalar(Rational(std::llround(v * (1LL << 30)), 1LL << 30));
    }
    return out;
  };
  const auto weighted = reweigh(unit, [&](int n) { return std::pow(n, phi); });
  const auto fit = fit_polygon_shift(unit, weighted);
  REQUIRE(fit.exponent_estimate == Catch::Approx(phi).margin(1e-4));
  REQUIRE(fit.mu_estimate == 1.0);
  REQUIRE(fit.method == FitMethod::RatioExtrapolation);
  REQUIRE(fit.window_hi - fit.window_lo >= 4);

  // an alternating factor on top (the two length classes mod 4 disagree, as
  // real polygon tails do) lands in the right place because same-class
  // differences cancel the alternation
  const auto wobbly = reweigh(weighted, [](int n) {
    return 1.0 + ((n / 2) % 2 == 0 ? 0.05 : -0.05) * (1.0 + 4.0 / n);
  });
  const auto wf = fit_polygon_shift(unit, wobbly);
  REQUIRE(wf.exponent_estimate == Catch::Approx(phi).margin(0.05));

  const auto again = fit_polygon_shift(unit, wobbly);
  REQUIRE(again.exponent_estimate == wf.exponent_estimate);
  REQUIRE(again.exponent_spread == wf.exponent_spread);
}

TEST_CASE("polygon shift input validation") {
  const auto unit = model_census(2.0, 0.5, 4, 16, 2);
  REQUIRE(error_code_of([&] { fit_polygon_shift(unit, unit); }) == Errc::InsufficientData);

  auto small = model_census(2.0, 0.5, 4, 26, 2);
  auto bad = small;
  bad.counts[12] = ExactScalar(0);
  REQUIRE(error_code_of([&] { fit_polygon_shift(bad, small); }) == Errc::NonPositiveCount);
}

TEST_CASE("fitting input validation") {
  WalkCensus tiny;
  tiny.n_max = 5;
  for (int n = 1; n <= 5; ++n) tiny.counts[n] = ExactScalar(1);
  REQUIRE(error_code_of([&] { fit_entropic(tiny, FitMethod::ThreePointSolve); }) ==
          Errc::InsufficientData);
  REQUIRE(error_code_of([&] { fit_nu(tiny); }) == Errc::InsufficientData);

  auto zeroed = rounded_census(2.5, 1.0, 12);
  zeroed.counts[11] = ExactScalar(0);
  REQUIRE(error_code_of([&] { fit_entropic(zeroed, FitMethod::ThreePointSolve); }) ==
          Errc::NonPositiveCount);

  auto no_r2 = rounded_census(2.5, 1.0, 12);
  REQUIRE(error_code_of([&] { fit_nu(no_r2); }) == Errc::InsufficientData);
}
