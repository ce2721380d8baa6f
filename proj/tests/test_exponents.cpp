#include <catch2/catch_amalgamated.hpp>

#include <polynet/exponents.hpp>

#include "test_util.hpp"

using polynet::BoundaryCondition;
using polynet::DimensionSetting;
using polynet::EpsilonSeries;
using polynet::Errc;
using polynet::ExactScalar;
using polynet::Rational;
using polynet::UniversalityClass;

namespace {
const DimensionSetting k2d = DimensionSetting::exact2d();

Rational bulk2d(long long L, UniversalityClass cls) {
  return std::get<ExactScalar>(x_bulk(L, cls, k2d)).as_rational();
}
Rational surf2d(long long L, UniversalityClass cls, BoundaryCondition bc) {
  return std::get<ExactScalar>(x_surface(L, cls, bc, k2d)).as_rational();
}
}  // namespace

TEST_CASE("correlation length exponents") {
  REQUIRE(nu(UniversalityClass::SAW, k2d).as_rational() == Rational(3, 4));
  REQUIRE(nu(UniversalityClass::Theta, k2d).as_rational() == Rational(4, 7));
  REQUIRE(nu(UniversalityClass::Brownian, k2d).as_rational() == Rational(1, 2));
  REQUIRE(nu(UniversalityClass::MutuallyAvoiding, k2d).as_rational() == Rational(1, 2));

  // diffusive for any ambient dimension
  for (long long d : {1, 2, 3, 5, 8})
    REQUIRE(nu(UniversalityClass::Brownian, DimensionSetting::general_d(Rational(d)))
                .as_rational() == Rational(1, 2));

  // self-avoidance is irrelevant at and above four dimensions
  REQUIRE(nu(UniversalityClass::SAW, DimensionSetting::general_d(Rational(4)))
              .as_rational() == Rational(1, 2));
  REQUIRE(nu(UniversalityClass::SAW, DimensionSetting::general_d(Rational(5)))
              .as_rational() == Rational(1, 2));

  REQUIRE(error_code_of([] {
            nu(UniversalityClass::SAW, DimensionSetting::general_d(Rational(3)));
          }) == Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            nu(UniversalityClass::Theta, DimensionSetting::general_d(Rational(3)));
          }) == Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            nu(UniversalityClass::SAW, DimensionSetting::epsilon(1));
          }) == Errc::UnsupportedCombination);
}

TEST_CASE("two-dimensional bulk many-leg exponents") {
  // (3L-2)(3L+2)/48
  REQUIRE(bulk2d(1, UniversalityClass::SAW) == Rational(5, 48));
  REQUIRE(bulk2d(2, UniversalityClass::SAW) == Rational(2, 3));
  REQUIRE(bulk2d(3, UniversalityClass::SAW) == Rational(77, 48));

  // (L^2-1)/12
  REQUIRE(bulk2d(1, UniversalityClass::Theta) == Rational(0));
  REQUIRE(bulk2d(2, UniversalityClass::Theta) == Rational(1, 4));
  REQUIRE(bulk2d(3, UniversalityClass::Theta) == Rational(2, 3));

  // (4L^2-1)/12
  REQUIRE(bulk2d(1, UniversalityClass::MutuallyAvoiding) == Rational(1, 4));
  REQUIRE(bulk2d(2, UniversalityClass::MutuallyAvoiding) == Rational(5, 4));

  // Brownian paths carry no bulk anomalous dimension in the plane
  for (long long L = 1; L <= 6; ++L)
    REQUIRE(bulk2d(L, UniversalityClass::Brownian) == Rational(0));
}

TEST_CASE("two-dimensional surface many-leg exponents") {
  // ordinary L(3L+2)/8; special (3L-4)(3L-2)/24; mixed L(3L-2)/8
  REQUIRE(surf2d(1, UniversalityClass::SAW, BoundaryCondition::Ordinary) == Rational(5, 8));
  REQUIRE(surf2d(2, UniversalityClass::SAW, BoundaryCondition::Ordinary) == Rational(2));
  REQUIRE(surf2d(3, UniversalityClass::SAW, BoundaryCondition::Ordinary) == Rational(33, 8));
  REQUIRE(surf2d(1, UniversalityClass::SAW, BoundaryCondition::Special) == Rational(-1, 24));
  REQUIRE(surf2d(2, UniversalityClass::SAW, BoundaryCondition::Special) == Rational(1, 3));
  REQUIRE(surf2d(1, UniversalityClass::SAW, BoundaryCondition::Mixed) == Rational(1, 8));
  REQUIRE(surf2d(2, UniversalityClass::SAW, BoundaryCondition::Mixed) == Rational(1));

  // theta point: ordinary (L+1)(L+2)/6; special L(L-1)/6; mixed L(L+1)/6
  REQUIRE(surf2d(1, UniversalityClass::Theta, BoundaryCondition::Ordinary) == Rational(1));
  REQUIRE(surf2d(1, UniversalityClass::Theta, BoundaryCondition::Special) == Rational(0));
  REQUIRE(surf2d(2, UniversalityClass::Theta, BoundaryCondition::Special) == Rational(1, 3));
  REQUIRE(surf2d(1, UniversalityClass::Theta, BoundaryCondition::Mixed) == Rational(1, 3));

  // the theta families are shifts of one another
  for (long long L = 1; L <= 20; ++L) {
    REQUIRE(surf2d(L, UniversalityClass::Theta, BoundaryCondition::Mixed) ==
            surf2d(L + 1, UniversalityClass::Theta, BoundaryCondition::Special));
    REQUIRE(surf2d(L, UniversalityClass::Theta, BoundaryCondition::Ordinary) ==
            surf2d(L + 2, UniversalityClass::Theta, BoundaryCondition::Special));
  }

  // L(2L+1)/3
  REQUIRE(surf2d(1, UniversalityClass::MutuallyAvoiding, BoundaryCondition::Ordinary) ==
          Rational(1));
  REQUIRE(surf2d(2, UniversalityClass::MutuallyAvoiding, BoundaryCondition::Ordinary) ==
          Rational(10, 3));

  // Ld/2 at d=2
  for (long long L = 1; L <= 6; ++L)
    REQUIRE(surf2d(L, UniversalityClass::Brownian, BoundaryCondition::Ordinary) ==
            Rational(L));
}

TEST_CASE("general dimension reduces to Brownian forms") {
  for (long long num : {2, 3, 4, 9}) {
    const Rational d(num, 2);  // 1, 3/2, 2, 9/2
    const auto setting = DimensionSetting::general_d(d);
    for (long long L = 1; L <= 5; ++L) {
      REQUIRE(std::get<ExactScalar>(x_bulk(L, UniversalityClass::Brownian, setting))
                  .as_rational() == Rational(L) * (d - Rational(2)) / Rational(2));
      REQUIRE(std::get<ExactScalar>(
                  x_surface(L, UniversalityClass::Brownian, BoundaryCondition::Ordinary,
                            setting))
                  .as_rational() == Rational(L) * d / Rational(2));
    }
  }

  // at d >= 4 self- and mutual-avoidance become invisible
  const auto d5 = DimensionSetting::general_d(Rational(5));
  for (long long L = 1; L <= 4; ++L) {
    REQUIRE(std::get<ExactScalar>(x_bulk(L, UniversalityClass::SAW, d5)) ==
            std::get<ExactScalar>(x_bulk(L, UniversalityClass::Brownian, d5)));
    REQUIRE(std::get<ExactScalar>(x_bulk(L, UniversalityClass::MutuallyAvoiding, d5)) ==
            std::get<ExactScalar>(x_bulk(L, UniversalityClass::Brownian, d5)));
    REQUIRE(std::get<ExactScalar>(x_surface(L, UniversalityClass::SAW,
                                            BoundaryCondition::Ordinary, d5)) ==
            std::get<ExactScalar>(x_surface(L, UniversalityClass::Brownian,
                                            BoundaryCondition::Ordinary, d5)));
    REQUIRE(std::get<ExactScalar>(x_surface(L, UniversalityClass::MutuallyAvoiding,
                                            BoundaryCondition::Ordinary, d5)) ==
            std::get<ExactScalar>(x_surface(L, UniversalityClass::Brownian,
                                            BoundaryCondition::Ordinary, d5)));
  }

  REQUIRE(error_code_of([] {
            x_bulk(1, UniversalityClass::SAW, DimensionSetting::general_d(Rational(3)));
          }) == Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            x_bulk(1, UniversalityClass::Theta, DimensionSetting::general_d(Rational(4)));
          }) == Errc::UnsupportedCombination);
}

TEST_CASE("expansion around four dimensions, bulk") {
  const auto e2 = DimensionSetting::epsilon(2);

  // frozen reference coefficients, L = 1..5
  const Rational c1[] = {Rational(-1, 2), Rational(-3, 4), Rational(-3, 4),
                         Rational(-1, 2), Rational(0)};
  const Rational c2[] = {Rational(1, 128), Rational(11, 128), Rational(3, 64),
                         Rational(-19, 64), Rational(-145, 128)};
  for (long long L = 1; L <= 5; ++L) {
    const auto s = std::get<EpsilonSeries>(x_bulk(L, UniversalityClass::SAW, e2));
    REQUIRE(s.order() == 2);
    REQUIRE(s.c0() == Rational(L));
    REQUIRE(s.c1() == c1[L - 1]);
    REQUIRE(s.c2() == c2[L - 1]);
  }

  const Rational m1[] = {Rational(-1, 2), Rational(-1, 2), Rational(0)};
  const Rational m2[] = {Rational(0), Rational(1, 8), Rational(-3, 8)};
  for (long long L = 1; L <= 3; ++L) {
    const auto s =
        std::get<EpsilonSeries>(x_bulk(L, UniversalityClass::MutuallyAvoiding, e2));
    REQUIRE(s.c0() == Rational(L));
    REQUIRE(s.c1() == m1[L - 1]);
    REQUIRE(s.c2() == m2[L - 1]);
  }

  for (long long L = 1; L <= 4; ++L) {
    const auto s = std::get<EpsilonSeries>(x_bulk(L, UniversalityClass::Brownian, e2));
    REQUIRE(s == EpsilonSeries(2, Rational(L), Rational(-L, 2), Rational(0)));
  }

  // order-1 requests truncate consistently
  const auto e1 = DimensionSetting::epsilon(1);
  for (long long L = 1; L <= 5; ++L) {
    const auto full = std::get<EpsilonSeries>(x_bulk(L, UniversalityClass::SAW, e2));
    const auto cut = std::get<EpsilonSeries>(x_bulk(L, UniversalityClass::SAW, e1));
    REQUIRE(cut == full.truncated(1));
  }
}

TEST_CASE("expansion around four dimensions, surface") {
  const auto e1 = DimensionSetting::epsilon(1);

  const Rational c1[] = {Rational(-5, 8), Rational(-1), Rational(-9, 8)};
  for (long long L = 1; L <= 3; ++L) {
    const auto s = std::get<EpsilonSeries>(
        x_surface(L, UniversalityClass::SAW, BoundaryCondition::Ordinary, e1));
    REQUIRE(s.order() == 1);
    REQUIRE(s.c0() == Rational(2 * L));
    REQUIRE(s.c1() == c1[L - 1]);
  }

  for (long long L = 1; L <= 3; ++L) {
    const auto s = std::get<EpsilonSeries>(
        x_surface(L, UniversalityClass::Brownian, BoundaryCondition::Ordinary, e1));
    REQUIRE(s == EpsilonSeries(1, Rational(2 * L), Rational(-L, 2)));
  }

  // surface series stop at first order, and there is none for mutual avoidance
  REQUIRE(error_code_of([] {
            x_surface(1, UniversalityClass::SAW, BoundaryCondition::Ordinary,
                      DimensionSetting::epsilon(2));
          }) == Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            x_surface(1, UniversalityClass::MutuallyAvoiding, BoundaryCondition::Ordinary,
                      DimensionSetting::epsilon(1));
          }) == Errc::UnsupportedCombination);
}

TEST_CASE("special and mixed conditions exist only at the adsorption problem") {
  for (auto bc : {BoundaryCondition::Special, BoundaryCondition::Mixed}) {
    REQUIRE(error_code_of([&] {
              x_surface(1, UniversalityClass::Brownian, bc, k2d);
            }) == Errc::UnsupportedCombination);
    REQUIRE(error_code_of([&] {
              x_surface(1, UniversalityClass::MutuallyAvoiding, bc, k2d);
            }) == Errc::UnsupportedCombination);
    REQUIRE(error_code_of([&] {
              x_surface(1, UniversalityClass::SAW, bc, DimensionSetting::epsilon(1));
            }) == Errc::UnsupportedCombination);
    REQUIRE(error_code_of([&] {
              x_surface(1, UniversalityClass::SAW, bc,
                        DimensionSetting::general_d(Rational(5)));
            }) == Errc::UnsupportedCombination);
  }
}

TEST_CASE("leg numbers start at one") {
  REQUIRE(error_code_of([] { x_bulk(0, UniversalityClass::SAW, k2d); }) ==
          Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            x_surface(-2, UniversalityClass::SAW, BoundaryCondition::Ordinary, k2d);
          }) == Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] { polynet::theta_star_log_power(0); }) ==
          Errc::UnsupportedCombination);
}

TEST_CASE("logarithmic correction power at the tricritical point") {
  REQUIRE(polynet::theta_star_log_power(1) == Rational(0));
  REQUIRE(polynet::theta_star_log_power(2) == Rational(0));
  REQUIRE(polynet::theta_star_log_power(3) == Rational(-1, 22));
  REQUIRE(polynet::theta_star_log_power(4) == Rational(-2, 11));
  REQUIRE(polynet::theta_star_log_power(5) == Rational(-5, 11));
  REQUIRE(polynet::theta_star_log_power(6) == Rational(-10, 11));
}

TEST_CASE("fractal dimensions") {
  const auto saw = polynet::hausdorff_dimensions(UniversalityClass::SAW);
  REQUIRE(saw.bulk == Rational(4, 3));
  REQUIRE(saw.adsorbed.has_value());
  REQUIRE(*saw.adsorbed == Rational(2, 3));
  // adsorbed/bulk ratio is the crossover exponent
  REQUIRE(*saw.adsorbed / saw.bulk == Rational(1, 2));

  const auto theta = polynet::hausdorff_dimensions(UniversalityClass::Theta);
  REQUIRE(theta.bulk == Rational(7, 4));
  REQUIRE_FALSE(theta.adsorbed.has_value());

  REQUIRE(error_code_of([] {
            polynet::hausdorff_dimensions(UniversalityClass::Brownian);
          }) == Errc::UnsupportedCombination);
}
