#include <catch2/catch_amalgamated.hpp>

#include <polynet/epsilon_series.hpp>

#include "test_util.hpp"

using polynet::EpsilonSeries;
using polynet::Errc;
using polynet::Rational;

TEST_CASE("series order is part of the value") {
  const EpsilonSeries first(1, Rational(2), Rational(-5, 8));
  REQUIRE(first.order() == 1);
  REQUIRE(first.c0() == Rational(2));
  REQUIRE(first.c1() == Rational(-5, 8));
  REQUIRE(error_code_of([&] { first.c2(); }) == Errc::UnsupportedCombination);

  const EpsilonSeries second(2, Rational(1), Rational(-1, 2), Rational(1, 128));
  REQUIRE(second.c2() == Rational(1, 128));

  REQUIRE(error_code_of([] { EpsilonSeries(0, Rational(1), Rational(0)); }) ==
          Errc::UnsupportedCombination);
  REQUIRE(error_code_of([] {
            EpsilonSeries(3, Rational(1), Rational(0), Rational(0));
          }) == Errc::UnsupportedCombination);
}

TEST_CASE("series truncate down but never extend") {
  const EpsilonSeries second(2, Rational(1), Rational(-1, 2), Rational(1, 128));
  const EpsilonSeries cut = second.truncated(1);
  REQUIRE(cut.order() == 1);
  REQUIRE(cut.c0() == second.c0());
  REQUIRE(cut.c1() == second.c1());

  const EpsilonSeries first(1, Rational(2), Rational(-5, 8));
  REQUIRE(error_code_of([&] { first.truncated(2); }) == Errc::UnsupportedCombination);
}

TEST_CASE("series arithmetic requires matching orders") {
  const EpsilonSeries a(2, Rational(1), Rational(-1, 2), Rational(1, 8));
  const EpsilonSeries b(2, Rational(2), Rational(1, 4), Rational(-1, 8));
  REQUIRE(a + b == EpsilonSeries(2, Rational(3), Rational(-1, 4), Rational(0)));
  REQUIRE(a - b == EpsilonSeries(2, Rational(-1), Rational(-3, 4), Rational(1, 4)));
  REQUIRE(-a == EpsilonSeries(2, Rational(-1), Rational(1, 2), Rational(-1, 8)));
  REQUIRE(Rational(2) * a == EpsilonSeries(2, Rational(2), Rational(-1), Rational(1, 4)));
  REQUIRE(a * Rational(2) == Rational(2) * a);

  const EpsilonSeries first(1, Rational(1), Rational(1));
  REQUIRE(error_code_of([&] { return a + first; }) == Errc::InternalInconsistency);
}

TEST_CASE("series value at the expansion point") {
  REQUIRE(EpsilonSeries(2, Rational(3), Rational(9), Rational(27)).at_eps_zero() ==
          Rational(3));
}

TEST_CASE("series formatting always shows every kept term") {
  REQUIRE(EpsilonSeries(2, Rational(1), Rational(-1, 2), Rational(1, 128)).str() ==
          "1 - 1/2*eps + 1/128*eps^2");
  REQUIRE(EpsilonSeries(1, Rational(2), Rational(-5, 8)).str() == "2 - 5/8*eps");
  REQUIRE(EpsilonSeries(1, Rational(0), Rational(0)).str() == "0 + 0*eps");
  REQUIRE(EpsilonSeries(2, Rational(3), Rational(0), Rational(-3, 8)).str() ==
          "3 + 0*eps - 3/8*eps^2");
}
