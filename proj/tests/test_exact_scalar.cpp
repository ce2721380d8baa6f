#include <catch2/catch_amalgamated.hpp>

#include <polynet/exact_scalar.hpp>

#include "test_util.hpp"

using polynet::Errc;
using polynet::ExactScalar;
using polynet::Rational;
using polynet::squarefree_split;

TEST_CASE("squarefree split factors out perfect squares") {
  REQUIRE(squarefree_split(1) == std::pair<long long, long long>{1, 1});
  REQUIRE(squarefree_split(2) == std::pair<long long, long long>{1, 2});
  REQUIRE(squarefree_split(8) == std::pair<long long, long long>{2, 2});
  REQUIRE(squarefree_split(36) == std::pair<long long, long long>{6, 1});
  REQUIRE(squarefree_split(360) == std::pair<long long, long long>{6, 10});
}

TEST_CASE("square roots canonicalize") {
  const ExactScalar root2 = ExactScalar::sqrt_of(Rational(2));
  REQUIRE(root2.radical_coeff() == Rational(1));
  REQUIRE(root2.radicand() == 2);

  // sqrt(8) = 2 sqrt(2)
  const ExactScalar root8 = ExactScalar::sqrt_of(Rational(8));
  REQUIRE(root8.radical_coeff() == Rational(2));
  REQUIRE(root8.radicand() == 2);

  // perfect squares collapse to rationals
  REQUIRE(ExactScalar::sqrt_of(Rational(9)) == ExactScalar(Rational(3)));
  REQUIRE(ExactScalar::sqrt_of(Rational(49, 4)) == ExactScalar(Rational(7, 2)));
  REQUIRE(ExactScalar::sqrt_of(Rational(0)).is_zero());

  // sqrt(8/3) = (2/3) sqrt(6)
  const ExactScalar r = ExactScalar::sqrt_of(Rational(8, 3));
  REQUIRE(r.radical_coeff() == Rational(2, 3));
  REQUIRE(r.radicand() == 6);
  REQUIRE(r * r == ExactScalar(Rational(8, 3)));

  REQUIRE(error_code_of([] { ExactScalar::sqrt_of(Rational(-1)); }) ==
          Errc::NegativeDiscriminant);
}

TEST_CASE("radical arithmetic stays in one extension") {
  const ExactScalar root2 = ExactScalar::sqrt_of(Rational(2));
  const ExactScalar one{Rational(1)};
  const ExactScalar x = one + root2;  // 1 + sqrt(2)

  REQUIRE(x * (one - root2) == ExactScalar(Rational(-1)));
  REQUIRE(x * x == ExactScalar(Rational(3)) + ExactScalar(Rational(2)) * root2);
  REQUIRE(one / x == root2 - one);
  REQUIRE((x / (ExactScalar(Rational(3)) - root2)) * (ExactScalar(Rational(3)) - root2) == x);
  REQUIRE(root2 * root2 == ExactScalar(Rational(2)));

  const ExactScalar root3 = ExactScalar::sqrt_of(Rational(3));
  REQUIRE(error_code_of([&] { return root2 + root3; }) == Errc::MixedRadicals);
}

TEST_CASE("rational extraction refuses surviving radicals") {
  REQUIRE(ExactScalar(Rational(3, 2)).as_rational() == Rational(3, 2));
  const ExactScalar root2 = ExactScalar::sqrt_of(Rational(2));
  REQUIRE(error_code_of([&] { root2.as_rational(); }) == Errc::NestedRadical);
  // the radical can cancel, after which extraction works again
  REQUIRE((root2 - root2).as_rational() == Rational(0));
}

TEST_CASE("radical signs and ordering") {
  const ExactScalar root2 = ExactScalar::sqrt_of(Rational(2));
  const ExactScalar one{Rational(1)};

  REQUIRE(root2.sign() == 1);
  REQUIRE((-root2).sign() == -1);
  REQUIRE((ExactScalar(Rational(3, 2)) - root2).sign() == 1);   // 1.5 > 1.414..
  REQUIRE((ExactScalar(Rational(7, 5)) - root2).sign() == -1);  // 1.4 < 1.414..
  REQUIRE(root2 < ExactScalar(Rational(3, 2)));
  REQUIRE(one + root2 > ExactScalar(Rational(2)));
  REQUIRE(one + root2 < ExactScalar(Rational(5, 2)));
}

TEST_CASE("scalar formatting") {
  REQUIRE(ExactScalar(Rational(5, 8)).str() == "5/8");
  REQUIRE(ExactScalar::sqrt_of(Rational(2)).str() == "sqrt(2)");
  REQUIRE((ExactScalar(Rational(1)) + ExactScalar::sqrt_of(Rational(2))).str() ==
          "1+sqrt(2)");
  REQUIRE(ExactScalar::sqrt_of(Rational(8)).str() == "2*sqrt(2)");
  REQUIRE((-ExactScalar::sqrt_of(Rational(2))).str() == "-sqrt(2)");
  REQUIRE(ExactScalar(Rational(1, 2), Rational(-3, 4), 5).str() == "1/2-3/4*sqrt(5)");
}

TEST_CASE("scalar parsing round-trips") {
  for (const char* text : {"5/8", "-7", "sqrt(2)", "-sqrt(2)", "2*sqrt(2)", "1+sqrt(2)",
                           "1/2-3/4*sqrt(5)", "-1+sqrt(13)"}) {
    const ExactScalar v = ExactScalar::parse(text);
    REQUIRE(v.str() == text);
  }
  // non-canonical spellings still land in canonical form
  REQUIRE(ExactScalar::parse("sqrt(8)") == ExactScalar::sqrt_of(Rational(8)));
  REQUIRE(ExactScalar::parse("sqrt(9)") == ExactScalar(Rational(3)));

  for (const char* bad : {"sqrt(2", "sqrt(-2)", "sqrt(4/3)", "sqrt()", "nope"})
    REQUIRE(error_code_of([&] { ExactScalar::parse(bad); }) == Errc::SyntaxError);
}

TEST_CASE("scalar to_double approximates the exact value") {
  const ExactScalar a_c = ExactScalar(Rational(1)) + ExactScalar::sqrt_of(Rational(2));
  REQUIRE(a_c.to_double() == Catch::Approx(2.41421356237309).epsilon(1e-12));
}
