#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lateterms/complex.hpp"

using namespace lateterms;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  return Rational(num(rng), den(rng));
}

double rel_err(const BigFloat& got, const BigFloat& want) {
  if (want.is_zero()) return got.abs().to_double();
  return ((got - want) / want).abs().to_double();
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    Rational p = random_rational(rng);
    Rational q = random_rational(rng);
    CHECK((p + q) - q == p);
    if (!q.is_zero()) CHECK((p * q) / q == p);
  }
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK(Rational(5, 10).to_string() == "1/2");
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-1.25e-3") == Rational(-1, 800));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("+.5") == Rational(1, 2));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse("1e3") == Rational(1000));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational p = random_rational(rng);
    CHECK(Rational::parse(p.to_string()) == p);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("gamma_half_ratio values") {
  CHECK(gamma_half_ratio(0) == Rational(1));
  CHECK(gamma_half_ratio(1) == Rational(1, 2));
  CHECK(gamma_half_ratio(3) == Rational(15, 8));
}

TEST_CASE("gamma_half_ratio recurrence up to m = 200") {
  for (unsigned long m = 0; m <= 200; ++m)
    CHECK(gamma_half_ratio(m + 1) == gamma_half_ratio(m) * Rational(2 * m + 1, 2));
}

TEST_CASE("bigfloat conversion from rational is correctly rounded") {
  // 1/3 at 8 bits: mantissa 0.10101011 x 2^-1 after rounding up.
  BigFloat third = BigFloat::of(Rational(1, 3), 8);
  CHECK(third.to_double() == doctest::Approx(171.0 / 512.0).epsilon(1e-15));
  // Round trip for exactly representable values.
  CHECK(BigFloat::of(Rational(3, 8), 64).to_double() == 0.375);
}

TEST_CASE("bigfloat handles huge exponents") {
  // Gamma(80) ~ 8.9e116 and far beyond: magnitudes around 10^(10^6) must
  // survive squaring.
  BigFloat big = (BigFloat::of(10L, 128).log() * BigFloat::of(1000000L, 128)).exp();
  BigFloat sq = big * big;
  CHECK(!sq.is_nan());
  CHECK(sq > big);
  CHECK((sq / big - big).abs().to_double() == doctest::Approx(0.0));
}

TEST_CASE("log_gamma integer values") {
  CHECK(log_gamma(BigFloat::of(1L)).is_zero());
  CHECK(log_gamma(BigFloat::of(2L)).is_zero());
  CHECK_THROWS_AS(log_gamma(BigFloat::of(0L)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(BigFloat::of(-3L)), std::domain_error);
}

TEST_CASE("log_gamma(1/2) equals ln(pi)/2") {
  // Independent route: ln Gamma(1/2) = ln sqrt(pi).
  BigFloat got = log_gamma(BigFloat::of(Rational(1, 2), 256));
  BigFloat want = BigFloat::pi(256).log().mul_2exp(-1);
  CHECK(rel_err(got, want) < 1e-70);
  CHECK(got.to_double() == doctest::Approx(0.5723649429).epsilon(1e-9));
}

TEST_CASE("exp(log_gamma(n)) matches factorial(n-1) to 1e-20 at 256 bits") {
  for (long n = 2; n <= 50; ++n) {
    BigFloat got = log_gamma(BigFloat::of(n, 256)).exp();
    BigFloat want = BigFloat::of(factorial(static_cast<unsigned long>(n - 1)), 256);
    CHECK(rel_err(got, want) < 1e-20);
  }
}

TEST_CASE("exp(log_gamma) contract bound for integers up to 30") {
  const unsigned prec = 128;
  for (long k = 2; k <= 30; ++k) {
    BigFloat got = log_gamma(BigFloat::of(k, prec)).exp();
    BigFloat want = BigFloat::of(factorial(static_cast<unsigned long>(k - 1)), prec);
    CHECK(rel_err(got, want) < std::pow(2.0, 1.0 - static_cast<double>(prec) / 2));
  }
}

TEST_CASE("complex principal log") {
  const unsigned prec = 256;
  BigFloat pi = BigFloat::pi(prec);

  // Im(log z) in (-pi, pi]: the negative real axis maps to +pi.
  ComplexBF neg = ComplexBF::of(Rational(-2), Rational(0), prec);
  CHECK(rel_err(neg.log().im, pi) < 1e-70);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    ComplexBF z(BigFloat::of(u(rng), prec), BigFloat::of(u(rng), prec));
    if (z.modulus().to_double() < 1e-3) continue;
    ComplexBF lg = z.log();
    CHECK(lg.im <= pi);
    CHECK(lg.im > -pi);
    // exp(log z) == z to working precision
    ComplexBF back = lg.exp();
    CHECK(rel_err(back.re, z.re) + (back.im - z.im).abs().to_double() / z.modulus().to_double() <
          1e-70);
    // log(conj z) == conj(log z) off the negative real axis
    if (!(z.im.is_zero() && z.re.sign() < 0)) {
      ComplexBF lc = z.conj().log();
      CHECK((lc.re - lg.re).abs().to_double() < 1e-70);
      CHECK((lc.im + lg.im).abs().to_double() < 1e-70);
    }
  }
}

TEST_CASE("complex division") {
  ComplexBF a = ComplexBF::of(Rational(1), Rational(1), 128);
  ComplexBF b = ComplexBF::of(Rational(0), Rational(1), 128);
  ComplexBF q = a / b;  // (1+i)/i = 1 - i
  CHECK(q.re.to_double() == doctest::Approx(1.0));
  CHECK(q.im.to_double() == doctest::Approx(-1.0));
  CHECK_THROWS_AS(a / ComplexBF::of(Rational(0), Rational(0), 128), std::domain_error);
}

TEST_CASE("half_power") {
  CHECK(half_power(BigFloat::of(2L, 128), 2).to_double() == doctest::Approx(2.0));
  CHECK(half_power(BigFloat::of(2L, 128), -1).to_double() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(half_power(BigFloat::of(3L, 128), 3).to_double() == doctest::Approx(std::pow(3.0, 1.5)));
}
