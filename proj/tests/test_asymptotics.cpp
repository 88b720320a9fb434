#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lateterms/asymptotics.hpp"

using namespace lateterms;

namespace {
const unsigned kPrec = 256;

double rel_err(const BigFloat& got, const BigFloat& want) {
  if (want.is_zero()) return got.abs().to_double();
  return ((got - want) / want).abs().to_double();
}
}  // namespace

TEST_CASE("black hole model constants") {
  auto m = model_for(ProblemSpec::black_hole(10), kPrec);
  REQUIRE(m.terms.size() == 1);
  CHECK(!m.conjugate_pair);
  // K = 1/(2 sqrt(2) pi)
  BigFloat want = BigFloat::of(1L, kPrec) /
                  (BigFloat::of(2L, kPrec) * BigFloat::of(2L, kPrec).sqrt() * BigFloat::pi(kPrec));
  CHECK(rel_err(m.terms[0].K.re, want) < 1e-70);
  CHECK(m.terms[0].K.re.to_double() == doctest::Approx(0.1125395395).epsilon(1e-9));
  CHECK(m.terms[0].K.im.is_zero());
  CHECK(*m.exact_chi == Rational(-1));
  CHECK(m.terms[0].gamma == Rational(0));
}

TEST_CASE("rossby model constants") {
  auto m = model_for(ProblemSpec::rossby(10), kPrec);
  // K = 1/sqrt(pi)
  CHECK(m.terms[0].K.re.to_double() == doctest::Approx(0.5641895835).epsilon(1e-9));
  CHECK(*m.exact_chi == Rational(1));
  CHECK(m.terms[0].gamma == Rational(-1, 2));
  CHECK(exact_transcendental_is_one(m));
}

TEST_CASE("anharmonic model constants") {
  auto m = model_for(ProblemSpec::anharmonic(10), kPrec);
  // K = -sqrt(6)/pi^(3/2)
  double want = -std::sqrt(6.0) / std::pow(M_PI, 1.5);
  CHECK(m.terms[0].K.re.to_double() == doctest::Approx(want).epsilon(1e-12));
  CHECK(*m.exact_chi == Rational(-1, 3));
  CHECK(m.terms[0].gamma == Rational(1, 2));
  // Transcendental factor sqrt(6)/pi.
  CHECK(exact_transcendental_factor(m, kPrec).to_double() ==
        doctest::Approx(std::sqrt(6.0) / M_PI).epsilon(1e-12));
}

TEST_CASE("two-pole model constants at b = c = 1") {
  auto m = model_for(ProblemSpec::two_pole(Rational(1), Rational(1), 10), kPrec);
  REQUIRE(m.terms.size() == 1);
  CHECK(m.conjugate_pair);
  CHECK(!has_exact_form(m));
  // K = i/(sqrt(2) pi (1+i)) = (1+i)/(2 sqrt(2) pi)
  double k = 1.0 / (2.0 * std::sqrt(2.0) * M_PI);
  CHECK(m.terms[0].K.re.to_double() == doctest::Approx(k).epsilon(1e-12));
  CHECK(m.terms[0].K.im.to_double() == doctest::Approx(k).epsilon(1e-12));
}

TEST_CASE("chi0 at b = c = 1 is ln 2 + i(1 - pi/2)") {
  ComplexBF chi0 = compute_chi0(Rational(1), Rational(1), kPrec);
  BigFloat ln2 = BigFloat::of(2L, kPrec).log();
  BigFloat want_im = BigFloat::of(1L, kPrec) - BigFloat::pi(kPrec).mul_2exp(-1);
  CHECK(rel_err(chi0.re, ln2) < 1e-70);
  CHECK(rel_err(chi0.im, want_im) < 1e-70);
  CHECK(chi0.modulus().to_double() == doctest::Approx(0.8980).epsilon(1e-4));
}

TEST_CASE("chi0 conjugate symmetry matches the second-branch formula") {
  // The conjugate singulant evaluates the same closed form with +ic/b and
  // -i b^3/c^2; equality with conj(chi0) is the branch-symmetry check.
  for (auto [bv, cv] : {std::pair<long, long>{1, 1}, {1, 3}, {3, 1}, {2, 5}}) {
    Rational b(bv), c(cv);
    ComplexBF chi0 = compute_chi0(b, c, kPrec);
    Rational c2 = c * c;
    ComplexBF head = ComplexBF::of((c * c2 - b * b * c) / (Rational(2) * c2), -(b * b * b / c2),
                                   kPrec);
    BigFloat coef = BigFloat::of(b * b * (b * b + c * c) / (c * c2), kPrec);
    ComplexBF branch2 = head + coef * ComplexBF::of(Rational(1), c / b, kPrec).log();
    CHECK(rel_err(branch2.re, chi0.re) < 1e-70);
    CHECK(rel_err(branch2.im, -chi0.im) < 1e-70);
  }
}

TEST_CASE("chi0 rejects nonpositive parameters") {
  CHECK_THROWS_AS(compute_chi0(Rational(1), Rational(0), kPrec), std::domain_error);
  CHECK_THROWS_AS(compute_chi0(Rational(-1), Rational(2), kPrec), std::domain_error);
}

TEST_CASE("eval_model domain starts at n = 2") {
  auto m = model_for(ProblemSpec::rossby(10), kPrec);
  CHECK_THROWS_AS(eval_model(m, 1, kPrec), std::invalid_argument);
  CHECK_THROWS_AS(eval_model(m, 0, kPrec), std::invalid_argument);
}

TEST_CASE("rossby prediction at n = 2 is exactly 1/2") {
  auto m = model_for(ProblemSpec::rossby(10), kPrec);
  CHECK(exact_rational_part(m, 2) == Rational(1, 2));  // gamma_half_ratio(1)
  CHECK(rel_err(eval_model(m, 2, kPrec), BigFloat::of(Rational(1, 2), kPrec)) < 1e-70);
}

TEST_CASE("black hole prediction at n = 3, frozen by direct evaluation") {
  auto m = model_for(ProblemSpec::black_hole(10), kPrec);
  // (-1)^3 Gamma(3) / (2 sqrt(2) pi) = -0.22507907903...
  BigFloat got = eval_model(m, 3, kPrec);
  CHECK(got.to_double() == doctest::Approx(-0.2250790790).epsilon(1e-9));
  CHECK(exact_rational_part(m, 3) == Rational(-1));  // (1/2) * 2! * (-1)^3
}

TEST_CASE("gamma recurrence of model ratios") {
  // Rossby has chi = 1, so predicted(n+1)/predicted(n) = n - 1/2 exactly.
  auto m = model_for(ProblemSpec::rossby(10), kPrec);
  for (unsigned long n = 2; n <= 12; ++n) {
    CHECK(exact_rational_part(m, n + 1) / exact_rational_part(m, n) ==
          Rational(static_cast<long>(n)) - Rational(1, 2));
    BigFloat ratio = eval_model(m, n + 1, kPrec) / eval_model(m, n, kPrec);
    CHECK(rel_err(ratio, BigFloat::of(Rational(2 * static_cast<long>(n) - 1, 2), kPrec)) < 1e-60);
  }
}

TEST_CASE("exact and log-space evaluation agree") {
  for (Problem kind : {Problem::BlackHole, Problem::Anharmonic, Problem::Rossby}) {
    ProblemSpec spec{kind, {}, {}, 10};
    auto m = model_for(spec, kPrec);
    REQUIRE(has_exact_form(m));
    BigFloat trans = exact_transcendental_factor(m, kPrec);
    for (unsigned long n : {2ul, 5ul, 20ul, 60ul}) {
      BigFloat exact = BigFloat::of(exact_rational_part(m, n), kPrec) * trans;
      CHECK(rel_err(eval_model(m, n, kPrec), exact) < std::pow(2.0, 8.0 - double(kPrec)));
    }
  }
}

TEST_CASE("anharmonic factored normalization recovers gamma_half_ratio") {
  // predicted(n) pi^(3/2) / ((-1)^(n+1) 3^n sqrt(6)) = Gamma(n + 1/2); in
  // factored form the rational part over (-1)^(n+1) 3^n is gamma_half_ratio.
  auto m = model_for(ProblemSpec::anharmonic(10), kPrec);
  for (unsigned long n = 2; n <= 30; ++n) {
    Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
    Rational scale = sign * Rational(3).pow(static_cast<long>(n));
    CHECK(exact_rational_part(m, n) / scale == gamma_half_ratio(n));
  }
}

TEST_CASE("two-pole evaluation is real") {
  for (auto [bv, cv] : {std::pair<long, long>{1, 1}, {1, 3}, {3, 1}}) {
    auto spec = ProblemSpec::two_pole(Rational(bv), Rational(cv), 10);
    auto m = model_for(spec, kPrec);
    const auto& t = m.terms[0];
    for (unsigned long n : {2ul, 7ul, 25ul, 80ul}) {
      ComplexBF v = eval_model_complex(m, n, kPrec);
      // residue measured against the term magnitude |K| Gamma(n) / |chi0|^n
      BigFloat nn = BigFloat::of(static_cast<long>(n), kPrec);
      BigFloat env = (log_gamma(nn) - nn * t.chi.modulus().log()).exp() * t.K.modulus();
      CHECK(v.im.abs().to_double() <=
            std::pow(2.0, -double(kPrec) / 2) * env.to_double());
      // and the doubled-real-part shortcut agrees
      CHECK(rel_err(eval_model(m, n, kPrec), v.re) < 1e-60);
    }
  }
}

TEST_CASE("symbolic prefactor conversion") {
  // (1/2) 2^(-1/2) pi^(-1) = 1/(2 sqrt(2) pi)
  SymbolicReal k{Rational(1, 2), -1, 0, -2};
  CHECK(k.value(kPrec).to_double() ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(2.0) * M_PI)).epsilon(1e-12));
  // sqrt(2) sqrt(3) = sqrt(6)
  SymbolicReal s6{Rational(1), 1, 1, 0};
  CHECK(s6.value(kPrec).to_double() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}
