#include "lateterms/asymptotics.hpp"

#include <stdexcept>

namespace lateterms {

namespace {

BigFloat gamma_plus(const Rational& gamma, unsigned long n, unsigned prec) {
  BigFloat x = BigFloat::of(Rational(static_cast<long>(n)) + gamma, prec);
  return log_gamma(x);
}

// log K + ln Gamma(n + gamma) - n log chi, principal branch.
ComplexBF term_log(const LateTermTerm& t, unsigned long n, unsigned prec) {
  ComplexBF w = t.K.log();
  w.re = w.re + gamma_plus(t.gamma, n, prec);
  ComplexBF lc = t.chi.log();
  BigFloat nn = BigFloat::of(static_cast<long>(n), prec);
  w.re = w.re - nn * lc.re;
  w.im = w.im - nn * lc.im;
  return w;
}

void require_order(unsigned long n) {
  if (n < 2) throw std::invalid_argument("late-term evaluation requires n >= 2");
}

}  // namespace

BigFloat SymbolicReal::value(unsigned prec) const {
  BigFloat v = BigFloat::of(coef, prec);
  if (two_half != 0) v = v * half_power(BigFloat::of(2L, prec), two_half);
  if (three_half != 0) v = v * half_power(BigFloat::of(3L, prec), three_half);
  if (pi_half != 0) v = v * half_power(BigFloat::pi(prec), pi_half);
  return v;
}

ComplexBF compute_chi0(const Rational& b, const Rational& c, unsigned prec) {
  if (c.sign() <= 0) throw std::domain_error("compute_chi0 requires c > 0");
  if (b.sign() <= 0) throw std::domain_error("compute_chi0 requires b > 0");
  // (2i b^3 - b^2 c + c^3) / (2 c^2) + (b^2 (b^2 + c^2) / c^3) log(1 - i c/b)
  Rational c2 = c * c;
  Rational head_re = (c * c2 - b * b * c) / (Rational(2) * c2);
  Rational head_im = b * b * b / c2;
  Rational log_coef = b * b * (b * b + c * c) / (c * c2);
  ComplexBF lg = ComplexBF::of(Rational(1), -(c / b), prec).log();
  return ComplexBF::of(head_re, head_im, prec) + BigFloat::of(log_coef, prec) * lg;
}

LateTermModel model_for(const ProblemSpec& spec, unsigned prec) {
  spec.validate();
  LateTermModel m;
  m.problem = spec.kind;
  switch (spec.kind) {
    case Problem::BlackHole:
      //   omega_n ~ (-1)^n Gamma(n) / (2 sqrt(2) pi)
      m.exact_k = SymbolicReal{Rational(1, 2), -1, 0, -2};
      m.exact_chi = Rational(-1);
      m.terms.push_back({ComplexBF(m.exact_k->value(prec), BigFloat(prec)),
                         ComplexBF::of(*m.exact_chi, Rational(0), prec), Rational(0)});
      break;
    case Problem::Anharmonic:
      //   lambda_n ~ (-1)^{n+1} sqrt(6) 3^n Gamma(n + 1/2) / pi^{3/2}
      m.exact_k = SymbolicReal{Rational(-1), 1, 1, -3};
      m.exact_chi = Rational(-1, 3);
      m.terms.push_back({ComplexBF(m.exact_k->value(prec), BigFloat(prec)),
                         ComplexBF::of(*m.exact_chi, Rational(0), prec), Rational(1, 2)});
      break;
    case Problem::Rossby:
      //   lambda_n ~ Gamma(n - 1/2) / sqrt(pi)
      m.exact_k = SymbolicReal{Rational(1), 0, 0, -1};
      m.exact_chi = Rational(1);
      m.terms.push_back({ComplexBF(m.exact_k->value(prec), BigFloat(prec)),
                         ComplexBF::of(*m.exact_chi, Rational(0), prec), Rational(-1, 2)});
      break;
    case Problem::TwoPole: {
      //   omega_n ~ 2 Re[ K Gamma(n) / chi0^n ],  K = i b / (sqrt(2) pi (c + i b))
      ComplexBF num = ComplexBF::of(Rational(0), spec.b, prec);
      BigFloat s2pi = BigFloat::of(2L, prec).sqrt() * BigFloat::pi(prec);
      ComplexBF den = s2pi * ComplexBF::of(spec.c, spec.b, prec);
      m.conjugate_pair = true;
      m.terms.push_back({num / den, compute_chi0(spec.b, spec.c, prec), Rational(0)});
      break;
    }
  }
  return m;
}

BigFloat eval_model(const LateTermModel& model, unsigned long n, unsigned prec) {
  require_order(n);
  BigFloat sum(prec);
  for (const auto& t : model.terms) {
    ComplexBF v = term_log(t, n, prec).exp();
    sum = sum + (model.conjugate_pair ? v.re.mul_2exp(1) : v.re);
  }
  return sum;
}

ComplexBF eval_model_complex(const LateTermModel& model, unsigned long n, unsigned prec) {
  require_order(n);
  ComplexBF sum(prec);
  for (const auto& t : model.terms) {
    sum = sum + term_log(t, n, prec).exp();
    if (model.conjugate_pair) {
      LateTermTerm cj{t.K.conj(), t.chi.conj(), t.gamma};
      sum = sum + term_log(cj, n, prec).exp();
    }
  }
  return sum;
}

bool has_exact_form(const LateTermModel& model) {
  return model.exact_k.has_value() && model.exact_chi.has_value() &&
         model.terms.size() == 1 && !model.conjugate_pair;
}

Rational exact_rational_part(const LateTermModel& model, unsigned long n) {
  if (!has_exact_form(model)) throw std::invalid_argument("model has no exact factored form");
  if (n < 2) throw std::invalid_argument("late-term evaluation requires n >= 2");
  const Rational& g = model.terms[0].gamma;
  Rational gamma_rat;
  if (g == Rational(0)) {
    gamma_rat = Rational(factorial(n - 1), Integer(1));
  } else if (g == Rational(1, 2)) {
    gamma_rat = gamma_half_ratio(n);
  } else if (g == Rational(-1, 2)) {
    gamma_rat = gamma_half_ratio(n - 1);
  } else {
    throw std::invalid_argument("unsupported gamma offset for exact evaluation");
  }
  return model.exact_k->coef * gamma_rat * model.exact_chi->pow(-static_cast<long>(n));
}

namespace {
int effective_pi_half(const LateTermModel& model) {
  // A half-integer gamma contributes one sqrt(pi) through Gamma(m + 1/2).
  bool half = !model.terms[0].gamma.is_integer();
  return model.exact_k->pi_half + (half ? 1 : 0);
}
}  // namespace

bool exact_transcendental_is_one(const LateTermModel& model) {
  if (!has_exact_form(model)) return false;
  return model.exact_k->two_half == 0 && model.exact_k->three_half == 0 &&
         effective_pi_half(model) == 0;
}

BigFloat exact_transcendental_factor(const LateTermModel& model, unsigned prec) {
  if (!has_exact_form(model)) throw std::invalid_argument("model has no exact factored form");
  BigFloat v = BigFloat::of(1L, prec);
  const auto& k = *model.exact_k;
  if (k.two_half != 0) v = v * half_power(BigFloat::of(2L, prec), k.two_half);
  if (k.three_half != 0) v = v * half_power(BigFloat::of(3L, prec), k.three_half);
  int ph = effective_pi_half(model);
  if (ph != 0) v = v * half_power(BigFloat::pi(prec), ph);
  return v;
}

}  // namespace lateterms
