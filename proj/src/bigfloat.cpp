#include "lateterms/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace lateterms {

namespace {
unsigned max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::of(long v, unsigned prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(double v, unsigned prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& v, unsigned prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Integer& v, unsigned prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(unsigned prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::nan(unsigned prec) {
  BigFloat r(prec);
  mpfr_set_nan(r.v_);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("sqrt of negative value");
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  if (sign() <= 0) throw std::domain_error("log of nonpositive value");
  BigFloat r(precision());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::cos() const {
  BigFloat r(precision());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin() const {
  BigFloat r(precision());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_int(long e) const {
  BigFloat r(precision());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul_2exp(long e) const {
  BigFloat r(precision());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(unsigned sig_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(sig_digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log_gamma(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("log_gamma requires a positive argument");
  BigFloat r(x.precision());
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat half_power(const BigFloat& base, int half_exponent) {
  if (base.sign() <= 0) throw std::domain_error("half_power requires a positive base");
  long q = half_exponent / 2;
  int r = half_exponent % 2;  // -1, 0, or 1
  BigFloat out = base.pow_int(q);
  if (r == 1) out = out * base.sqrt();
  if (r == -1) out = out / base.sqrt();
  return out;
}

}  // namespace lateterms
