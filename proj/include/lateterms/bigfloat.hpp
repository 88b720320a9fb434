#pragma once

#include <mpfr.h>

#include <string>

#include "lateterms/rational.hpp"

namespace lateterms {

inline constexpr unsigned kDefaultPrecisionBits = 256;

// Arbitrary-precision binary float. Each value carries its own mantissa
// width; binary operations round to the wider of the two. The exponent range
// is MPFR's (|x| up to ~2^(2^62)), so quantities like Gamma(80) are fine.
class BigFloat {
public:
  explicit BigFloat(unsigned prec = kDefaultPrecisionBits) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long v, unsigned prec = kDefaultPrecisionBits);
  static BigFloat of(double v, unsigned prec = kDefaultPrecisionBits);
  // Correctly rounded at the requested precision.
  static BigFloat of(const Rational& v, unsigned prec = kDefaultPrecisionBits);
  static BigFloat of(const Integer& v, unsigned prec = kDefaultPrecisionBits);
  static BigFloat pi(unsigned prec = kDefaultPrecisionBits);
  static BigFloat nan(unsigned prec = kDefaultPrecisionBits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat abs() const;
  BigFloat sqrt() const;  // x >= 0
  BigFloat exp() const;
  BigFloat log() const;   // x > 0, throws std::domain_error otherwise
  BigFloat cos() const;
  BigFloat sin() const;
  BigFloat pow_int(long e) const;
  BigFloat mul_2exp(long e) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Deterministic decimal rendering with the given number of significant
  // digits ("%.*Rg": trailing zeros trimmed).
  std::string to_string(unsigned sig_digits) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);

private:
  mpfr_t v_;
};

// ln Gamma(x) for x > 0; throws std::domain_error on nonpositive arguments.
BigFloat log_gamma(const BigFloat& x);

// base^(half_exponent/2) for base > 0.
BigFloat half_power(const BigFloat& base, int half_exponent);

}  // namespace lateterms
