#pragma once

#include "lateterms/bigfloat.hpp"

namespace lateterms {

// Complex value over BigFloat. log/arg use the principal branch,
// Im(log z) in (-pi, pi].
struct ComplexBF {
  BigFloat re;
  BigFloat im;

  explicit ComplexBF(unsigned prec = kDefaultPrecisionBits) : re(prec), im(prec) {}
  ComplexBF(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  static ComplexBF of(const Rational& real, const Rational& imag,
                      unsigned prec = kDefaultPrecisionBits) {
    return ComplexBF(BigFloat::of(real, prec), BigFloat::of(imag, prec));
  }

  bool is_real() const { return im.is_zero(); }

  ComplexBF conj() const { return ComplexBF(re, -im); }
  BigFloat modulus() const;
  BigFloat arg() const { return atan2(im, re); }
  ComplexBF log() const;  // principal branch; throws on zero
  ComplexBF exp() const;

  friend ComplexBF operator+(const ComplexBF& a, const ComplexBF& b) {
    return ComplexBF(a.re + b.re, a.im + b.im);
  }
  friend ComplexBF operator-(const ComplexBF& a, const ComplexBF& b) {
    return ComplexBF(a.re - b.re, a.im - b.im);
  }
  friend ComplexBF operator*(const ComplexBF& a, const ComplexBF& b) {
    return ComplexBF(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend ComplexBF operator/(const ComplexBF& a, const ComplexBF& b);
  friend ComplexBF operator*(const BigFloat& s, const ComplexBF& z) {
    return ComplexBF(s * z.re, s * z.im);
  }
  friend ComplexBF operator-(const ComplexBF& z) { return ComplexBF(-z.re, -z.im); }
};

}  // namespace lateterms
