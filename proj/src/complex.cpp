#include "lateterms/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace lateterms {

BigFloat ComplexBF::modulus() const {
  BigFloat r(std::max(re.precision(), im.precision()));
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

ComplexBF ComplexBF::log() const {
  if (re.is_zero() && im.is_zero()) throw std::domain_error("log of complex zero");
  return ComplexBF(modulus().log(), arg());
}

ComplexBF ComplexBF::exp() const {
  BigFloat mag = re.exp();
  return ComplexBF(mag * im.cos(), mag * im.sin());
}

ComplexBF operator/(const ComplexBF& a, const ComplexBF& b) {
  if (b.re.is_zero() && b.im.is_zero()) throw std::domain_error("complex division by zero");
  BigFloat d = b.re * b.re + b.im * b.im;
  return ComplexBF((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

}  // namespace lateterms
