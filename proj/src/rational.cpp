#include "lateterms/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lateterms {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(whole);
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw std::domain_error("zero to a negative power");
  Integer num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::to_string() const {
  return v_.get_str();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
  }

  // Exact decimal: [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::string_view s = text;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    Integer e = parse_integer(s.substr(epos + 1), text);
    if (!e.fits_slong_p()) bad_number(text);
    exp10 = e.get_si();
    s = s.substr(0, epos);
  }
  std::string digits;
  unsigned long frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_number(text);
    if (!ip.empty() && !all_digits(ip)) bad_number(text);
    if (!fp.empty() && !all_digits(fp)) bad_number(text);
    digits = std::string(ip) + std::string(fp);
    frac_len = fp.size();
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  Integer mant(digits.empty() ? "0" : digits, 10);
  if (neg) mant = -mant;
  long net = exp10 - static_cast<long>(frac_len);
  if (net >= 0) return Rational(Integer(mant * pow10(static_cast<unsigned long>(net))), Integer(1));
  return Rational(mant, pow10(static_cast<unsigned long>(-net)));
}

Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

Rational gamma_half_ratio(unsigned long m) {
  // (2m)! / (4^m m!)
  Integer num = factorial(2 * m);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, m);
  den *= factorial(m);
  return Rational(num, den);
}

}  // namespace lateterms
