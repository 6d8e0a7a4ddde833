#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropos {

// Arbitrary-precision rational scalar. All exact arithmetic in the library
// runs on this type; doubles appear only in the numeric evaluation paths.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
  return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline double rat_double(const Rational& q) { return q.get_d(); }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

inline long rat_to_long(const Rational& q) {
  if (!rat_is_integer(q)) throw std::domain_error("rat_to_long: not an integer");
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("rat_to_long: overflow");
  return q.get_num().get_si();
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

using Complex = std::complex<double>;

inline Complex cpow_long(const Complex& z, long e) {
  if (e == 0) return Complex(1.0, 0.0);
  Complex b = e > 0 ? z : Complex(1.0, 0.0) / z;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Complex acc(1.0, 0.0);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace tropos
