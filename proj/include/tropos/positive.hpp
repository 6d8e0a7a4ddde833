#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropos/laurent.hpp"

namespace tropos {

struct DenominatorZero : std::runtime_error {
  DenominatorZero() : std::runtime_error("eval: denominator vanishes at the point") {}
};

// Subtraction-free presentation of a positive rational function: a pair of
// coefficient-positive Laurent polynomials. No gcd cancellation is ever
// performed implicitly; tropicalization is representation-independent, and
// cancellation could destroy manifest positivity. poly_divide_exact is the
// only reduction path.
class PositiveRational {
 public:
  PositiveRational() = default;

  PositiveRational(LaurentPolynomial num, LaurentPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
      throw std::invalid_argument("PositiveRational: arity mismatch");
    if (!num_.is_coefficient_positive() || !den_.is_coefficient_positive())
      throw std::invalid_argument("PositiveRational: not subtraction-free");
  }

  static PositiveRational from_poly(LaurentPolynomial num) {
    int nv = num.nvars();
    return PositiveRational(std::move(num), LaurentPolynomial::constant(nv, Rational(1)));
  }
  static PositiveRational constant(int nvars, const Rational& c) {
    if (c <= 0) throw std::invalid_argument("PositiveRational: constant must be > 0");
    return from_poly(LaurentPolynomial::constant(nvars, c));
  }
  static PositiveRational variable(int nvars, int i, long power = 1) {
    return from_poly(LaurentPolynomial::variable(nvars, i, power));
  }

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  friend PositiveRational operator+(const PositiveRational& f, const PositiveRational& g) {
    return PositiveRational(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend PositiveRational operator*(const PositiveRational& f, const PositiveRational& g) {
    return PositiveRational(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend PositiveRational operator/(const PositiveRational& f, const PositiveRational& g) {
    return PositiveRational(f.num_ * g.den_, f.den_ * g.num_);
  }
  PositiveRational inverse() const { return PositiveRational(den_, num_); }

  PositiveRational pow(long e) const {
    PositiveRational acc = constant(nvars(), Rational(1));
    PositiveRational b = e >= 0 ? *this : inverse();
    long k = e >= 0 ? e : -e;
    for (long i = 0; i < k; ++i) acc = acc * b;
    return acc;
  }

  // Equality as rational functions (cross multiplication).
  bool equals(const PositiveRational& o) const { return num_ * o.den_ == o.num_ * den_; }

  // Reduces to a single Laurent polynomial when the denominator divides the
  // numerator exactly; the result need not be coefficient-positive.
  LaurentPolynomial reduce_to_polynomial() const { return poly_divide_exact(num_, den_); }

  Rational eval(const std::vector<Rational>& x) const {
    for (const auto& c : x)
      if (c <= 0)
        throw std::invalid_argument("PositiveRational::eval: point must be positive");
    return num_.eval(x) / den_.eval(x);
  }

  Complex eval_complex(const std::vector<Complex>& x) const {
    Complex d = den_.eval_complex(x);
    if (std::abs(d) < 1e-300) throw DenominatorZero();
    return num_.eval_complex(x) / d;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    std::string s = "(" + num_.str(names) + ")";
    if (!(den_.is_constant() && den_.constant_value() == 1))
      s += "/(" + den_.str(names) + ")";
    return s;
  }

 private:
  LaurentPolynomial num_, den_;
};

// Substitution f(comps_1, ..., comps_m); the result is f as a rational
// function of the inner variables, subtraction-free by construction.
inline PositiveRational substitute(const PositiveRational& f,
                                   const std::vector<PositiveRational>& comps) {
  if ((int)comps.size() != f.nvars())
    throw std::invalid_argument("substitute: arity mismatch");
  int inner = comps.empty() ? 0 : comps[0].nvars();
  for (const auto& c : comps)
    if (c.nvars() != inner) throw std::invalid_argument("substitute: component arity");
  auto eval_poly = [&](const LaurentPolynomial& p) {
    PositiveRational acc = PositiveRational::constant(inner, Rational(1));
    bool empty = true;
    for (const auto& [e, c] : p.terms()) {
      PositiveRational term = PositiveRational::constant(inner, c);
      for (int i = 0; i < p.nvars(); ++i)
        if (e[i] != 0) term = term * comps[i].pow(e[i]);
      acc = empty ? term : acc + term;
      empty = false;
    }
    if (empty) throw std::invalid_argument("substitute: zero polynomial");
    return acc;
  };
  return eval_poly(f.num()) / eval_poly(f.den());
}

// f = plus - minus with each side subtraction-free; absent sides denote 0.
struct SignedPositiveSum {
  std::optional<PositiveRational> plus, minus;

  Rational eval(const std::vector<Rational>& x) const {
    Rational v(0);
    if (plus) v += plus->eval(x);
    if (minus) v -= minus->eval(x);
    return v;
  }
  Complex eval_complex(const std::vector<Complex>& x) const {
    Complex v(0.0, 0.0);
    if (plus) v += plus->eval_complex(x);
    if (minus) v -= minus->eval_complex(x);
    return v;
  }
};

}  // namespace tropos
