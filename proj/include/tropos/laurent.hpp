#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tropos/rational.hpp"

namespace tropos {

// Exponent vector of a Laurent monomial. Length is fixed by the ambient
// ring; componentwise add/negate are total. Keys are ordered
// lexicographically (std::vector's operator<), which fixes the global term
// order used for serialization and for division.
using ExpVec = std::vector<long>;

inline ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("poly_divide_exact: no exact Laurent quotient") {}
};

// Sparse multivariate Laurent polynomial over Rational. Zero coefficients
// are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() : nvars_(0) {}
  explicit LaurentPolynomial(int nvars) : nvars_(nvars) {}

  static LaurentPolynomial constant(int nvars, const Rational& c) {
    LaurentPolynomial p(nvars);
    if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
  }
  static LaurentPolynomial variable(int nvars, int i, long power = 1) {
    LaurentPolynomial p(nvars);
    ExpVec e(nvars, 0);
    e.at(i) = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }
  static LaurentPolynomial monomial(int nvars, const ExpVec& e, const Rational& c) {
    LaurentPolynomial p(nvars);
    if ((int)e.size() != nvars) throw std::invalid_argument("monomial: arity mismatch");
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0));
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("constant_value: not constant");
    return terms_.begin()->second;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // All stored coefficients strictly positive (and at least one term).
  bool is_coefficient_positive() const {
    if (terms_.empty()) return false;
    for (const auto& [e, c] : terms_)
      if (c <= 0) return false;
    return true;
  }

  void add_term(const ExpVec& e, const Rational& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("add_term: arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, Rational(-c));
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_arity(b);
    LaurentPolynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(expvec_add(ea, eb), ca * cb);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  LaurentPolynomial scaled(const Rational& c) const {
    LaurentPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }
  LaurentPolynomial shifted(const ExpVec& by) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, k] : terms_) r.terms_.emplace(expvec_add(e, by), k);
    return r;
  }

  bool operator==(const LaurentPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  // Exact evaluation; point coordinates must be nonzero wherever a negative
  // exponent occurs.
  Rational eval(const std::vector<Rational>& x) const {
    if ((int)x.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= rat_pow(x[i], e[i]);
      acc += t;
    }
    return acc;
  }

  Complex eval_complex(const std::vector<Complex>& x) const {
    if ((int)x.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
      Complex t(rat_double(c), 0.0);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= cpow_long(x[i], e[i]);
      acc += t;
    }
    return acc;
  }

  // Scaled-exponent evaluation at x_k = exp(s*xi_k + i*nu_k), returned as
  // (log|value|, arg value). Factors out the dominant exponent so the sum
  // stays in range for large s.
  std::pair<double, double> eval_log_scaled(double s, const std::vector<double>& xi,
                                            const std::vector<double>& nu) const {
    if ((int)xi.size() != nvars_ || (int)nu.size() != nvars_)
      throw std::invalid_argument("eval_log_scaled: arity mismatch");
    if (terms_.empty()) throw std::domain_error("eval_log_scaled: zero polynomial");
    double mx = -1e300;
    for (const auto& [e, c] : terms_) {
      double re = std::log(std::abs(rat_double(c)));
      for (int i = 0; i < nvars_; ++i) re += s * e[i] * xi[i];
      mx = std::max(mx, re);
    }
    Complex acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
      double re = std::log(std::abs(rat_double(c)));
      double im = rat_double(c) < 0 ? 3.14159265358979323846 : 0.0;
      for (int i = 0; i < nvars_; ++i) {
        re += s * e[i] * xi[i];
        im += e[i] * nu[i];
      }
      acc += std::exp(re - mx) * Complex(std::cos(im), std::sin(im));
    }
    return {mx + std::log(std::abs(acc)), std::arg(acc)};
  }

  // Collects the coefficient of var^k as a polynomial in the remaining
  // variables (the var slot of the result's exponents is zeroed).
  LaurentPolynomial coefficient_of(int var, long k) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (e[var] == k) {
        ExpVec e2 = e;
        e2[var] = 0;
        r.add_term(e2, c);
      }
    return r;
  }

  std::pair<long, long> degree_range(int var) const {
    if (terms_.empty()) throw std::domain_error("degree_range: zero polynomial");
    long lo = terms_.begin()->first[var], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[var]);
      hi = std::max(hi, e[var]);
    }
    return {lo, hi};
  }

  // Renumbers variables into a wider ring: old var i maps to slot map[i].
  LaurentPolynomial embed(int new_nvars, const std::vector<int>& map) const {
    if ((int)map.size() != nvars_) throw std::invalid_argument("embed: map arity");
    LaurentPolynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
      ExpVec e2(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) e2.at(map[i]) = e[i];
      r.add_term(e2, c);
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_arity(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("laurent: arity mismatch");
  }
  int nvars_;
  std::map<ExpVec, Rational> terms_;
};

// Exact Laurent division: returns r with p = q*r, or throws NotDivisible.
// Leading-term elimination in lex order; candidate quotient terms are
// confined to the Minkowski-difference box of the Newton polytopes, which
// both certifies failure and bounds the loop.
inline LaurentPolynomial poly_divide_exact(const LaurentPolynomial& p,
                                           const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("poly_divide_exact: zero divisor");
  int nv = p.nvars();
  LaurentPolynomial quot(nv);
  if (p.is_zero()) return quot;
  std::vector<long> qlo(nv), qhi(nv);
  for (int v = 0; v < nv; ++v) {
    auto [plo, phi] = p.degree_range(v);
    auto [dlo, dhi] = q.degree_range(v);
    qlo[v] = plo - dlo;
    qhi[v] = phi - dhi;
    if (qlo[v] > qhi[v]) throw NotDivisible();
  }
  LaurentPolynomial rem = p;
  const auto& dlead = *q.terms().rbegin();  // lex-largest term of divisor
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    ExpVec te = expvec_sub(rlead.first, dlead.first);
    for (int v = 0; v < nv; ++v)
      if (te[v] < qlo[v] || te[v] > qhi[v]) throw NotDivisible();
    Rational tc = rlead.second / dlead.second;
    quot.add_term(te, tc);
    rem -= q.shifted(te).scaled(tc);
  }
  return quot;
}

inline std::string LaurentPolynomial::str(const std::vector<std::string>& names) const {
  auto var_name = [&](int i) {
    if (i < (int)names.size()) return names[i];
    std::ostringstream os;
    os << "x" << (i + 1);
    return os.str();
  };
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lex so leading terms print first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) {
        if (any_var) vars << "*";
        vars << var_name(i);
        if (e[i] != 1) vars << "^" << e[i];
        any_var = true;
      }
    if (!any_var) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << vars.str();
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.str();
}

}  // namespace tropos
