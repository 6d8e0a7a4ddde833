#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "tropos/positive.hpp"

namespace tropos {

// Integer linear form <a, xi>; no constant term exists structurally, so
// every tropicalized function is homogeneous.
using IntForm = std::vector<long>;

inline Rational form_eval(const IntForm& a, const std::vector<Rational>& xi) {
  if (a.size() != xi.size()) throw std::invalid_argument("form_eval: dimension mismatch");
  Rational v(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v += Rational(a[i]) * xi[i];
  return v;
}

inline double form_eval_d(const IntForm& a, const std::vector<double>& xi) {
  double v = 0;
  for (size_t i = 0; i < a.size(); ++i) v += double(a[i]) * xi[i];
  return v;
}

// Max of finitely many integer linear forms; duplicates are removed by the
// set representation.
class TropPolynomial {
 public:
  explicit TropPolynomial(int dim) : dim_(dim) {}
  TropPolynomial(int dim, std::set<IntForm> forms) : dim_(dim), forms_(std::move(forms)) {
    for (const auto& f : forms_)
      if ((int)f.size() != dim_) throw std::invalid_argument("TropPolynomial: bad form");
    if (forms_.empty()) throw std::invalid_argument("TropPolynomial: needs >= 1 form");
  }
  static TropPolynomial zero_form(int dim) {
    return TropPolynomial(dim, {IntForm(dim, 0)});
  }

  int dim() const { return dim_; }
  const std::set<IntForm>& forms() const { return forms_; }

  Rational eval(const std::vector<Rational>& xi) const {
    bool first = true;
    Rational best(0);
    for (const auto& f : forms_) {
      Rational v = form_eval(f, xi);
      if (first || v > best) best = v;
      first = false;
    }
    return best;
  }

  // Tropical sum (pointwise max): union of forms.
  friend TropPolynomial trop_max(const TropPolynomial& a, const TropPolynomial& b) {
    TropPolynomial r(a.dim_);
    r.forms_ = a.forms_;
    r.forms_.insert(b.forms_.begin(), b.forms_.end());
    return r;
  }
  // Tropical product (pointwise +): Minkowski sum of form sets.
  friend TropPolynomial trop_add(const TropPolynomial& a, const TropPolynomial& b) {
    TropPolynomial r(a.dim_);
    for (const auto& fa : a.forms_)
      for (const auto& fb : b.forms_) {
        IntForm f(a.dim_);
        for (int i = 0; i < a.dim_; ++i) f[i] = fa[i] + fb[i];
        r.forms_.insert(std::move(f));
      }
    return r;
  }
  // n >= 0 tropical power: n * max = max of n-scaled forms.
  TropPolynomial scale(long n) const {
    if (n < 0) throw std::invalid_argument("TropPolynomial::scale: n must be >= 0");
    TropPolynomial r(dim_);
    for (const auto& f : forms_) {
      IntForm g(dim_);
      for (int i = 0; i < dim_; ++i) g[i] = n * f[i];
      r.forms_.insert(std::move(g));
    }
    return r;
  }

  bool operator==(const TropPolynomial& o) const {
    return dim_ == o.dim_ && forms_ == o.forms_;
  }

 private:
  int dim_;
  std::set<IntForm> forms_;
};

// Difference of two max-of-forms; the value at xi is pos(xi) - neg(xi).
class TropRational {
 public:
  TropRational(TropPolynomial pos, TropPolynomial neg)
      : pos_(std::move(pos)), neg_(std::move(neg)) {
    if (pos_.dim() != neg_.dim()) throw std::invalid_argument("TropRational: dim mismatch");
  }
  static TropRational zero(int dim) {
    return TropRational(TropPolynomial::zero_form(dim), TropPolynomial::zero_form(dim));
  }
  static TropRational linear(const IntForm& a) {
    TropPolynomial p((int)a.size(), {a});
    return TropRational(std::move(p), TropPolynomial::zero_form((int)a.size()));
  }

  int dim() const { return pos_.dim(); }
  const TropPolynomial& pos() const { return pos_; }
  const TropPolynomial& neg() const { return neg_; }

  Rational eval(const std::vector<Rational>& xi) const { return pos_.eval(xi) - neg_.eval(xi); }

  friend TropRational trop_mul(const TropRational& a, const TropRational& b) {
    return TropRational(trop_add(a.pos_, b.pos_), trop_add(a.neg_, b.neg_));
  }
  friend TropRational trop_div(const TropRational& a, const TropRational& b) {
    return TropRational(trop_add(a.pos_, b.neg_), trop_add(a.neg_, b.pos_));
  }
  // max(a, b) with common denominator: max(A-B, C-D) = max(A+D, C+B) - (B+D).
  friend TropRational trop_max(const TropRational& a, const TropRational& b) {
    return TropRational(trop_max(trop_add(a.pos_, b.neg_), trop_add(b.pos_, a.neg_)),
                        trop_add(a.neg_, b.neg_));
  }
  TropRational scale(long n) const {
    if (n >= 0) return TropRational(pos_.scale(n), neg_.scale(n));
    return TropRational(neg_.scale(-n), pos_.scale(-n));
  }

  // Syntactic equality only; semantic (pointwise) equality is trop_equal in
  // cones.hpp, which needs the exact LP.
  bool same_representation(const TropRational& o) const {
    return pos_ == o.pos_ && neg_ == o.neg_;
  }

 private:
  TropPolynomial pos_, neg_;
};

// Step 1 + Step 2: numerator exponents become the max-plus numerator,
// denominator exponents the max-plus denominator.
inline TropRational tropicalize(const PositiveRational& f) {
  int dim = f.nvars();
  std::set<IntForm> pos, neg;
  for (const auto& [e, c] : f.num().terms()) pos.insert(IntForm(e.begin(), e.end()));
  for (const auto& [e, c] : f.den().terms()) neg.insert(IntForm(e.begin(), e.end()));
  return TropRational(TropPolynomial(dim, std::move(pos)), TropPolynomial(dim, std::move(neg)));
}

inline Rational trop_eval(const TropRational& t, const std::vector<Rational>& xi) {
  if ((int)xi.size() != t.dim()) throw std::invalid_argument("trop_eval: dimension mismatch");
  return t.eval(xi);
}

// Piecewise-linear lattice map: tuple of TropRationals over one domain.
class PLMap {
 public:
  PLMap(int domain_dim, std::vector<TropRational> comps)
      : domain_dim_(domain_dim), comps_(std::move(comps)) {
    for (const auto& c : comps_)
      if (c.dim() != domain_dim_) throw std::invalid_argument("PLMap: component dim");
  }
  static PLMap identity(int dim) {
    std::vector<TropRational> comps;
    for (int i = 0; i < dim; ++i) {
      IntForm e(dim, 0);
      e[i] = 1;
      comps.push_back(TropRational::linear(e));
    }
    return PLMap(dim, std::move(comps));
  }
  static PLMap tropicalize_map(const std::vector<PositiveRational>& comps) {
    if (comps.empty()) throw std::invalid_argument("tropicalize_map: empty");
    std::vector<TropRational> t;
    for (const auto& c : comps) t.push_back(tropicalize(c));
    return PLMap(comps[0].nvars(), std::move(t));
  }

  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return (int)comps_.size(); }
  const std::vector<TropRational>& comps() const { return comps_; }

  std::vector<Rational> eval(const std::vector<Rational>& xi) const {
    std::vector<Rational> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.eval(xi));
    return out;
  }

 private:
  int domain_dim_;
  std::vector<TropRational> comps_;
};

// Substitutes G's components into one integer linear form by max-plus
// arithmetic: sum of n-fold tropical powers.
inline TropRational trop_linear_substitute(const IntForm& form,
                                           const std::vector<TropRational>& g) {
  if (form.size() != g.size())
    throw std::invalid_argument("trop_linear_substitute: arity mismatch");
  int dim = g.empty() ? 0 : g[0].dim();
  TropRational acc = TropRational::zero(dim);
  for (size_t i = 0; i < form.size(); ++i)
    if (form[i] != 0) acc = trop_mul(acc, g[i].scale(form[i]));
  return acc;
}

// Symbolic max-plus substitution; pointwise (F o G)(xi) = F(G(xi)).
inline PLMap pl_compose(const PLMap& f, const PLMap& g) {
  if (g.codomain_dim() != f.domain_dim())
    throw std::invalid_argument("pl_compose: dimension mismatch");
  int dim = g.domain_dim();
  auto subst_poly = [&](const TropPolynomial& p) {
    bool first = true;
    TropRational acc = TropRational::zero(dim);
    for (const auto& form : p.forms()) {
      TropRational t = trop_linear_substitute(form, g.comps());
      acc = first ? t : trop_max(acc, t);
      first = false;
    }
    return acc;
  };
  std::vector<TropRational> comps;
  for (const auto& c : f.comps()) {
    TropRational p = subst_poly(c.pos());
    TropRational n = subst_poly(c.neg());
    comps.push_back(trop_div(p, n));
  }
  return PLMap(dim, std::move(comps));
}

}  // namespace tropos
