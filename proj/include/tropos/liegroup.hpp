#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropos/positive.hpp"

namespace tropos {

struct NotReduced : std::runtime_error {
  NotReduced() : std::runtime_error("word is not a double reduced word") {}
};
struct NoMoveHere : std::runtime_error {
  NoMoveHere() : std::runtime_error("no braid or commuting move at this position") {}
};
struct NotDecomposable : std::runtime_error {
  explicit NotDecomposable(int k)
      : std::runtime_error("leading principal minor " + std::to_string(k) + " vanishes"),
        index(k) {}
  int index;
};
struct ZeroDerivative : std::runtime_error {
  ZeroDerivative() : std::runtime_error("iterated derivative vanishes identically") {}
};

// Element of S_n acting on {1..n}; composition is right-to-left.
class Permutation {
 public:
  explicit Permutation(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }
  static Permutation from_images_one_based(const std::vector<int>& images);
  static Permutation simple(int n, int i);  // s_i = (i, i+1), 1 <= i <= n-1
  static Permutation longest(int n);        // w_0: i -> n+1-i

  int n() const { return (int)img_.size(); }
  int apply(int i) const { return img_.at(i - 1) + 1; }  // 1-based
  Permutation operator*(const Permutation& o) const {    // (p*q)(x) = p(q(x))
    Permutation r(n());
    for (int i = 0; i < n(); ++i) r.img_[i] = img_[o.img_[i]];
    return r;
  }
  Permutation inverse() const {
    Permutation r(n());
    for (int i = 0; i < n(); ++i) r.img_[img_[i]] = i;
    return r;
  }
  int length() const {  // inversion count
    int c = 0;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img_[i] != i) return false;
    return true;
  }
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;  // 0-based images
};

Permutation word_to_perm(int n, const std::vector<int>& word);
bool is_reduced_word(int n, const std::vector<int>& word);
std::vector<int> canonical_reduced_word(const Permutation& w);
std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap = 0);

// Minimal dense square matrix over an arbitrary commutative ring scalar.
template <class S>
struct SqMat {
  int n = 0;
  std::vector<S> e;

  SqMat() = default;
  SqMat(int n_, const S& fill) : n(n_), e(n_ * n_, fill) {}
  S& operator()(int i, int j) { return e[i * n + j]; }
  const S& operator()(int i, int j) const { return e[i * n + j]; }
};

template <class S>
SqMat<S> matmul(const SqMat<S>& a, const SqMat<S>& b, const S& zero) {
  SqMat<S> r(a.n, zero);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const S& aik = a(i, k);
      for (int j = 0; j < a.n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

// Determinant of the submatrix with the given ordered row/column index
// lists (0-based), by Leibniz expansion; fine for k <= 4.
template <class S>
S det_ordered(const SqMat<S>& m, const std::vector<int>& rows, const std::vector<int>& cols,
              const S& zero) {
  int k = (int)rows.size();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  S acc = zero;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    S term = m(rows[0], cols[perm[0]]);
    for (int i = 1; i < k; ++i) term = term * m(rows[i], cols[perm[i]]);
    if (inv % 2)
      acc -= term;
    else
      acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

using RatMat = SqMat<Rational>;
using PolyMat = SqMat<LaurentPolynomial>;
using CMat = SqMat<Complex>;

RatMat rat_identity(int n);
RatMat chevalley_e(int n, int i, int j);  // elementary matrix E_ij (1-based)
RatMat coroot_h(int n, int i);            // E_ii - E_{i+1,i+1}

// Chart factor matrices over a ring with nvars variables; var is the slot
// of the parameter.
PolyMat elem_upper(int n, int i, int nvars, int var);   // e_i(t_var)
PolyMat elem_lower(int n, int i, int nvars, int var);   // f_i(t_var)
PolyMat torus_factor(int n, int i, int nvars, int var); // h_i(t_var) = diag(1,..,t,t^{-1},..,1)

// theta chart of a double word: product of e_{i_k}(t_k) (e_{-i} = f_i),
// followed by h_1(t_{m+1})...h_{n-1}(t_{m+n-1}) when include_torus.
// Validates that the word is double reduced.
PolyMat theta_chart(int n, const std::vector<int>& word, bool include_torus);

// Same chart with variables embedded into a wider ring: parameter j of the
// chart lives in variable slot var_map[j].
PolyMat theta_chart_embedded(int n, const std::vector<int>& word, bool include_torus,
                             int nvars, const std::vector<int>& var_map);

CMat eval_chart(const PolyMat& m, const std::vector<Complex>& x);
RatMat eval_chart_exact(const PolyMat& m, const std::vector<Rational>& x);

LaurentPolynomial det_poly(const PolyMat& m);

// Generalized minor Delta_{u omega_k, v omega_k}: the [u^-1 x v]_0^{omega_k}
// normalization realized as a signed minor on rows u({1..k}), columns
// v({1..k}); the sign comes from the standard lifts s_i -> [[0,-1],[1,0]].
struct MinorSpec {
  Permutation u, v;
  int k;
  MinorSpec(Permutation u_, Permutation v_, int k_) : u(std::move(u_)), v(std::move(v_)), k(k_) {
    if (k < 1 || k >= u.n()) throw std::invalid_argument("MinorSpec: k out of range");
  }
};

RatMat weyl_lift(const Permutation& w);  // product of s_i lifts, word independent
int minor_sign(const Permutation& u, const Permutation& v, int k);

template <class S>
S generalized_minor(const MinorSpec& spec, const SqMat<S>& m, const S& zero) {
  std::vector<int> rows, cols;
  for (int a = 1; a <= spec.k; ++a) {
    rows.push_back(spec.u.apply(a) - 1);
    cols.push_back(spec.v.apply(a) - 1);
  }
  S d = det_ordered(m, rows, cols, zero);
  int s = minor_sign(spec.u, spec.v, spec.k);
  if (s < 0) d = zero - d;
  return d;
}

// x = [x]_- [x]_0 [x]_+ (lower unipotent, diagonal, upper unipotent).
struct GaussFactors {
  RatMat lower, diag, upper;
};
GaussFactors gaussian_decompose(const RatMat& m);
struct GaussFactorsC {
  CMat lower, diag, upper;
};
GaussFactorsC gaussian_decompose(const CMat& m);

// First-order coefficient of Delta((I + eps X) M) (left) or
// Delta(M (I + eps X)) (right).
LaurentPolynomial left_derivative(const RatMat& x, const MinorSpec& spec, const PolyMat& m);
LaurentPolynomial right_derivative(const RatMat& x, const MinorSpec& spec, const PolyMat& m);

// E_{j_1} ... E_{j_p} Delta (M) for root vectors X_1..X_p given outermost
// first: the coefficient of q_1...q_p in Delta(e(q_1) ... e(q_p) M).
LaurentPolynomial iterated_left_derivative(const std::vector<RatMat>& xs, const MinorSpec& spec,
                                           const PolyMat& m);

// Weights as traceless vectors in Q^n.
using WeightVector = std::vector<Rational>;
WeightVector fundamental_weight(int n, int k);
WeightVector weight_apply(const Permutation& w, const WeightVector& wt);
Rational weight_pairing(const WeightVector& a, const WeightVector& b, const Rational& scale);

// Chart transition generated by one braid or commuting move at position pos
// (0-based into the word): theta_{new_word}(comps(t)) = theta_{word}(t).
struct BraidMove {
  std::vector<int> new_word;
  std::vector<PositiveRational> comps;  // arity = word length + extra passthrough vars
};
BraidMove braid_transition(const std::vector<int>& word, int pos, int extra_vars = 0);

}  // namespace tropos
