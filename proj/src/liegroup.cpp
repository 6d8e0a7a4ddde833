#include "tropos/liegroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace tropos {

Permutation Permutation::from_images_one_based(const std::vector<int>& images) {
  Permutation p((int)images.size());
  std::vector<bool> seen(images.size(), false);
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i] - 1;
    if (v < 0 || v >= (int)images.size() || seen[v])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
    p.img_[i] = v;
  }
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.img_[i] = n - 1 - i;
  return p;
}

Permutation word_to_perm(int n, const std::vector<int>& word) {
  Permutation w(n);
  for (int i : word) w = w * Permutation::simple(n, i);
  return w;
}

bool is_reduced_word(int n, const std::vector<int>& word) {
  Permutation w(n);
  int len = 0;
  for (int i : word) {
    w = w * Permutation::simple(n, i);
    if (w.length() != ++len) return false;
  }
  return true;
}

std::vector<int> canonical_reduced_word(const Permutation& w) {
  // peel right descents, smallest index first
  std::vector<int> word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    for (int i = 1; i < cur.n(); ++i) {
      Permutation t = cur * Permutation::simple(cur.n(), i);
      if (t.length() < cur.length()) {
        word.push_back(i);
        cur = t;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w, size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  std::function<void(const Permutation&)> rec = [&](const Permutation& cur) {
    if (cap && out.size() >= cap) return;
    if (cur.is_identity()) {
      std::vector<int> word(acc.rbegin(), acc.rend());
      out.push_back(std::move(word));
      return;
    }
    for (int i = 1; i < cur.n(); ++i) {
      Permutation t = cur * Permutation::simple(cur.n(), i);
      if (t.length() < cur.length()) {
        acc.push_back(i);
        rec(t);
        acc.pop_back();
      }
    }
  };
  rec(w);
  return out;
}

RatMat rat_identity(int n) {
  RatMat m(n, Rational(0));
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat chevalley_e(int n, int i, int j) {
  RatMat m(n, Rational(0));
  m(i - 1, j - 1) = 1;
  return m;
}

RatMat coroot_h(int n, int i) {
  RatMat m(n, Rational(0));
  m(i - 1, i - 1) = 1;
  m(i, i) = -1;
  return m;
}

PolyMat elem_upper(int n, int i, int nvars, int var) {
  PolyMat m(n, LaurentPolynomial(nvars));
  for (int a = 0; a < n; ++a) m(a, a) = LaurentPolynomial::constant(nvars, Rational(1));
  m(i - 1, i) = LaurentPolynomial::variable(nvars, var);
  return m;
}

PolyMat elem_lower(int n, int i, int nvars, int var) {
  PolyMat m(n, LaurentPolynomial(nvars));
  for (int a = 0; a < n; ++a) m(a, a) = LaurentPolynomial::constant(nvars, Rational(1));
  m(i, i - 1) = LaurentPolynomial::variable(nvars, var);
  return m;
}

PolyMat torus_factor(int n, int i, int nvars, int var) {
  PolyMat m(n, LaurentPolynomial(nvars));
  for (int a = 0; a < n; ++a) m(a, a) = LaurentPolynomial::constant(nvars, Rational(1));
  m(i - 1, i - 1) = LaurentPolynomial::variable(nvars, var, 1);
  m(i, i) = LaurentPolynomial::variable(nvars, var, -1);
  return m;
}

PolyMat theta_chart_embedded(int n, const std::vector<int>& word, bool include_torus,
                             int nvars, const std::vector<int>& var_map) {
  int m = (int)word.size();
  int r = n - 1;
  int total = m + (include_torus ? r : 0);
  if ((int)var_map.size() != total)
    throw std::invalid_argument("theta_chart_embedded: var_map arity");
  // validate double reduced word
  std::vector<int> pos, neg;
  for (int l : word) {
    if (l == 0 || l > n - 1 || l < -(n - 1)) throw NotReduced();
    (l > 0 ? pos : neg).push_back(l > 0 ? l : -l);
  }
  if (!is_reduced_word(n, pos) || !is_reduced_word(n, neg)) throw NotReduced();

  PolyMat acc(n, LaurentPolynomial(nvars));
  for (int a = 0; a < n; ++a) acc(a, a) = LaurentPolynomial::constant(nvars, Rational(1));
  LaurentPolynomial zero(nvars);
  for (int j = 0; j < m; ++j) {
    int l = word[j];
    PolyMat f = l > 0 ? elem_upper(n, l, nvars, var_map[j])
                      : elem_lower(n, -l, nvars, var_map[j]);
    acc = matmul(acc, f, zero);
  }
  if (include_torus)
    for (int i = 1; i <= r; ++i)
      acc = matmul(acc, torus_factor(n, i, nvars, var_map[m + i - 1]), zero);
  return acc;
}

PolyMat theta_chart(int n, const std::vector<int>& word, bool include_torus) {
  int total = (int)word.size() + (include_torus ? n - 1 : 0);
  std::vector<int> var_map(total);
  for (int i = 0; i < total; ++i) var_map[i] = i;
  return theta_chart_embedded(n, word, include_torus, total, var_map);
}

CMat eval_chart(const PolyMat& m, const std::vector<Complex>& x) {
  CMat r(m.n, Complex(0, 0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = m(i, j).eval_complex(x);
  return r;
}

RatMat eval_chart_exact(const PolyMat& m, const std::vector<Rational>& x) {
  RatMat r(m.n, Rational(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = m(i, j).eval(x);
  return r;
}

LaurentPolynomial det_poly(const PolyMat& m) {
  std::vector<int> idx(m.n);
  for (int i = 0; i < m.n; ++i) idx[i] = i;
  int nv = m(0, 0).nvars();
  return det_ordered(m, idx, idx, LaurentPolynomial(nv));
}

RatMat weyl_lift(const Permutation& w) {
  int n = w.n();
  RatMat acc = rat_identity(n);
  for (int i : canonical_reduced_word(w)) {
    RatMat s = rat_identity(n);
    s(i - 1, i - 1) = 0;
    s(i, i) = 0;
    s(i - 1, i) = -1;
    s(i, i - 1) = 1;
    acc = matmul(acc, s, Rational(0));
  }
  return acc;
}

int minor_sign(const Permutation& u, const Permutation& v, int k) {
  // Delta_{u omega_k, v omega_k}(x) = [u^-1 x v]_0^{omega_k}: row a of the
  // leading block of u^-1 x v picks row u(a) of x with the lift's sign,
  // columns likewise through v.
  static std::map<std::tuple<std::vector<int>, std::vector<int>, int>, int> cache;
  std::vector<int> ui, vi;
  for (int a = 1; a <= u.n(); ++a) ui.push_back(u.apply(a)), vi.push_back(v.apply(a));
  auto key = std::make_tuple(ui, vi, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RatMat lu = weyl_lift(u), lv = weyl_lift(v);
  Rational s(1);
  for (int a = 1; a <= k; ++a) {
    s *= lu(u.apply(a) - 1, a - 1);  // epsilon_a
    s *= lv(v.apply(a) - 1, a - 1);  // delta_a
  }
  if (s != 1 && s != -1) throw std::logic_error("minor_sign: lift not signed-permutation");
  int sign = s == 1 ? 1 : -1;
  cache.emplace(key, sign);
  return sign;
}

namespace {

template <class S, class Mat>
void ldu(const Mat& m, Mat& lower, Mat& diag, Mat& upper, const S& zero, const S& one,
         bool (*is_zero)(const S&)) {
  int n = m.n;
  Mat a = m;
  lower = Mat(n, zero);
  upper = Mat(n, zero);
  diag = Mat(n, zero);
  for (int i = 0; i < n; ++i) lower(i, i) = one, upper(i, i) = one;
  for (int k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) throw NotDecomposable(k + 1);
    diag(k, k) = a(k, k);
    for (int i = k + 1; i < n; ++i) lower(i, k) = a(i, k) / a(k, k);
    for (int j = k + 1; j < n; ++j) upper(k, j) = a(k, j) / a(k, k);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j) / diag(k, k);
  }
}

bool rat_zero(const Rational& x) { return x == 0; }
bool cplx_zero(const Complex& x) { return std::abs(x) < 1e-300; }

// Embeds M into a ring with extra adjoined variables appended at the end.
PolyMat widen(const PolyMat& m, int extra) {
  int nv = m(0, 0).nvars();
  std::vector<int> map(nv);
  for (int i = 0; i < nv; ++i) map[i] = i;
  PolyMat r(m.n, LaurentPolynomial(nv + extra));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = m(i, j).embed(nv + extra, map);
  return r;
}

PolyMat one_plus_qx(const RatMat& x, int nvars, int qvar) {
  int n = x.n;
  PolyMat r(n, LaurentPolynomial(nvars));
  LaurentPolynomial q = LaurentPolynomial::variable(nvars, qvar);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPolynomial entry(nvars);
      if (i == j) entry += LaurentPolynomial::constant(nvars, Rational(1));
      if (x(i, j) != 0) entry += q.scaled(x(i, j));
      r(i, j) = entry;
    }
  return r;
}

LaurentPolynomial strip_last_vars(const LaurentPolynomial& p, int keep) {
  LaurentPolynomial r(keep);
  for (const auto& [e, c] : p.terms()) {
    ExpVec e2(e.begin(), e.begin() + keep);
    r.add_term(e2, c);
  }
  return r;
}

}  // namespace

GaussFactors gaussian_decompose(const RatMat& m) {
  GaussFactors g;
  ldu<Rational, RatMat>(m, g.lower, g.diag, g.upper, Rational(0), Rational(1), rat_zero);
  return g;
}

GaussFactorsC gaussian_decompose(const CMat& m) {
  GaussFactorsC g;
  ldu<Complex, CMat>(m, g.lower, g.diag, g.upper, Complex(0, 0), Complex(1, 0), cplx_zero);
  return g;
}

LaurentPolynomial left_derivative(const RatMat& x, const MinorSpec& spec, const PolyMat& m) {
  int nv = m(0, 0).nvars();
  PolyMat wm = widen(m, 1);
  PolyMat prod = matmul(one_plus_qx(x, nv + 1, nv), wm, LaurentPolynomial(nv + 1));
  LaurentPolynomial d = generalized_minor(spec, prod, LaurentPolynomial(nv + 1));
  return strip_last_vars(d.coefficient_of(nv, 1), nv);
}

LaurentPolynomial right_derivative(const RatMat& x, const MinorSpec& spec, const PolyMat& m) {
  int nv = m(0, 0).nvars();
  PolyMat wm = widen(m, 1);
  PolyMat prod = matmul(wm, one_plus_qx(x, nv + 1, nv), LaurentPolynomial(nv + 1));
  LaurentPolynomial d = generalized_minor(spec, prod, LaurentPolynomial(nv + 1));
  return strip_last_vars(d.coefficient_of(nv, 1), nv);
}

LaurentPolynomial iterated_left_derivative(const std::vector<RatMat>& xs, const MinorSpec& spec,
                                           const PolyMat& m) {
  // X_1 X_2 ... X_p Delta with xs in displayed order: the leftmost operator
  // is applied last, so its group factor sits adjacent to m.
  int nv = m(0, 0).nvars();
  int p = (int)xs.size();
  PolyMat prod = widen(m, p);
  LaurentPolynomial zero(nv + p);
  for (int i = 0; i < p; ++i)
    prod = matmul(one_plus_qx(xs[i], nv + p, nv + i), prod, zero);
  LaurentPolynomial d = generalized_minor(spec, prod, zero);
  for (int i = p - 1; i >= 0; --i) d = d.coefficient_of(nv + i, 1);
  return strip_last_vars(d, nv);
}

WeightVector fundamental_weight(int n, int k) {
  WeightVector w(n, rat(-k, n));
  for (int i = 0; i < k; ++i) w[i] += 1;
  return w;
}

WeightVector weight_apply(const Permutation& w, const WeightVector& wt) {
  // (w.wt)_i = wt_{w^{-1}(i)}
  WeightVector r(wt.size());
  for (int i = 1; i <= (int)wt.size(); ++i) r[w.apply(i) - 1] = wt[i - 1];
  return r;
}

Rational weight_pairing(const WeightVector& a, const WeightVector& b, const Rational& scale) {
  if (a.size() != b.size()) throw std::invalid_argument("weight_pairing: size mismatch");
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return scale * s;
}

BraidMove braid_transition(const std::vector<int>& word, int pos, int extra_vars) {
  int m = (int)word.size();
  int total = m + extra_vars;
  std::vector<PositiveRational> comps;
  for (int i = 0; i < total; ++i) comps.push_back(PositiveRational::variable(total, i));
  BraidMove move;
  move.new_word = word;
  if (pos >= 0 && pos + 1 < m && word[pos] > 0 && word[pos + 1] > 0 &&
      std::abs(word[pos] - word[pos + 1]) >= 2) {
    std::swap(move.new_word[pos], move.new_word[pos + 1]);
    std::swap(comps[pos], comps[pos + 1]);
    move.comps = std::move(comps);
    return move;
  }
  if (pos >= 0 && pos + 2 < m && word[pos] > 0 && word[pos + 1] > 0 &&
      word[pos] == word[pos + 2] && std::abs(word[pos] - word[pos + 1]) == 1) {
    int i = word[pos], j = word[pos + 1];
    move.new_word[pos] = j;
    move.new_word[pos + 1] = i;
    move.new_word[pos + 2] = j;
    auto x1 = PositiveRational::variable(total, pos);
    auto x2 = PositiveRational::variable(total, pos + 1);
    auto x3 = PositiveRational::variable(total, pos + 2);
    auto s = x1 + x3;
    comps[pos] = x2 * x3 / s;
    comps[pos + 1] = s;
    comps[pos + 2] = x1 * x2 / s;
    move.comps = std::move(comps);
    return move;
  }
  throw NoMoveHere();
}

}  // namespace tropos
