#include "tropos/cones.hpp"

#include <functional>
#include <map>
#include <set>

namespace tropos {

Cone cone_from_potentials(const std::vector<PositiveRational>& phi) {
  if (phi.empty()) return Cone::whole_space(0);
  Cone c;
  c.dim = phi[0].nvars();
  for (const auto& f : phi) {
    if (f.nvars() != c.dim)
      throw std::invalid_argument("cone_from_potentials: arity mismatch");
    if (!f.den().is_monomial()) throw NonMonomialDenominator();
    TropRational t = tropicalize(f);
    const IntForm d = *t.neg().forms().begin();
    for (const auto& a : t.pos().forms()) {
      std::vector<Rational> row(c.dim);
      for (int i = 0; i < c.dim; ++i) row[i] = Rational(a[i] - d[i]);
      c.strict_ineqs.push_back(std::move(row));
    }
  }
  return c;
}

bool member(const Cone& c, const std::vector<Rational>& xi, bool strict) {
  if ((int)xi.size() != c.dim) throw std::invalid_argument("member: dimension mismatch");
  for (const auto& row : c.strict_ineqs) {
    Rational v(0);
    for (int i = 0; i < c.dim; ++i)
      if (row[i] != 0) v += row[i] * xi[i];
    if (strict ? v >= 0 : v > 0) return false;
  }
  return true;
}

bool member_potentials(const std::vector<PositiveRational>& phi,
                       const std::vector<Rational>& xi, bool strict) {
  for (const auto& f : phi) {
    Rational v = trop_eval(tropicalize(f), xi);
    if (strict ? v >= 0 : v > 0) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> interior_point(const Cone& c) {
  return strict_feasible_point(c.strict_ineqs, {}, c.dim);
}

DominationVerdict is_dominated(const TropRational& t, const Cone& c) {
  if (t.dim() != c.dim) throw std::invalid_argument("is_dominated: dimension mismatch");
  if (!interior_point(c)) throw EmptyCone();
  DominationVerdict v;
  for (const auto& a : t.pos().forms()) {
    // weak rows b - a <= 0  encode  a - b >= 0 for all b in T.neg
    std::vector<std::vector<Rational>> weak;
    for (const auto& b : t.neg().forms()) {
      std::vector<Rational> row(c.dim);
      for (int i = 0; i < c.dim; ++i) row[i] = Rational(b[i] - a[i]);
      weak.push_back(std::move(row));
    }
    auto point = strict_feasible_point(c.strict_ineqs, weak, c.dim);
    if (point) {
      v.dominated = false;
      v.certificates.clear();
      v.witness = *point;
      return v;
    }
    auto cert = farkas_certificate(c.strict_ineqs, weak, c.dim);
    if (!cert)
      throw std::logic_error("is_dominated: infeasible system without certificate");
    v.certificates.push_back({a, cert->first, cert->second});
  }
  v.dominated = true;
  return v;
}

bool verify_certificate(const FarkasCombination& cert, const TropRational& t, const Cone& c) {
  if ((int)cert.cone_multipliers.size() != (int)c.strict_ineqs.size()) return false;
  std::vector<IntForm> negs(t.neg().forms().begin(), t.neg().forms().end());
  if (cert.weak_multipliers.size() != negs.size()) return false;
  Rational lam_sum(0);
  std::vector<Rational> total(c.dim, Rational(0));
  for (size_t k = 0; k < cert.cone_multipliers.size(); ++k) {
    const Rational& l = cert.cone_multipliers[k];
    if (l < 0) return false;
    lam_sum += l;
    for (int i = 0; i < c.dim; ++i) total[i] += l * c.strict_ineqs[k][i];
  }
  if (lam_sum <= 0) return false;
  for (size_t m = 0; m < negs.size(); ++m) {
    const Rational& mu = cert.weak_multipliers[m];
    if (mu < 0) return false;
    for (int i = 0; i < c.dim; ++i)
      total[i] += mu * Rational(negs[m][i] - cert.pos_form[i]);
  }
  for (int i = 0; i < c.dim; ++i)
    if (total[i] != 0) return false;
  return true;
}

bool cone_includes(const Cone& inner, const Cone& outer) {
  if (inner.dim != outer.dim) throw std::invalid_argument("cone_includes: dimension mismatch");
  if (!interior_point(inner)) return true;  // empty cone included in anything
  for (const auto& row : outer.strict_ineqs) {
    // row < 0 must hold on inner: {inner strict, row >= 0} infeasible
    std::vector<std::vector<Rational>> weak;
    std::vector<Rational> neg_row(inner.dim);
    for (int i = 0; i < inner.dim; ++i) neg_row[i] = -row[i];
    weak.push_back(std::move(neg_row));
    if (strict_feasible_point(inner.strict_ineqs, weak, inner.dim)) return false;
  }
  return true;
}

bool cones_equal(const Cone& c1, const Cone& c2) {
  if (c1.dim != c2.dim) throw std::invalid_argument("cones_equal: dimension mismatch");
  return cone_includes(c1, c2) && cone_includes(c2, c1);
}

namespace {

// Is max over fs everywhere >= the single form p? Equivalent to the strict
// system {f - p < 0 for all f} being infeasible.
bool envelope_covers(const std::set<IntForm>& fs, const IntForm& p, int dim) {
  std::vector<std::vector<Rational>> strict;
  for (const auto& f : fs) {
    std::vector<Rational> row(dim);
    for (int i = 0; i < dim; ++i) row[i] = Rational(f[i] - p[i]);
    strict.push_back(std::move(row));
  }
  return !strict_feasible_point(strict, {}, dim).has_value();
}

}  // namespace

bool trop_equal(const TropRational& a, const TropRational& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trop_equal: dimension mismatch");
  // a - b = (a.pos + b.neg) - (a.neg + b.pos); zero iff the two envelopes agree.
  TropPolynomial p = trop_add(a.pos(), b.neg());
  TropPolynomial n = trop_add(a.neg(), b.pos());
  for (const auto& f : p.forms())
    if (!envelope_covers(n.forms(), f, a.dim())) return false;
  for (const auto& f : n.forms())
    if (!envelope_covers(p.forms(), f, a.dim())) return false;
  return true;
}

std::vector<Chamber> linearity_chambers(const PLMap& f) {
  int dim = f.domain_dim();
  // Distinct max blocks (singletons are linear and force no choice).
  std::vector<std::vector<IntForm>> blocks;
  std::set<std::set<IntForm>> seen;
  auto add_block = [&](const TropPolynomial& p) {
    if (p.forms().size() <= 1) return;
    if (seen.insert(p.forms()).second)
      blocks.emplace_back(p.forms().begin(), p.forms().end());
  };
  for (const auto& c : f.comps()) {
    add_block(c.pos());
    add_block(c.neg());
  }

  std::vector<Chamber> out;
  std::vector<int> choice(blocks.size(), 0);
  std::vector<std::vector<Rational>> rows;

  auto block_rows = [&](size_t bi, int sel) {
    std::vector<std::vector<Rational>> r;
    for (size_t j = 0; j < blocks[bi].size(); ++j) {
      if ((int)j == sel) continue;
      std::vector<Rational> row(dim);
      for (int i = 0; i < dim; ++i) row[i] = Rational(blocks[bi][j][i] - blocks[bi][sel][i]);
      r.push_back(std::move(row));
    }
    return r;
  };

  // Depth-first over argmax selections, pruning selections whose partial
  // inequality system is already infeasible.
  auto emit = [&]() {
    Cone cone{dim, rows};
    auto pt = interior_point(cone);
    if (!pt) return;
    // On the chamber interior each block's argmax is its selected form.
    std::vector<IntForm> mat;
    for (const auto& comp : f.comps()) {
      auto pick = [&](const TropPolynomial& p) -> IntForm {
        if (p.forms().size() == 1) return *p.forms().begin();
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
          std::set<IntForm> bs(blocks[bi].begin(), blocks[bi].end());
          if (bs == p.forms()) return blocks[bi][choice[bi]];
        }
        throw std::logic_error("linearity_chambers: block lookup failed");
      };
      IntForm a = pick(comp.pos()), b = pick(comp.neg());
      IntForm row(dim);
      for (int i = 0; i < dim; ++i) row[i] = a[i] - b[i];
      mat.push_back(std::move(row));
    }
    out.push_back({std::move(cone), std::move(mat)});
  };

  std::function<void(size_t)> rec = [&](size_t bi) {
    if (bi == blocks.size()) {
      emit();
      return;
    }
    for (int sel = 0; sel < (int)blocks[bi].size(); ++sel) {
      auto r = block_rows(bi, sel);
      size_t base = rows.size();
      rows.insert(rows.end(), r.begin(), r.end());
      if (strict_feasible_point(rows, {}, dim)) {
        choice[bi] = sel;
        rec(bi + 1);
      }
      rows.resize(base);
    }
  };
  rec(0);
  return out;
}

}  // namespace tropos
