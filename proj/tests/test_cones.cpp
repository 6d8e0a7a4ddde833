#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tropos/cones.hpp"

using namespace tropos;

namespace {

PositiveRational pr(int nvars, std::initializer_list<std::pair<ExpVec, long>> num,
                    std::initializer_list<std::pair<ExpVec, long>> den) {
  LaurentPolynomial n(nvars), d(nvars);
  for (const auto& [e, c] : num) n.add_term(e, Rational(c));
  for (const auto& [e, c] : den) d.add_term(e, Rational(c));
  return PositiveRational(n, d);
}

// Example 3.9 potentials on N in SL_3: {1/x1, 1/x3, (x1+x3)/(x1x2), (x1+x3)/(x2x3)}
std::vector<PositiveRational> example39() {
  return {pr(3, {{{0, 0, 0}, 1}}, {{{1, 0, 0}, 1}}),
          pr(3, {{{0, 0, 0}, 1}}, {{{0, 0, 1}, 1}}),
          pr(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, {{{1, 1, 0}, 1}}),
          pr(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, {{{0, 1, 1}, 1}})};
}

// SL_2 B-potentials in matrix-entry coordinates (b11, b12)
std::vector<PositiveRational> gz2_potentials() {
  return {pr(2, {{{-1, 0}, 1}}, {{{0, 1}, 1}}), pr(2, {{{1, 0}, 1}}, {{{0, 1}, 1}})};
}

std::vector<Rational> rv(std::initializer_list<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("Example 3.9 cone has the six expected inequalities") {
  Cone c = cone_from_potentials(example39());
  CHECK(c.dim == 3);
  CHECK(c.strict_ineqs.size() == 6);
  CHECK(member(c, rv({1, 1, 1})));
  CHECK(!member(c, rv({0, 0, 0})));
  CHECK(member(c, rv({0, 0, 0}), /*strict=*/false));
  CHECK(!member(c, rv({-1, 1, 1})));
  // membership agrees with Phi-set trop evaluation at random rational points
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> xi(3);
    for (auto& x : xi)
      x = rat((long)(rng() % 13) - 6, 1 + (long)(rng() % 4));
    CHECK(member(c, xi) == member_potentials(example39(), xi));
  }
}

TEST_CASE("GZ_2 cone from SL_2 potentials") {
  Cone c = cone_from_potentials(gz2_potentials());
  // {xi12 > xi11 > -xi12}
  CHECK(member(c, rv({0, 1})));
  CHECK(!member(c, rv({1, 1})));
  CHECK(!member(c, rv({-2, 1})));
  CHECK(member(c, rv({-1, 2})));
  auto p = interior_point(c);
  REQUIRE(p.has_value());
  CHECK(member(c, *p));
}

TEST_CASE("empty potential set gives the whole lattice") {
  Cone c = Cone::whole_space(3);
  CHECK(member(c, rv({5, -7, 0})));
  CHECK(interior_point(c).has_value());
}

TEST_CASE("non-monomial denominators are rejected for H-representation") {
  auto f = pr(2, {{{0, 0}, 1}}, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK_THROWS_AS(cone_from_potentials({f}), NonMonomialDenominator);
  // but Phi-set membership still works
  CHECK(member_potentials({f}, rv({1, 1})));
  CHECK(!member_potentials({f}, rv({-1, -1})));
}

TEST_CASE("interior points and empty cones") {
  Cone contradictory{1, {{Rational(1)}, {Rational(-1)}}};  // xi<0 and -xi<0
  CHECK(!interior_point(contradictory).has_value());

  Cone c39 = cone_from_potentials(example39());
  auto p = interior_point(c39);
  REQUIRE(p.has_value());
  CHECK(member(c39, *p));
}

TEST_CASE("domination with certificates (Example 3.9)") {
  Cone c = cone_from_potentials(example39());
  // f = 1/(x1 x2) is dominated
  auto f = pr(3, {{{0, 0, 0}, 1}}, {{{1, 1, 0}, 1}});
  auto verdict = is_dominated(tropicalize(f), c);
  CHECK(verdict.dominated);
  REQUIRE(verdict.certificates.size() == 1);
  CHECK(verify_certificate(verdict.certificates[0], tropicalize(f), c));

  // f = x1 is not dominated; witness returned and in the cone
  auto g = pr(3, {{{1, 0, 0}, 1}}, {{{0, 0, 0}, 1}});
  auto bad = is_dominated(tropicalize(g), c);
  CHECK(!bad.dominated);
  REQUIRE(!bad.witness.empty());
  CHECK(member(c, bad.witness));
  CHECK(trop_eval(tropicalize(g), bad.witness) >= 0);

  // a form from the cone's own inequality list is dominated (self-implication)
  auto h = pr(3, {{{0, 0, 0}, 1}}, {{{1, 0, 0}, 1}});  // trop = -xi1 < 0
  CHECK(is_dominated(tropicalize(h), c).dominated);

  SUBCASE("empty cone is an error") {
    Cone contradictory{3, {{Rational(1), Rational(0), Rational(0)},
                           {Rational(-1), Rational(0), Rational(0)}}};
    CHECK_THROWS_AS(is_dominated(tropicalize(f), contradictory), EmptyCone);
  }
}

TEST_CASE("domination agrees with brute-force lattice sampling") {
  Cone c = cone_from_potentials(example39());
  std::mt19937_64 rng(19);
  std::vector<PositiveRational> candidates;
  for (int i = 0; i < 12; ++i) candidates.push_back(tt::rand_positive_rational_fn(rng, 3));
  candidates.push_back(pr(3, {{{0, 0, 0}, 1}}, {{{1, 1, 0}, 1}}));
  candidates.push_back(pr(3, {{{0, 1, 0}, 1}}, {{{1, 1, 0}, 1}}));
  for (const auto& f : candidates) {
    auto t = tropicalize(f);
    bool brute = true;
    for (long a = -5; a <= 5 && brute; ++a)
      for (long b = -5; b <= 5 && brute; ++b)
        for (long d = -5; d <= 5 && brute; ++d) {
          std::vector<Rational> xi{Rational(a), Rational(b), Rational(d)};
          if (member(c, xi) && trop_eval(t, xi) >= 0) brute = false;
        }
    auto verdict = is_dominated(t, c);
    CHECK(verdict.dominated == brute);
    if (verdict.dominated)
      for (const auto& cert : verdict.certificates) CHECK(verify_certificate(cert, t, c));
  }
}

TEST_CASE("estimate identity of Example 3.9 holds exactly") {
  // (1/x1)((x1+x3)/(x2x3)) - 1/(x1x2) = 1/(x2x3)
  auto lhs = pr(3, {{{0, 0, 0}, 1}}, {{{1, 0, 0}, 1}}) *
             pr(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, {{{0, 1, 1}, 1}});
  auto sub = pr(3, {{{0, 0, 0}, 1}}, {{{1, 1, 0}, 1}});
  auto rhs = pr(3, {{{0, 0, 0}, 1}}, {{{0, 1, 1}, 1}});
  // lhs - sub == rhs  <=>  lhs == rhs + sub
  CHECK(lhs.equals(rhs + sub));
}

TEST_CASE("cone equality via mutual domination") {
  // cone({phi, psi}) == cone({phi+psi}) for the SL_2 potentials
  auto phis = gz2_potentials();
  Cone c1 = cone_from_potentials(phis);
  Cone c2 = cone_from_potentials({phis[0] + phis[1]});
  CHECK(cones_equal(c1, c2));
  CHECK(cones_equal(c1, c1));

  // GZ_2 (padded to 3 dims) differs from the Example 3.9 cone
  Cone gz = c1;
  gz.dim = 3;
  for (auto& row : gz.strict_ineqs) row.push_back(Rational(0));
  CHECK(!cones_equal(gz, cone_from_potentials(example39())));
}

TEST_CASE("Farkas certificates re-check under perturbation scrutiny") {
  Cone c = cone_from_potentials(example39());
  auto f = pr(3, {{{0, 0, 0}, 1}}, {{{1, 1, 0}, 1}});
  auto verdict = is_dominated(tropicalize(f), c);
  REQUIRE(verdict.dominated);
  auto cert = verdict.certificates[0];
  // tampered multiplier must fail the re-check
  cert.cone_multipliers[0] += 1;
  CHECK(!verify_certificate(cert, tropicalize(f), c));
}

TEST_CASE("linearity chambers of Example 2.6") {
  auto c1 = pr(3, {{{0, 1, 1}, 1}}, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}});
  auto c2 = pr(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}, {{{0, 0, 0}, 1}});
  auto c3 = pr(3, {{{1, 1, 0}, 1}}, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}});
  auto f = PLMap::tropicalize_map({c1, c2, c3});
  auto chambers = linearity_chambers(f);
  REQUIRE(chambers.size() == 2);
  // identify by a sample point: xi1 > xi3 chamber
  for (const auto& ch : chambers) {
    auto p = interior_point(ch.cone);
    REQUIRE(p.has_value());
    bool x1_big = (*p)[0] > (*p)[2];
    if (x1_big) {
      CHECK(ch.linear_map == std::vector<IntForm>{{-1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    } else {
      CHECK(ch.linear_map == std::vector<IntForm>{{0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
    }
    // on the chamber the PL map equals the linear map
    for (int k = 0; k < 3; ++k) {
      Rational lin(0);
      for (int i = 0; i < 3; ++i) lin += Rational(ch.linear_map[k][i]) * (*p)[i];
      CHECK(lin == f.eval(*p)[k]);
    }
  }
}

TEST_CASE("a linear map has a single chamber") {
  auto m = pr(2, {{{2, -1}, 5}}, {{{0, 0}, 1}});
  auto f = PLMap::tropicalize_map({m});
  auto chambers = linearity_chambers(f);
  REQUIRE(chambers.size() == 1);
  CHECK(chambers[0].cone.strict_ineqs.empty());
  CHECK(chambers[0].linear_map == std::vector<IntForm>{{2, -1}});
}

TEST_CASE("chambers of the SL_2 theta-potential max(xi,-xi)-xi'") {
  // trop of (t^2+1)/t' style: max(2xi, 0) - xi'; chambers xi>0 and xi<0
  auto f = pr(2, {{{2, 0}, 1}, {{0, 0}, 1}}, {{{0, 1}, 1}});
  auto chambers = linearity_chambers(PLMap::tropicalize_map({f}));
  REQUIRE(chambers.size() == 2);
  for (const auto& ch : chambers) {
    auto p = interior_point(ch.cone);
    REQUIRE(p.has_value());
    CHECK((*p)[0] != 0);
  }
}
