#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tropos/positive.hpp"

using namespace tropos;

namespace {

LaurentPolynomial parse_terms(int nvars, std::initializer_list<std::pair<ExpVec, long>> ts) {
  LaurentPolynomial p(nvars);
  for (const auto& [e, c] : ts) p.add_term(e, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("positive rational arithmetic stays subtraction-free") {
  auto x = PositiveRational::variable(1, 0);
  auto one = PositiveRational::constant(1, Rational(1));

  auto s = x + one;
  CHECK(s.num() == parse_terms(1, {{{1}, 1}, {{0}, 1}}));
  CHECK(s.den() == LaurentPolynomial::constant(1, Rational(1)));

  // (x^3+1)/(x+1) stored without cancellation; represents x^2-x+1 in P(G_m)
  auto x3p1 = PositiveRational::from_poly(parse_terms(1, {{{3}, 1}, {{0}, 1}}));
  auto xp1 = PositiveRational::from_poly(parse_terms(1, {{{1}, 1}, {{0}, 1}}));
  auto q = x3p1 / xp1;
  CHECK(q.num() == parse_terms(1, {{{3}, 1}, {{0}, 1}}));
  CHECK(q.den() == parse_terms(1, {{{1}, 1}, {{0}, 1}}));

  // inverse pair multiplies to something that evaluates to 1, uncancelled
  auto y = PositiveRational::variable(2, 1);
  auto f = PositiveRational(parse_terms(2, {{{1, 0}, 1}, {{0, 0}, 1}}),
                            LaurentPolynomial::variable(2, 1));
  auto g = f.inverse();
  auto prod = f * g;
  CHECK(prod.num() == prod.den());
  CHECK(prod.num().term_count() == 2);  // (x+1)*y, no cancellation happened
  CHECK(prod.eval({Rational(3), Rational(5)}) == 1);
  (void)y;
}

TEST_CASE("substitution composes as rational functions") {
  // Example 2.2 components: (x2x3/(x1+x3), x1+x3)
  auto comp1 = PositiveRational(parse_terms(3, {{{0, 1, 1}, 1}}),
                                parse_terms(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}));
  auto comp2 = PositiveRational::from_poly(parse_terms(3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}}));

  auto y1y2 = PositiveRational::from_poly(parse_terms(2, {{{1, 1}, 1}}));
  auto r = substitute(y1y2, {comp1, comp2});
  auto x2x3 = PositiveRational::from_poly(parse_terms(3, {{{0, 1, 1}, 1}}));
  CHECK(r.equals(x2x3));

  // identity substitution
  std::mt19937_64 rng(11);
  auto gfn = tt::rand_positive_rational_fn(rng, 2);
  auto idv = PositiveRational::variable(1, 0);
  CHECK(substitute(idv, {gfn}).equals(gfn));

  SUBCASE("arity mismatch rejected") {
    CHECK_THROWS_AS(substitute(y1y2, {comp1}), std::invalid_argument);
  }
}

TEST_CASE("composition can leave the positive regular semiring (Example 2.4 shape)") {
  // f = (t1^3+t2^3)(t1+t2)/t2^2, F = (t1t2/(t1+t2), t2^2/(t1+t2))
  auto num = parse_terms(2, {{{3, 0}, 1}, {{0, 3}, 1}}) * parse_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  auto f = PositiveRational(num, parse_terms(2, {{{0, 2}, 1}}));
  auto f1 = PositiveRational(parse_terms(2, {{{1, 1}, 1}}),
                             parse_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  auto f2 = PositiveRational(parse_terms(2, {{{0, 2}, 1}}),
                             parse_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  auto comp = substitute(f, {f1, f2});
  auto reduced = comp.reduce_to_polynomial();
  // t1^2 - t1 t2 + t2^2: not coefficient-positive
  CHECK(reduced == parse_terms(2, {{{2, 0}, 1}, {{1, 1}, -1}, {{0, 2}, 1}}));
  CHECK(!reduced.is_coefficient_positive());
}

TEST_CASE("exact Laurent division") {
  auto p = parse_terms(1, {{{3}, 1}, {{0}, 1}});
  auto d = parse_terms(1, {{{1}, 1}, {{0}, 1}});
  CHECK(poly_divide_exact(p, d) == parse_terms(1, {{{2}, 1}, {{1}, -1}, {{0}, 1}}));

  auto q = parse_terms(2, {{{2, -1}, 3}, {{-1, 4}, 7}});
  CHECK(poly_divide_exact(q, q) == LaurentPolynomial::constant(2, Rational(1)));

  auto t = parse_terms(2, {{{3, 0}, 1}, {{0, 3}, 1}});
  auto s = parse_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(poly_divide_exact(t, s) == parse_terms(2, {{{2, 0}, 1}, {{1, 1}, -1}, {{0, 2}, 1}}));

  CHECK_THROWS_AS(poly_divide_exact(s, t), NotDivisible);
  CHECK_THROWS_AS(poly_divide_exact(parse_terms(1, {{{0}, 1}, {{1}, 1}, {{2}, 1}}),
                                    parse_terms(1, {{{0}, 1}, {{1}, -1}})),
                  NotDivisible);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto a = tt::rand_positive_poly(rng, 3);
    auto b = tt::rand_positive_poly(rng, 3);
    CHECK(poly_divide_exact(a * b, b) == a);
  }
}

TEST_CASE("evaluation, exact and complex") {
  auto f = PositiveRational(parse_terms(1, {{{1}, 1}, {{0}, 1}}), parse_terms(1, {{{1}, 1}}));
  CHECK(f.eval({Rational(1)}) == 2);

  // SL_2 B-potential (b11 + b11^-1)/b12 at b11=2, b12=1
  auto phi = PositiveRational(parse_terms(2, {{{1, 0}, 1}, {{-1, 0}, 1}}),
                              parse_terms(2, {{{0, 1}, 1}}));
  CHECK(phi.eval({Rational(2), Rational(1)}) == Rational(5, 2));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto g = tt::rand_positive_rational_fn(rng, 2);
    auto x = tt::rand_positive_point(rng, 2);
    std::vector<Complex> xc{Complex(rat_double(x[0]), 0), Complex(rat_double(x[1]), 0)};
    double exact = rat_double(g.eval(x));
    Complex c = g.eval_complex(xc);
    CHECK(std::abs(c.imag()) < 1e-9 * (1 + std::abs(exact)));
    CHECK(doctest::Approx(exact).epsilon(1e-9) == c.real());
  }
}

TEST_CASE("semifield laws hold under random evaluation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto f = tt::rand_positive_rational_fn(rng, 2);
    auto g = tt::rand_positive_rational_fn(rng, 2);
    auto h = tt::rand_positive_rational_fn(rng, 2);
    auto x = tt::rand_positive_point(rng, 2);
    CHECK((f + g).eval(x) == (g + f).eval(x));
    CHECK((f * g).eval(x) == (g * f).eval(x));
    CHECK(((f + g) + h).eval(x) == (f + (g + h)).eval(x));
    CHECK(((f * g) * h).eval(x) == (f * (g * h)).eval(x));
    CHECK((f * (g + h)).eval(x) == (f * g + f * h).eval(x));
    CHECK((f / g * g).eval(x) == f.eval(x));
  }
}

TEST_CASE("substitute is a semifield homomorphism under evaluation") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    // small shapes: substitution multiplies term counts aggressively
    auto f = tt::rand_positive_rational_fn(rng, 2, 3, 2);
    std::vector<PositiveRational> comps{tt::rand_positive_rational_fn(rng, 3, 2, 1),
                                        tt::rand_positive_rational_fn(rng, 3, 2, 1)};
    auto p = tt::rand_positive_point(rng, 3);
    std::vector<Rational> inner{comps[0].eval(p), comps[1].eval(p)};
    CHECK(substitute(f, comps).eval(p) == f.eval(inner));
  }
}

TEST_CASE("representation independence of the fraction") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    auto f = tt::rand_positive_rational_fn(rng, 2);
    auto h = tt::rand_positive_rational_fn(rng, 2);
    auto blown = (f * h) / h;
    auto x = tt::rand_positive_point(rng, 2);
    CHECK(blown.eval(x) == f.eval(x));
    CHECK(blown.equals(f));
  }
}

TEST_CASE("canonical text form is deterministic") {
  auto p = parse_terms(2, {{{3, 0}, 1}, {{0, 0}, 1}});
  CHECK(p.str({"x", "y"}) == "x^3 + 1");
  auto q = parse_terms(2, {{{1, -2}, 3}, {{0, 0}, -1}});
  CHECK(q.str({"x", "y"}) == "3*x*y^-2 - 1");
}
