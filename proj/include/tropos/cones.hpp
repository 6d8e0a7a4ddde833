#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropos/simplex.hpp"
#include "tropos/tropical.hpp"

namespace tropos {

struct NonMonomialDenominator : std::runtime_error {
  NonMonomialDenominator()
      : std::runtime_error(
            "cone_from_potentials: denominator is not a monomial; "
            "only pointwise membership is available for this potential set") {}
};

struct EmptyCone : std::runtime_error {
  EmptyCone() : std::runtime_error("is_dominated: cone has empty interior") {}
};

// Open rational polyhedral cone in H-representation: the locus where every
// listed form is strictly negative.
struct Cone {
  int dim = 0;
  std::vector<std::vector<Rational>> strict_ineqs;  // each row a: a.xi < 0

  static Cone whole_space(int dim) { return Cone{dim, {}}; }
};

inline std::vector<Rational> form_to_rational(const IntForm& f) {
  return std::vector<Rational>(f.begin(), f.end());
}

// Inequalities {a - d < 0} for every numerator exponent a against the single
// denominator exponent d, concatenated across potentials. Duplicate forms
// within one potential are already collapsed by the TropPolynomial.
Cone cone_from_potentials(const std::vector<PositiveRational>& phi);

bool member(const Cone& c, const std::vector<Rational>& xi, bool strict = true);

// Phi-set membership via tropical evaluation; works for arbitrary
// denominators (no polyhedrality needed).
bool member_potentials(const std::vector<PositiveRational>& phi,
                       const std::vector<Rational>& xi, bool strict = true);

// A rational point with every inequality strictly satisfied, from the
// max-min-slack LP over [-1,1]^dim; nullopt iff the open cone is empty.
std::optional<std::vector<Rational>> interior_point(const Cone& c);

// Farkas combination showing one candidate form cannot reach >= 0 on the
// cone: nonnegative multipliers over the cone rows (lambda, sum = 1) and the
// weak rows neg_b - a (mu) summing to the zero form.
struct FarkasCombination {
  IntForm pos_form;                        // candidate a from T.pos
  std::vector<Rational> cone_multipliers;  // lambda, one per cone row
  std::vector<Rational> weak_multipliers;  // mu, one per form of T.neg
};

struct DominationVerdict {
  bool dominated = false;
  std::vector<FarkasCombination> certificates;  // one per pos form when dominated
  std::vector<Rational> witness;                // cone point with T >= 0 otherwise
};

// Decides T(xi) < 0 for all xi in the open cone. T < 0 on C iff for every
// form a of T.pos the system {C strict, (a-b).xi >= 0 for all b in T.neg}
// is infeasible; infeasibility is certified per form, feasibility returns
// the witness.
DominationVerdict is_dominated(const TropRational& t, const Cone& c);

// Independent re-check of a certificate by exact arithmetic.
bool verify_certificate(const FarkasCombination& cert, const TropRational& t, const Cone& c);

bool cone_includes(const Cone& inner, const Cone& outer);  // inner subset of outer
bool cones_equal(const Cone& c1, const Cone& c2);

// Pointwise-semantic equality of tropical rationals: both max-envelopes
// dominate each other (decided by exact LP).
bool trop_equal(const TropRational& a, const TropRational& b);

// Open linearity chamber of a PLMap with the linear map it restricts to.
struct Chamber {
  Cone cone;
  std::vector<IntForm> linear_map;  // codomain_dim rows
};

// All argmax selections with nonempty interior; chambers cover R^n up to
// measure zero and the map is linear on each.
std::vector<Chamber> linearity_chambers(const PLMap& f);

}  // namespace tropos
