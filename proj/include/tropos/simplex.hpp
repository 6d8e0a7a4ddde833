#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropos/rational.hpp"

namespace tropos {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  std::vector<Rational> x;
  Rational objective{0};
};

// min c.x subject to A x = b, x >= 0. Two-phase tableau simplex with
// Bland's rule, exact rational pivots.
LpSolution simplex_solve(const std::vector<std::vector<Rational>>& a,
                         const std::vector<Rational>& b, const std::vector<Rational>& c);

// Decides {s.xi < 0 for all rows s of strict} and {w.xi <= 0 for all rows w
// of weak} over xi in R^dim. The system is homogeneous, so strict
// feasibility is decided by maximizing the minimum slack delta over the box
// [-1,1]^dim; a witness has all strict rows <= -delta < 0.
std::optional<std::vector<Rational>> strict_feasible_point(
    const std::vector<std::vector<Rational>>& strict,
    const std::vector<std::vector<Rational>>& weak, int dim);

// Farkas-style infeasibility certificate: nonnegative lambda (strict rows)
// and mu (weak rows) with sum(lambda) = 1 and
// sum lambda_k strict_k + sum mu_m weak_m = 0. Exists exactly when the
// strict system above is infeasible (Motzkin transposition).
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
farkas_certificate(const std::vector<std::vector<Rational>>& strict,
                   const std::vector<std::vector<Rational>>& weak, int dim);

}  // namespace tropos
