#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace fpt {

using Matrix = std::vector<RationalVector>;  // row-major

enum class Sense { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  RationalVector coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs;
};

// maximize objective . x  subject to rows, x >= 0.
struct LinearProgram {
  std::size_t nvars = 0;
  RationalVector objective;
  std::vector<LinearConstraint> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;  // a basic optimal solution
};

// Two-phase tableau simplex in exact arithmetic with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve_square(Matrix a, RationalVector b);
std::size_t matrix_rank(Matrix a);

}  // namespace fpt
