#pragma once

#include <variant>
#include <vector>

#include "plqcert/rational.hpp"

namespace plq {

enum class Relation { LessEq, Eq };
enum class Sense { Max, Min };

struct LinearProgram {
  RVector objective;
  struct Constraint {
    RVector a;
    Relation rel;
    Rational rhs;
  };
  std::vector<Constraint> constraints;
  std::size_t n_vars = 0;
  Sense sense = Sense::Max;
};

struct LpOptimal {
  Rational value;
  RVector point;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Exact optimum over the rationals. Two-phase simplex with Bland's rule,
// so it terminates on every input; variables are free (split internally).
LpOutcome lp_solve(const LinearProgram& lp);

// Convenience wrappers used throughout the geometry code.
LpOutcome lp_maximize(const RVector& objective, const std::vector<LinearProgram::Constraint>& cons,
                      std::size_t n_vars);
bool lp_feasible(const std::vector<LinearProgram::Constraint>& cons, std::size_t n_vars);

inline LinearProgram::Constraint le(RVector a, Rational rhs) {
  return {std::move(a), Relation::LessEq, std::move(rhs)};
}
inline LinearProgram::Constraint eq(RVector a, Rational rhs) {
  return {std::move(a), Relation::Eq, std::move(rhs)};
}

}  // namespace plq
