#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace linespace::lp {

enum class Sense { Le, Ge, Eq };

struct Constraint {
  std::vector<std::pair<int, mpq_class>> terms;  // (variable, coefficient)
  Sense sense = Sense::Eq;
  mpq_class rhs = 0;
};

/// maximize objective . x subject to rows, x >= 0.
struct Problem {
  int variables = 0;
  std::vector<Constraint> rows;
  std::vector<mpq_class> objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  mpq_class value = 0;
  std::vector<mpq_class> x;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex on a dense tableau of GMP rationals with
/// Bland's rule. Zero entries are skipped during elimination.
Solution maximize(const Problem& problem);

}  // namespace linespace::lp
