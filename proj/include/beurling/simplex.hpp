#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace beurling::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view to_string(Status s);

/// maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
///
/// Rows are dense.  Any right-hand side sign is accepted; rows are
/// renormalized internally so the phase-one tableau starts feasible.
struct Problem {
  std::vector<double> objective;
  std::vector<std::vector<double>> ub_rows;
  std::vector<double> ub_rhs;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
};

struct Result {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct Options {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-8;
  std::size_t max_iterations = 200000;
};

/// Dense two-phase tableau simplex.  Entering and leaving variables are
/// chosen by Bland's rule, so the method terminates on degenerate problems.
Result solve(const Problem& problem, const Options& options = {});

}  // namespace beurling::lp
