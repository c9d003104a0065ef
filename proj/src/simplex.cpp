#include "beurling/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beurling::lp {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
    case Status::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs slot holds the objective value.
  double& cost(std::size_t c) { return at(rows_, c); }
  double objective() const { return at(rows_, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = cols_ + 1;
    double* prow = &data_[pr * w];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < w; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * w];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < w; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  /// Sets the cost row for maximizing `c` over the current basis.
  void load_objective(const std::vector<double>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) at(rows_, j) = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) at(rows_, j) = -c[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = c[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(rows_, j) += cb * at(r, j);
    }
  }

  /// Runs primal simplex iterations with Bland's rule.  `allowed[j]` masks
  /// columns that may enter.
  Status iterate(const std::vector<bool>& allowed, const Options& opt, std::size_t& iterations) {
    while (true) {
      if (iterations >= opt.max_iterations) return Status::kIterationLimit;
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && at(rows_, j) < -opt.pivot_tol) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return Status::kOptimal;

      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= opt.pivot_tol) continue;
        const double ratio = rhs(r) / a;
        if (ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 && leave < rows_ && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave == rows_) return Status::kUnbounded;
      pivot(leave, enter);
      ++iterations;
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result solve(const Problem& p, const Options& opt) {
  const std::size_t n = p.objective.size();
  const std::size_t mu = p.ub_rows.size();
  const std::size_t me = p.eq_rows.size();
  if (p.ub_rhs.size() != mu || p.eq_rhs.size() != me) {
    throw std::invalid_argument("lp::solve: rhs size does not match row count");
  }
  for (const auto& row : p.ub_rows) {
    if (row.size() != n) throw std::invalid_argument("lp::solve: inequality row has wrong width");
  }
  for (const auto& row : p.eq_rows) {
    if (row.size() != n) throw std::invalid_argument("lp::solve: equality row has wrong width");
  }

  const std::size_t m = mu + me;
  // Column layout: [originals | one slack per inequality row | artificials].
  std::vector<int> sign(m, 1);
  std::size_t n_art = 0;
  std::vector<std::size_t> art_of_row(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const double b = r < mu ? p.ub_rhs[r] : p.eq_rhs[r - mu];
    if (b < 0.0) sign[r] = -1;
    const bool needs_art = r >= mu || sign[r] < 0;
    if (needs_art) art_of_row[r] = n_art++;
  }
  const std::size_t slack0 = n;
  const std::size_t art0 = n + mu;
  const std::size_t cols = art0 + n_art;

  Tableau t(m, cols);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = r < mu ? p.ub_rows[r] : p.eq_rows[r - mu];
    const double b = r < mu ? p.ub_rhs[r] : p.eq_rhs[r - mu];
    const double s = static_cast<double>(sign[r]);
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = s * row[j];
    if (r < mu) t.at(r, slack0 + r) = s;
    t.rhs(r) = s * b;
    const bool has_art = r >= mu || sign[r] < 0;
    if (has_art) {
      t.at(r, art0 + art_of_row[r]) = 1.0;
      t.basis()[r] = art0 + art_of_row[r];
    } else {
      t.basis()[r] = slack0 + r;
    }
  }

  Result result;
  std::vector<bool> allowed(cols, true);

  if (n_art > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1.0;
    t.load_objective(phase1);
    const Status s1 = t.iterate(allowed, opt, result.iterations);
    if (s1 == Status::kIterationLimit) {
      result.status = s1;
      return result;
    }
    if (t.objective() < -opt.feasibility_tol) {
      result.status = Status::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(t.at(r, j)) > opt.pivot_tol) {
          t.pivot(r, j);
          break;
        }
      }
    }
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  }

  std::vector<double> phase2(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  t.load_objective(phase2);
  result.status = t.iterate(allowed, opt, result.iterations);

  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) result.x[t.basis()[r]] = t.rhs(r);
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n; ++j) obj += p.objective[j] * result.x[j];
  result.objective = obj;
  return result;
}

}  // namespace beurling::lp
