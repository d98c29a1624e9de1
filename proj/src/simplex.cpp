#include "linespace/simplex.hpp"

#include <algorithm>

namespace linespace::lp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), obj_(cols + 1) {}

  mpq_class& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  mpq_class& rhs(std::size_t r) { return at(r, cols_); }
  mpq_class& obj(std::size_t c) { return obj_[c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t s) {
    const mpq_class inv = 1 / at(r, s);
    nonzero_.clear();
    for (std::size_t c = 0; c <= cols_; ++c) {
      mpq_class& v = at(r, c);
      if (sgn(v) != 0) {
        v *= inv;
        nonzero_.push_back(c);
      }
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(&cells_[i * (cols_ + 1)], r, s);
    }
    eliminate(obj_.data(), r, s);
  }

 private:
  void eliminate(mpq_class* row, std::size_t r, std::size_t s) {
    if (sgn(row[s]) == 0) return;
    const mpq_class f = row[s];
    const mpq_class* prow = &cells_[r * (cols_ + 1)];
    for (std::size_t c : nonzero_) {
      mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prow[c].get_mpq_t());
      mpq_sub(row[c].get_mpq_t(), row[c].get_mpq_t(), tmp_.get_mpq_t());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> cells_;
  std::vector<mpq_class> obj_;
  std::vector<std::size_t> nonzero_;
  mpq_class tmp_;
};

enum class Step { Optimal, Unbounded };

// Bland's rule: lowest-index improving column, ties in the ratio test go to
// the lowest-index basic variable.
Step run(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& allowed, std::size_t& pivots) {
  mpq_class best_ratio, ratio;
  for (;;) {
    std::size_t enter = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && sgn(t.obj(c)) > 0) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols()) return Step::Optimal;
    std::size_t leave = t.rows();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (sgn(t.at(r, enter)) <= 0) continue;
      ratio = t.rhs(r) / t.at(r, enter);
      if (leave == t.rows() || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == t.rows()) return Step::Unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++pivots;
  }
}

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t n = static_cast<std::size_t>(problem.variables);
  const std::size_t m = problem.rows.size();

  // Rows with rhs >= 0 after sign normalization; Le rows get a basic slack,
  // Ge rows a surplus plus an artificial, Eq rows an artificial.
  struct Norm {
    Sense sense;
    int sign;
  };
  std::vector<Norm> norm(m);
  std::size_t slack_count = 0, art_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    int sign = sgn(row.rhs) < 0 ? -1 : 1;
    Sense sense = row.sense;
    if (sign < 0 && sense != Sense::Eq) sense = sense == Sense::Le ? Sense::Ge : Sense::Le;
    if (sense == Sense::Ge && sgn(row.rhs) == 0) {
      sense = Sense::Le;
      sign = -1;
    }
    norm[i] = {sense, sign};
    if (sense != Sense::Eq) ++slack_count;
    if (sense != Sense::Le) ++art_count;
  }
  const std::size_t cols = n + slack_count + art_count;
  const std::size_t art_begin = n + slack_count;
  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n, next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    for (const auto& [var, coef] : row.terms) t.at(i, static_cast<std::size_t>(var)) += norm[i].sign * coef;
    t.rhs(i) = norm[i].sign * row.rhs;
    if (norm[i].sense == Sense::Le) {
      t.at(i, next_slack) = 1;
      basis[i] = next_slack++;
    } else {
      if (norm[i].sense == Sense::Ge) t.at(i, next_slack++) = -1;
      t.at(i, next_art) = 1;
      basis[i] = next_art++;
    }
  }

  Solution sol;
  std::vector<bool> allowed(cols, true);

  // Phase 1: maximize -(sum of artificials).
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < art_begin) continue;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c >= art_begin && c < cols) continue;
      if (sgn(t.at(i, c)) != 0) t.obj(c) += t.at(i, c);
    }
  }
  run(t, basis, allowed, sol.pivots);
  if (sgn(t.obj(cols)) > 0) {
    sol.status = Status::Infeasible;
    return sol;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < art_begin) continue;
    for (std::size_t c = 0; c < art_begin; ++c) {
      if (sgn(t.at(i, c)) != 0) {
        t.pivot(i, c);
        basis[i] = c;
        ++sol.pivots;
        break;
      }
    }
    // A row left with an artificial basic at zero is redundant; that
    // artificial can never re-enter because its column stays forbidden.
  }
  for (std::size_t c = art_begin; c < cols; ++c) allowed[c] = false;

  // Phase 2.
  for (std::size_t c = 0; c <= cols; ++c) t.obj(c) = 0;
  for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j) t.obj(j) = problem.objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = basis[i];
    if (b >= n || b >= problem.objective.size() || sgn(problem.objective[b]) == 0) continue;
    const mpq_class cb = problem.objective[b];
    for (std::size_t c = 0; c <= cols; ++c) {
      if (sgn(t.at(i, c)) != 0) t.obj(c) -= cb * t.at(i, c);
    }
  }
  if (run(t, basis, allowed, sol.pivots) == Step::Unbounded) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.value = -t.obj(cols);
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t.rhs(i);
  return sol;
}

}  // namespace linespace::lp
