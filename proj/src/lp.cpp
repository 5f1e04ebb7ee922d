#include "newton_segre/lp.hpp"

#include <cstddef>
#include <limits>
#include <string>

#include "newton_segre/error.hpp"

namespace nsegre {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Dense tableau in canonical form: basis column of row i is basis[i], the
// last column holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<Rational>(cols + 1)), basis_(rows, npos) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    auto& prow = cells_[row];
    const Rational inv = 1 / prow[col];
    for (auto& v : prow)
      if (sgn(v) != 0) v *= inv;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r == row) continue;
      auto& target = cells_[r];
      if (sgn(target[col]) == 0) continue;
      const Rational factor = target[col];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (sgn(prow[c]) != 0) target[c] -= factor * prow[c];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

enum class Phase { Optimal, Unbounded };

// Minimizes cost . x over columns [0, allowed). Bland's rule: lowest-index
// improving column enters; ratio ties go to the lowest basic index.
Phase run_simplex(Tableau& t, const std::vector<Rational>& cost, std::size_t allowed) {
  auto& basis = t.basis();
  for (;;) {
    std::size_t entering = npos;
    for (std::size_t j = 0; j < allowed && entering == npos; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows(); ++i)
        if (sgn(t.at(i, j)) != 0 && sgn(cost[basis[i]]) != 0) reduced -= cost[basis[i]] * t.at(i, j);
      if (sgn(reduced) < 0) entering = j;
    }
    if (entering == npos) return Phase::Optimal;

    std::size_t leaving = npos;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (sgn(t.at(i, entering)) <= 0) continue;
      Rational ratio = t.rhs(i) / t.at(i, entering);
      if (leaving == npos || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == npos) return Phase::Unbounded;
    t.pivot(leaving, entering);
  }
}

}  // namespace

LpOutcome solve_lp(const LpProblem& problem) {
  const std::size_t nvars = problem.objective.size();
  if (!problem.upper_bounds.empty() && problem.upper_bounds.size() != nvars)
    throw Error(ErrorCode::InvalidArgument, "upper_bounds must have one entry per variable");

  std::vector<LpConstraint> rows;
  rows.reserve(problem.constraints.size() + nvars);
  for (const auto& c : problem.constraints) {
    if (c.coefficients.size() != nvars)
      throw Error(ErrorCode::InvalidArgument,
                  "constraint has " + std::to_string(c.coefficients.size()) + " coefficients, expected " +
                      std::to_string(nvars));
    rows.push_back(c);
  }
  for (std::size_t j = 0; j < problem.upper_bounds.size(); ++j) {
    if (!problem.upper_bounds[j]) continue;
    LpConstraint bound{std::vector<Rational>(nvars), ConstraintSense::LessEqual, *problem.upper_bounds[j]};
    bound.coefficients[j] = 1;
    rows.push_back(std::move(bound));
  }
  for (auto& row : rows) {
    if (sgn(row.rhs) >= 0) continue;
    for (auto& a : row.coefficients) a = -a;
    row.rhs = -row.rhs;
    if (row.sense == ConstraintSense::LessEqual) row.sense = ConstraintSense::GreaterEqual;
    else if (row.sense == ConstraintSense::GreaterEqual) row.sense = ConstraintSense::LessEqual;
  }

  // Column layout: structural | slack/surplus | artificial.
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& row : rows) {
    if (row.sense != ConstraintSense::Equal) ++n_slack;
    if (row.sense != ConstraintSense::LessEqual) ++n_art;
  }
  const std::size_t art_begin = nvars + n_slack;
  const std::size_t total = art_begin + n_art;

  Tableau t(rows.size(), total);
  std::size_t slack = nvars, art = art_begin;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < nvars; ++j) t.at(i, j) = rows[i].coefficients[j];
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case ConstraintSense::LessEqual:
        t.at(i, slack) = 1;
        t.basis()[i] = slack++;
        break;
      case ConstraintSense::GreaterEqual:
        t.at(i, slack++) = -1;
        t.at(i, art) = 1;
        t.basis()[i] = art++;
        break;
      case ConstraintSense::Equal:
        t.at(i, art) = 1;
        t.basis()[i] = art++;
        break;
    }
  }

  LpOutcome outcome;

  if (n_art > 0) {
    std::vector<Rational> phase1(total);
    for (std::size_t j = art_begin; j < total; ++j) phase1[j] = 1;
    run_simplex(t, phase1, total);  // bounded below by 0
    Rational infeasibility;
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (t.basis()[i] >= art_begin) infeasibility += t.rhs(i);
    if (sgn(infeasibility) != 0) {
      outcome.status = LpStatus::Infeasible;
      return outcome;
    }
    // Pivot zero-level artificials out of the basis; rows with no structural
    // or slack entry are redundant.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t col = npos;
      for (std::size_t j = 0; j < art_begin && col == npos; ++j)
        if (sgn(t.at(i, j)) != 0) col = j;
      if (col == npos) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<Rational> cost(total);
  for (std::size_t j = 0; j < nvars; ++j)
    cost[j] = problem.direction == ObjectiveSense::Minimize ? problem.objective[j] : Rational(-problem.objective[j]);
  if (run_simplex(t, cost, art_begin) == Phase::Unbounded) {
    outcome.status = LpStatus::Unbounded;
    return outcome;
  }

  outcome.status = LpStatus::Optimal;
  outcome.witness.assign(nvars, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] < nvars) outcome.witness[t.basis()[i]] = t.rhs(i);
  for (std::size_t j = 0; j < nvars; ++j) outcome.optimum += problem.objective[j] * outcome.witness[j];
  return outcome;
}

}  // namespace nsegre
