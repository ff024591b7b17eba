#include "lp.hpp"

#include "error.hpp"

#include <limits>

namespace fpt {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cells_(rows, RationalVector(cols + 1, 0)), basis_(rows, kNone), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return cells_[i][j]; }
  Rational& rhs(std::size_t i) { return cells_[i][cols_]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = cells_[row];
    const Rational scale = pr[col];
    for (auto& v : pr) v /= scale;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row || cells_[i][col] == 0) continue;
      const Rational factor = cells_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (pr[j] != 0) cells_[i][j] -= factor * pr[j];
    }
    if (reduced_.size() == cols_ + 1 && reduced_[col] != 0) {
      const Rational factor = reduced_[col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (pr[j] != 0) reduced_[j] -= factor * pr[j];
    }
    basis_[row] = col;
  }

  // reduced_[j] = c_j - c_B B^{-1} A_j; reduced_[cols] = -(current value).
  void set_objective(const RationalVector& cost) {
    reduced_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) reduced_[j] -= cb * cells_[i][j];
    }
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && reduced_[j] > 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i][enter] <= 0) continue;
        Rational ratio = cells_[i][cols_] / cells_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t i) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  Matrix cells_;
  std::vector<std::size_t> basis_;
  RationalVector reduced_;
  std::size_t cols_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.nvars;
  if (lp.objective.size() != n) throw Error(ErrorKind::Internal, "objective length mismatch");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != n) throw Error(ErrorKind::Internal, "constraint length mismatch");

  // Columns: originals, then one slack/surplus per inequality, then artificials.
  std::size_t slack_count = 0, art_count = 0;
  for (const auto& row : lp.rows) {
    const bool flip = row.rhs < 0;
    Sense s = row.sense;
    if (flip && s != Sense::Equal) s = s == Sense::LessEq ? Sense::GreaterEq : Sense::LessEq;
    if (s != Sense::Equal) ++slack_count;
    if (s != Sense::LessEq) ++art_count;
  }
  const std::size_t cols = n + slack_count + art_count;
  Tableau t(lp.rows.size(), cols);
  std::vector<bool> artificial(cols, false);
  std::size_t next_slack = n, next_art = n + slack_count;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& row = lp.rows[i];
    const bool flip = row.rhs < 0;
    Sense s = row.sense;
    if (flip && s != Sense::Equal) s = s == Sense::LessEq ? Sense::GreaterEq : Sense::LessEq;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? Rational(-row.coeffs[j]) : row.coeffs[j];
    t.rhs(i) = flip ? Rational(-row.rhs) : row.rhs;
    if (s == Sense::LessEq) {
      t.at(i, next_slack) = 1;
      t.basic(i) = next_slack++;
    } else {
      if (s == Sense::GreaterEq) t.at(i, next_slack++) = -1;
      t.at(i, next_art) = 1;
      artificial[next_art] = true;
      t.basic(i) = next_art++;
    }
  }

  LpResult result;
  std::vector<bool> allowed(cols, true);
  if (art_count > 0) {
    RationalVector phase1(cols, 0);
    for (std::size_t j = 0; j < cols; ++j)
      if (artificial[j]) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (artificial[t.basic(i)]) infeasibility += t.rhs(i);
    if (infeasibility != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (!artificial[t.basic(i)]) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < cols; ++j)
        if (!artificial[j] && t.at(i, j) != 0) {
          col = j;
          break;
        }
      if (col == kNone)
        t.drop_row(i);
      else
        t.pivot(i, col);
    }
    for (std::size_t j = 0; j < cols; ++j) allowed[j] = !artificial[j];
  }

  RationalVector cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  t.set_objective(cost);
  if (!t.optimize(allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.point.assign(n, 0);
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basic(i) < n) result.point[t.basic(i)] = t.rhs(i);
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * result.point[j];
  return result;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& a, RationalVector* rhs) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    if (rhs) std::swap((*rhs)[sel], (*rhs)[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      if (rhs) (*rhs)[i] -= factor * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_square(Matrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::Internal, "right-hand side length mismatch");
  auto pivots = eliminate(a, &b);
  if (pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::size_t matrix_rank(Matrix a) { return eliminate(a, nullptr).size(); }

}  // namespace fpt
