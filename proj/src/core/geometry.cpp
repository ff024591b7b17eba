#include "geometry.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace fpt {

std::vector<std::size_t> ReducedMapping::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

std::size_t ReducedMapping::columns() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

ReducedMapping reduce_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorKind::Domain, "generator list is empty");
  ReducedMapping rm;
  rm.varcount = gens.front().varcount();
  std::set<std::vector<Exponent>> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (!(g.ring() == gens.front().ring()) || g.varcount() != rm.varcount)
      throw Error(ErrorKind::RingMismatch, "generators live in different rings");
    if (g.is_zero())
      throw Error(ErrorKind::ZeroGenerator, "generator " + std::to_string(i + 1) + " is zero");
    if (coefficient_of(g, Monomial(rm.varcount)) != 0)
      throw Error(ErrorKind::NotInMaximalIdeal,
                  "generator " + std::to_string(i + 1) + " has a nonzero constant term");
    std::vector<Monomial> block;
    RationalVector coeffs;
    for (const auto& [mon, c] : g.terms()) {
      if (seen.count(mon.exponents())) continue;
      block.push_back(mon);
      coeffs.push_back(c);
    }
    if (block.empty())
      throw Error(ErrorKind::EmptyBlock, "every monomial of generator " + std::to_string(i + 1) +
                                             " already occurs in an earlier generator");
    for (const auto& mon : block) seen.insert(mon.exponents());
    rm.generators.push_back(g);
    rm.blocks.push_back(std::move(block));
    rm.coefficients.push_back(std::move(coeffs));
  }
  return rm;
}

ExponentMatrix exponent_matrix(const ReducedMapping& rm) {
  ExponentMatrix e;
  e.rows = rm.varcount;
  e.block_starts.push_back(0);
  for (const auto& block : rm.blocks) {
    for (const auto& mon : block) e.columns.push_back(mon);
    e.block_starts.push_back(e.columns.size());
  }
  return e;
}

ExponentMatrix matrix_from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                                std::vector<std::size_t> block_sizes) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::Domain, "empty exponent matrix");
  const std::size_t n = rows.front().size();
  ExponentMatrix e;
  e.rows = rows.size();
  for (std::size_t j = 0; j < n; ++j) {
    Monomial col(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) throw Error(ErrorKind::Domain, "ragged exponent matrix");
      col[i] = static_cast<Exponent>(rows[i][j]);
    }
    if (col.is_one()) throw Error(ErrorKind::Domain, "exponent matrix has a zero column");
    e.columns.push_back(col);
  }
  if (block_sizes.empty()) block_sizes.assign(n, 1);
  e.block_starts.push_back(0);
  for (auto s : block_sizes) {
    if (s == 0) throw Error(ErrorKind::EmptyBlock, "empty block");
    e.block_starts.push_back(e.block_starts.back() + s);
  }
  if (e.block_starts.back() != n) throw Error(ErrorKind::Domain, "block sizes do not cover the columns");
  return e;
}

Matrix ExponentMatrix::as_rational() const {
  Matrix out(rows, RationalVector(cols(), 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i][j] = static_cast<unsigned long>(at(i, j));
  return out;
}

Blocks ExponentMatrix::split(const RationalVector& v) const {
  Blocks out;
  for (std::size_t b = 0; b + 1 < block_starts.size(); ++b)
    out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(block_starts[b]),
                     v.begin() + static_cast<std::ptrdiff_t>(block_starts[b + 1]));
  return out;
}

namespace {

// g >= 0, E g <= 1, plus optional extra rows.
LinearProgram polytope_program(const ExponentMatrix& e, const RationalVector& objective) {
  LinearProgram lp;
  lp.nvars = e.cols();
  lp.objective = objective;
  const Matrix a = e.as_rational();
  for (const auto& row : a) lp.rows.push_back({row, Sense::LessEq, 1});
  return lp;
}

LpResult must_solve(const LinearProgram& lp) {
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw Error(ErrorKind::Internal, "linear program over a polytope did not reach an optimum");
  return r;
}

RationalVector unit(std::size_t n, std::size_t j, int sign) {
  RationalVector v(n, 0);
  v[j] = sign;
  return v;
}

}  // namespace

LpOptimum lp_maximize(const RationalVector& objective, const ExponentMatrix& e) {
  if (objective.size() != e.cols()) throw Error(ErrorKind::Domain, "objective length mismatch");
  const auto r = must_solve(polytope_program(e, objective));
  return {r.value, r.point};
}

MaximalPointCert maximal_point(const ExponentMatrix& e) {
  const std::size_t n = e.cols();
  MaximalPointCert cert;
  const auto best = lp_maximize(RationalVector(n, 1), e);
  cert.max_sum = best.value;

  // Optimal face: polytope with |g| = M added.
  LinearProgram face = polytope_program(e, RationalVector(n, 0));
  face.rows.push_back({RationalVector(n, 1), Sense::Equal, cert.max_sum});

  RationalVector lo(n), hi(n);
  bool unique = true;
  for (std::size_t j = 0; j < n; ++j) {
    face.objective = unit(n, j, 1);
    hi[j] = must_solve(face).value;
    face.objective = unit(n, j, -1);
    lo[j] = -must_solve(face).value;
    if (lo[j] != hi[j]) unique = false;
  }
  cert.unique = unique;
  if (unique) {
    cert.rho = hi;
    cert.rho_blocks = e.split(hi);
    cert.face_dimension = 0;
    return cert;
  }

  // Implicit equalities of the face fix its affine hull.
  const Matrix a = e.as_rational();
  Matrix tight;
  tight.push_back(RationalVector(n, 1));
  for (std::size_t j = 0; j < n; ++j)
    if (hi[j] == 0) tight.push_back(unit(n, j, 1));
  for (const auto& row : a) {
    RationalVector neg(n);
    for (std::size_t j = 0; j < n; ++j) neg[j] = -row[j];
    face.objective = neg;
    if (-must_solve(face).value == 1) tight.push_back(row);
  }
  cert.face_dimension = n - matrix_rank(tight);
  return cert;
}

std::vector<RationalVector> vertices(const ExponentMatrix& e, std::size_t max_dimension) {
  const std::size_t n = e.cols();
  const std::size_t m = e.rows;
  if (n > max_dimension)
    throw Error(ErrorKind::DimensionTooLarge, "vertex enumeration limited to " +
                                                  std::to_string(max_dimension) + " columns, got " +
                                                  std::to_string(n));
  const Matrix a = e.as_rational();
  std::set<RationalVector> found;
  // Zero set chosen by bitmask over columns; free columns solved against
  // every choice of equally many tight rows.
  for (std::uint32_t zero_mask = 0; zero_mask < (1u << n); ++zero_mask) {
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
      if (!(zero_mask & (1u << j))) free_cols.push_back(j);
    const std::size_t k = free_cols.size();
    if (k > m) continue;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Matrix sq;
      for (std::size_t i = 0; i < m; ++i) {
        if (!pick[i]) continue;
        RationalVector row;
        for (auto j : free_cols) row.push_back(a[i][j]);
        sq.push_back(std::move(row));
      }
      RationalVector sol;
      if (k > 0) {
        auto x = solve_square(sq, RationalVector(k, 1));
        if (!x) continue;
        sol = std::move(*x);
      }
      RationalVector g(n, 0);
      bool ok = true;
      for (std::size_t idx = 0; idx < k; ++idx) {
        if (sol[idx] < 0) ok = false;
        g[free_cols[idx]] = sol[idx];
      }
      for (std::size_t i = 0; ok && i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * g[j];
        if (lhs > 1) ok = false;
      }
      if (ok) found.insert(g);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {found.begin(), found.end()};
}

namespace {

void require_supports(const std::vector<Monomial>& supports) {
  if (supports.empty()) throw Error(ErrorKind::Domain, "support set is empty");
  for (const auto& s : supports) {
    if (s.size() != supports.front().size())
      throw Error(ErrorKind::Domain, "support vectors have different lengths");
    if (s.is_one()) throw Error(ErrorKind::NotInMaximalIdeal, "support contains the zero vector");
  }
}

// Variables: lambda (n), then per-row slack delta (m) when allowed, then s.
// Rows: sum lambda_a a_r + delta_r - s = 0, sum lambda = 1.
LinearProgram diagonal_program(const std::vector<Monomial>& supports, bool with_slack,
                               const std::optional<Rational>& fixed_s) {
  const std::size_t n = supports.size();
  const std::size_t m = supports.front().size();
  const std::size_t slack = with_slack ? m : 0;
  const std::size_t s_col = n + slack;
  LinearProgram lp;
  lp.nvars = s_col + 1;
  lp.objective.assign(lp.nvars, 0);
  for (std::size_t r = 0; r < m; ++r) {
    RationalVector row(lp.nvars, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<unsigned long>(supports[j][r]);
    if (with_slack) row[n + r] = 1;
    row[s_col] = -1;
    lp.rows.push_back({row, Sense::Equal, 0});
  }
  RationalVector total(lp.nvars, 0);
  for (std::size_t j = 0; j < n; ++j) total[j] = 1;
  lp.rows.push_back({total, Sense::Equal, 1});
  if (fixed_s) lp.rows.push_back({unit(lp.nvars, s_col, 1), Sense::Equal, *fixed_s});
  return lp;
}

}  // namespace

Rational newton_min_diagonal(const std::vector<Monomial>& supports) {
  require_supports(supports);
  LinearProgram lp = diagonal_program(supports, true, std::nullopt);
  lp.objective.back() = -1;
  return -must_solve(lp).value;
}

bool diagonal_position(const std::vector<Monomial>& supports) {
  require_supports(supports);
  const Rational s = newton_min_diagonal(supports);
  return solve_lp(diagonal_program(supports, false, s)).status == LpStatus::Optimal;
}

std::set<std::size_t> diagonal_face_columns(const ExponentMatrix& e) {
  const auto& supports = e.columns;
  require_supports(supports);
  if (!diagonal_position(supports))
    throw Error(ErrorKind::NotDiagonal, "the diagonal ray does not meet a compact face");
  const Rational s = newton_min_diagonal(supports);
  LinearProgram lp = diagonal_program(supports, false, s);
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    lp.objective.assign(lp.nvars, 0);
    lp.objective[j] = 1;
    if (must_solve(lp).value > 0) out.insert(j);
  }
  return out;
}

bool is_isolated_point(const ExponentMatrix& e, const RationalVector& t) {
  const std::size_t n = e.cols();
  if (t.size() != n) throw Error(ErrorKind::Domain, "point length mismatch");
  const Matrix a = e.as_rational();
  LinearProgram lp;
  lp.nvars = n;
  for (const auto& row : a) {
    Rational rhs = 0;
    for (std::size_t j = 0; j < n; ++j) rhs += row[j] * t[j];
    lp.rows.push_back({row, Sense::Equal, rhs});
  }
  lp.rows.push_back({RationalVector(n, 1), Sense::Equal, sum(t)});
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective = unit(n, j, 1);
    if (must_solve(lp).value != t[j]) return false;
    lp.objective = unit(n, j, -1);
    if (-must_solve(lp).value != t[j]) return false;
  }
  return true;
}

}  // namespace fpt
