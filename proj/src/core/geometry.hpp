#pragma once

#include "basep.hpp"
#include "lp.hpp"
#include "polyring.hpp"

#include <optional>
#include <set>
#include <vector>

namespace fpt {

inline constexpr std::size_t kDefaultMaxDimension = 12;

// Generators with every monomial kept only in the first generator where it
// appears. Block i lists the surviving monomials of generator i.
struct ReducedMapping {
  std::size_t varcount = 0;
  std::vector<Polynomial> generators;
  std::vector<std::vector<Monomial>> blocks;
  // Coefficient of each surviving monomial in the original generator.
  std::vector<RationalVector> coefficients;

  std::vector<std::size_t> block_sizes() const;
  std::size_t columns() const;
};

// Columns are the surviving support vectors, block after block.
struct ExponentMatrix {
  std::size_t rows = 0;
  std::vector<Monomial> columns;
  std::vector<std::size_t> block_starts;  // t + 1 offsets into columns

  std::size_t cols() const { return columns.size(); }
  std::size_t blocks() const { return block_starts.empty() ? 0 : block_starts.size() - 1; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return columns[j][i]; }
  Matrix as_rational() const;
  // Splits a column vector into its block pieces.
  Blocks split(const RationalVector& v) const;
};

struct MaximalPointCert {
  Rational max_sum;  // M
  bool unique = false;
  std::optional<RationalVector> rho;
  Blocks rho_blocks;
  // Dimension of the face where the sum is maximal (0 when unique).
  std::size_t face_dimension = 0;
};

ReducedMapping reduce_generators(const std::vector<Polynomial>& gens);
ExponentMatrix exponent_matrix(const ReducedMapping& rm);
// Matrix built directly from integer rows; one block per column unless given.
ExponentMatrix matrix_from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                                std::vector<std::size_t> block_sizes = {});

struct LpOptimum {
  Rational value;
  RationalVector point;
};

// max objective . g over g >= 0, E g <= 1.
LpOptimum lp_maximize(const RationalVector& objective, const ExponentMatrix& e);
MaximalPointCert maximal_point(const ExponentMatrix& e);
std::vector<RationalVector> vertices(const ExponentMatrix& e,
                                     std::size_t max_dimension = kDefaultMaxDimension);

// min { s : s 1 lies in the Newton polyhedron of the supports }.
Rational newton_min_diagonal(const std::vector<Monomial>& supports);
bool diagonal_position(const std::vector<Monomial>& supports);
std::set<std::size_t> diagonal_face_columns(const ExponentMatrix& e);

// True iff the only g >= 0 with E g = E t and |g| = |t| is t itself.
bool is_isolated_point(const ExponentMatrix& e, const RationalVector& t);

}  // namespace fpt
