#pragma once

#include "basep.hpp"
#include "budget.hpp"
#include "geometry.hpp"
#include "polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpt {

enum class BoundKind { Exact, LowerBound };

// Everything derived from a generator list at one prime.
struct PreparedMapping {
  std::uint64_t p = 0;
  std::vector<Polynomial> generators;  // over F_p
  ReducedMapping reduced;
  ExponentMatrix matrix;
  MaximalPointCert maximal;
};

struct FptCertificate {
  std::uint64_t p = 0;
  Blocks rho_blocks;
  std::vector<CarryHorizon> horizons;
  std::vector<std::size_t> finite_set;  // 0-based block indices with finite horizon
  BoundKind kind = BoundKind::Exact;
  Rational value;
  Rational upper_bound;   // min(t, |rho|)
  Blocks truncations;     // <rho_i>_{S_i} for i in finite_set, in that order
  Rational max_sum;       // |rho|
};

// Reduces mod p when needed and requires a unique maximal point.
PreparedMapping prepare(const std::vector<Polynomial>& gens, std::uint64_t p);

Rational monomial_fpt(const std::vector<Monomial>& supports);
FptCertificate fpt_bound(const std::vector<Polynomial>& gens, std::uint64_t p);
FptCertificate certificate_from(const PreparedMapping& pm);

std::uint64_t nu(const std::vector<Polynomial>& gens, std::uint64_t e, const Budgets& budgets = {});

struct NuSample {
  std::uint64_t e = 0;
  std::uint64_t nu = 0;
  Rational ratio;
};
std::vector<NuSample> fpt_estimate(const std::vector<Polynomial>& gens, std::uint64_t p,
                                   std::uint64_t e_max, const Budgets& budgets = {});

// Exponent that the lower-bound argument certifies at level S + extra:
// a^exponent is not inside m^[p^level].
struct BoundWitness {
  std::uint64_t level = 0;
  Integer exponent;
  RationalVector point;  // the truncated point whose monomial escapes
};
BoundWitness lower_bound_witness(const FptCertificate& cert, std::uint64_t extra);

struct CoefficientReport {
  std::uint64_t p = 0;
  std::uint64_t e = 0;
  Monomial target;
  std::vector<Integer> powers;  // p^e |<rho_i>_e| per generator
  Rational observed;
  Rational expected;
  bool match = false;
};
CoefficientReport coefficient_witness(const std::vector<Polynomial>& gens, std::uint64_t p,
                                      std::uint64_t e, const Budgets& budgets = {});

enum class LctCase { DiagonalAboveT, DiagonalAtMostT, Inconclusive };

struct PrimeCheck {
  std::uint64_t p = 0;
  bool holds = false;
  bool coefficient_check = false;   // no coefficient divisible by p (sufficient for equal Newton polyhedra)
  bool in_predicate = false;        // first-digit or carry-free condition on rho
  bool certified_by_bound = false;  // lower bound at p already equals the verdict value
  bool big_enough_caveat = true;    // "p large enough" has no explicit bound, so it stays unchecked
};

struct LctVerdict {
  LctCase which = LctCase::Inconclusive;
  std::optional<Rational> value;
  std::string predicate;
  std::string failed_hypothesis;
  Blocks rho_blocks;
  Rational max_sum;
  std::size_t generators = 0;
  std::vector<PrimeCheck> checked_primes;
};

LctVerdict lct_fpt_classifier(const std::vector<Polynomial>& gens);
PrimeCheck verify_prime(const std::vector<Polynomial>& gens, std::uint64_t p, const LctVerdict& verdict);

const char* to_string(BoundKind kind);
const char* to_string(LctCase which);

}  // namespace fpt
