#pragma once

#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fpt {

// Nonterminating base-p expansion of a rational in (0,1]:
// value = sum_k digit_k / p^k with digits = preperiod then period repeated.
struct DigitStream {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> preperiod;
  std::vector<std::uint64_t> period;
  Rational value;

  // k >= 1.
  std::uint64_t at(std::uint64_t k) const;
};

// Sup of the levels up to which a block adds without carrying.
// nullopt stands for Infinity.
struct CarryHorizon {
  std::optional<std::uint64_t> value;

  bool infinite() const { return !value.has_value(); }
  friend bool operator==(const CarryHorizon&, const CarryHorizon&) = default;
};

using Blocks = std::vector<RationalVector>;

DigitStream digits(const Rational& alpha, std::uint64_t p);
// Rebuilds the rational from preperiod and period (geometric series).
Rational stream_value(const DigitStream& stream);
// ceil(p^k a) - 1 - p (ceil(p^{k-1} a) - 1); 0 for a = 0.
std::uint64_t digit_at(const Rational& alpha, std::uint64_t p, std::uint64_t k);

// e = nullopt means e = infinity.
Rational truncation(const Rational& alpha, std::uint64_t p, std::optional<std::uint64_t> e);
RationalVector truncation(const RationalVector& alphas, std::uint64_t p,
                          std::optional<std::uint64_t> e);

bool adds_without_carrying(const RationalVector& alphas, std::uint64_t p);
// Only digit positions 1..e are inspected.
bool adds_without_carrying_upto(const RationalVector& alphas, std::uint64_t p, std::uint64_t e);
CarryHorizon carry_horizon(const RationalVector& block, std::uint64_t p);

// Digit-wise Lucas test for total! / prod(parts!) mod p.
bool multinomial_nonzero_mod_p(const Integer& total, const std::vector<Integer>& parts,
                               std::uint64_t p);

// Every block has coordinate sum > 1 and first-digit sum >= p.
bool in_P_rho_0(const Blocks& blocks, std::uint64_t p);
bool in_P_rho_inf(const Blocks& blocks, std::uint64_t p);

}  // namespace fpt
