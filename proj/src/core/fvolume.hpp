#pragma once

#include "budget.hpp"
#include "thresholds.hpp"

#include <optional>
#include <vector>

namespace fpt {

using IdealList = std::vector<std::vector<Polynomial>>;

struct VolumeCount {
  std::uint64_t e = 0;
  std::uint64_t count = 0;
  // Tuples in V with some successor n + e_i outside V.
  std::uint64_t boundary = 0;
  Rational estimate;  // count / p^{e t}
};

struct FVolumeCertificate {
  std::uint64_t p = 0;
  Rational bound;
  Blocks rho_blocks;
  std::vector<CarryHorizon> horizons;
  std::vector<std::size_t> finite_set;
  std::vector<VolumeCount> counts;
};

struct ProductBound {
  Rational bound;
  RationalVector witness;
};

VolumeCount fvolume_count(const IdealList& ideals, std::uint64_t e, const Budgets& budgets = {});
std::vector<VolumeCount> fvolume_estimate(const IdealList& ideals, std::uint64_t p, std::uint64_t e_max,
                                          const Budgets& budgets = {});
FVolumeCertificate fvolume_lower_bound(const std::vector<Polynomial>& gens, std::uint64_t p);
ProductBound term_ideal_volume_bound(const std::vector<Polynomial>& gens,
                                     std::size_t max_dimension = kDefaultMaxDimension);

}  // namespace fpt
