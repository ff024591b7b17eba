#pragma once

#include <cstddef>
#include <cstdint>

namespace fpt {

struct Budgets {
  std::uint64_t max_multisets = 1'000'000;  // generator products kept, summed over a run
  std::uint64_t max_terms = 10'000'000;     // terms in one product
  std::size_t max_dimension = 12;           // columns for vertex enumeration
};

}  // namespace fpt
