#pragma once

#include <cstdint>
#include <vector>

namespace fpt {

inline constexpr std::uint64_t kMaxPrime = 2147483647ULL;  // 2^31 - 1

// Deterministic trial division; intended for p <= 2^31 - 1.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

}  // namespace fpt
