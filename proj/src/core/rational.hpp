#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpt {

using Integer = mpz_class;
// Always canonical: mpq_class arithmetic keeps lowest terms with a positive
// denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "n", "-n", "n/d". Throws Error(Domain) on malformed text or d = 0.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::uint64_t exponent);
Integer ceil(const Rational& value);
Integer floor(const Rational& value);

// p^e saturated at `cap`.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent,
                             std::uint64_t cap = UINT64_MAX);

// Fixed-point rendering rounded half-up, e.g. "0.750000".
std::string to_decimal(const Rational& value, unsigned places = 6);

Rational sum(const RationalVector& values);

}  // namespace fpt
