#pragma once

#include "rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpt {

// Coefficient ring of a polynomial: exact rationals or a prime field.
struct Ring {
  enum class Kind { Rationals, IntegersMod };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static Ring rationals() { return {}; }
  // Throws Error(Domain) unless p is prime.
  static Ring integers_mod(std::uint64_t p);

  bool is_modular() const { return kind == Kind::IntegersMod; }
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t varcount) : exps_(varcount, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  // Componentwise order: this ⪯ other.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial scaled(std::uint64_t factor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Total degree ascending; ties broken lexicographically with larger leading
// exponents first, so x^2 < x*y < y^2.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedOrder>;

  Polynomial(Ring ring, std::size_t varcount) : ring_(ring), varcount_(varcount) {}

  static Polynomial constant(Ring ring, std::size_t varcount, const Rational& value);
  static Polynomial term(Ring ring, const Monomial& monomial, const Rational& coeff);

  const Ring& ring() const { return ring_; }
  std::size_t varcount() const { return varcount_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t degree() const;

  // Adds coeff * monomial, reducing into the coefficient ring.
  void add_term(const Monomial& monomial, const Rational& coeff);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Ring element representing `value` (mod p when modular).
  Rational normalize(const Rational& value) const;

 private:
  friend class TermAccumulator;

  Ring ring_;
  std::size_t varcount_;
  TermMap terms_;
};

// Strict weak order on polynomials of one ring; used to deduplicate products.
struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& a, std::uint64_t n);
Polynomial reduce_mod_p(const Polynomial& a, std::uint64_t p);
std::vector<Monomial> support(const Polynomial& a);
// Membership in (x_1^{p^e}, ..., x_m^{p^e}); requires a modular ring.
bool in_frobenius_power(const Polynomial& a, std::uint64_t e);
Rational coefficient_of(const Polynomial& a, const Monomial& mon);

// Terms in the monomial ideal (x_1^q, ..., x_m^q) are dropped.
Polynomial truncate_frobenius(const Polynomial& a, std::uint64_t q);
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t q);
// Only terms dividing `bound` are kept.
Polynomial mul_bounded(const Polynomial& a, const Polynomial& b, const Monomial& bound);
Polynomial pow_bounded(const Polynomial& a, std::uint64_t n, const Monomial& bound);
// x_i -> x_i^q with coefficients kept; equals a^q over F_p when q is a power of p.
Polynomial frobenius(const Polynomial& a, std::uint64_t q);

// Multiplies by the lcm of denominators and divides by the content, giving a
// primitive integer polynomial. Requires the rational ring.
Polynomial primitive_integer_form(const Polynomial& a);

void validate_variables(std::span<const std::string> variables);
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);
// Inverse of parse_polynomial: descending graded order, e.g. "x*y^2 + x^2".
std::string to_string(const Polynomial& a, std::span<const std::string> variables);

}  // namespace fpt
