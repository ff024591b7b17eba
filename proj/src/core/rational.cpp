#include "rational.hpp"

#include "error.hpp"

#include <cctype>

namespace fpt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num_text = s.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw Error(ErrorKind::Domain, "malformed rational '" + std::string(text) + "'");
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (negative) num = -num;
  return make_rational(num, den);
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational rpow(const Rational& base, std::uint64_t exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result < cap ? result : cap;
}

std::string to_decimal(const Rational& value, unsigned places) {
  const Integer scale = ipow(10, places);
  Rational scaled = value * scale;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer rounded = floor(scaled + Rational(1, 2));
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string frac_text = frac.get_str();
  if (frac_text.size() < places) frac_text.insert(0, places - frac_text.size(), '0');
  std::string out = negative && rounded != 0 ? "-" : "";
  out += whole.get_str();
  if (places > 0) out += "." + frac_text;
  return out;
}

Rational sum(const RationalVector& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace fpt
