#include "polyring.hpp"

#include "error.hpp"
#include "primes.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <unordered_map>

namespace fpt {

// ---------------------------------------------------------------- Ring

Ring Ring::integers_mod(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error(ErrorKind::Domain, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  Ring r;
  r.kind = Kind::IntegersMod;
  r.p = static_cast<std::uint32_t>(p);
  return r;
}

std::string Ring::name() const {
  return is_modular() ? "ZZ/" + std::to_string(p) : "QQ";
}

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

namespace {

Exponent checked_exponent(std::uint64_t value) {
  if (value > std::numeric_limits<Exponent>::max())
    throw Error(ErrorKind::Domain, "exponent overflow");
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  return out;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && factor > std::numeric_limits<Exponent>::max() / exps_[i])
      throw Error(ErrorKind::Domain, "exponent overflow");
    out.exps_[i] = static_cast<Exponent>(exps_[i] * factor);
  }
  return out;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Equal degree: the monomial with the larger leading exponent sorts first.
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------- helpers

namespace {

std::uint64_t mod_value(const Rational& c) {
  // c is an integer in [0, p) for modular rings.
  return c.get_num().get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::RingMismatch, "ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  if (a.varcount() != b.varcount())
    throw Error(ErrorKind::RingMismatch, "variable count mismatch");
}

}  // namespace

// Collects products in a hash map and emits a canonical polynomial.
class TermAccumulator {
 public:
  TermAccumulator(Ring ring, std::size_t varcount) : ring_(ring), varcount_(varcount) {}

  void add(Monomial mon, const Rational& c) {
    auto [it, inserted] = rational_.try_emplace(std::move(mon), c);
    if (!inserted) it->second += c;
  }

  void add_mod(Monomial mon, std::uint64_t c) {
    auto [it, inserted] = modular_.try_emplace(std::move(mon), c);
    if (!inserted) it->second = (it->second + c) % ring_.p;
  }

  Polynomial finish() {
    Polynomial out(ring_, varcount_);
    if (ring_.is_modular()) {
      for (auto& [mon, c] : modular_)
        if (c != 0) out.terms_.emplace(mon, Rational(static_cast<unsigned long>(c)));
    } else {
      for (auto& [mon, c] : rational_)
        if (c != 0) out.terms_.emplace(mon, c);
    }
    return out;
  }

 private:
  Ring ring_;
  std::size_t varcount_;
  std::unordered_map<Monomial, Rational, MonomialHash> rational_;
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> modular_;
};

namespace {

template <typename Keep>
Polynomial multiply(const Polynomial& a, const Polynomial& b, Keep keep) {
  require_compatible(a, b);
  TermAccumulator acc(a.ring(), a.varcount());
  if (a.ring().is_modular()) {
    const std::uint64_t p = a.ring().p;
    std::vector<std::pair<const Monomial*, std::uint64_t>> bt;
    bt.reserve(b.size());
    for (const auto& [mon, c] : b.terms()) bt.emplace_back(&mon, mod_value(c));
    for (const auto& [ma, ca] : a.terms()) {
      const std::uint64_t va = mod_value(ca);
      for (const auto& [mb, vb] : bt) {
        Monomial prod = ma * *mb;
        if (keep(prod)) acc.add_mod(std::move(prod), va * vb % p);
      }
    }
  } else {
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        Monomial prod = ma * mb;
        if (keep(prod)) acc.add(std::move(prod), ca * cb);
      }
  }
  return acc.finish();
}

Polynomial one_like(const Polynomial& a) {
  return Polynomial::constant(a.ring(), a.varcount(), 1);
}

template <typename Mul>
Polynomial binary_pow(const Polynomial& a, std::uint64_t n, Mul mul) {
  Polynomial result = one_like(a);
  Polynomial base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

Monomial floor_div(const Monomial& bound, std::uint64_t q) {
  Monomial out(bound.size());
  for (std::size_t i = 0; i < bound.size(); ++i) out[i] = static_cast<Exponent>(bound[i] / q);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Ring ring, std::size_t varcount, const Rational& value) {
  Polynomial out(ring, varcount);
  out.add_term(Monomial(varcount), value);
  return out;
}

Polynomial Polynomial::term(Ring ring, const Monomial& monomial, const Rational& coeff) {
  Polynomial out(ring, monomial.size());
  out.add_term(monomial, coeff);
  return out;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [mon, c] : terms_) d = std::max(d, mon.degree());
  return d;
}

Rational Polynomial::normalize(const Rational& value) const {
  if (!ring_.is_modular()) return value;
  const std::uint64_t p = ring_.p;
  Integer den_mod = value.get_den() % p;
  if (den_mod == 0)
    throw Error(ErrorKind::DenominatorDivisibleByP,
                "denominator of " + to_string(value) + " is divisible by " + std::to_string(p));
  Integer num_mod;
  mpz_fdiv_r_ui(num_mod.get_mpz_t(), value.get_num_mpz_t(), p);
  const std::uint64_t r = num_mod.get_ui() * inverse_mod(den_mod.get_ui(), p) % p;
  return Rational(static_cast<unsigned long>(r));
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coeff) {
  if (monomial.size() != varcount_)
    throw Error(ErrorKind::Domain, "monomial length does not match variable count");
  Rational c = normalize(coeff);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (inserted) return;
  it->second = normalize(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_, varcount_);
  for (const auto& [mon, c] : terms_) out.add_term(mon, -c);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out = a;
  for (const auto& [mon, c] : b.terms_) out.add_term(mon, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.varcount_ == b.varcount_ && a.terms_ == b.terms_;
}

bool PolynomialLess::operator()(const Polynomial& a, const Polynomial& b) const {
  GradedOrder order;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (order(ia->first, ib->first)) return true;
    if (order(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

// ---------------------------------------------------------------- operations

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  return multiply(a, b, [](const Monomial&) { return true; });
}

Polynomial poly_pow(const Polynomial& a, std::uint64_t n) {
  if (!a.ring().is_modular() || n < a.ring().p) return binary_pow(a, n, poly_mul);
  // Over F_p, f^(d_0 + d_1 p + ...) = prod_k frobenius(f^(d_k), p^k).
  const std::uint64_t p = a.ring().p;
  Polynomial result = one_like(a);
  std::uint64_t q = 1;
  while (n) {
    const std::uint64_t digit = n % p;
    if (digit) result = poly_mul(result, frobenius(binary_pow(a, digit, poly_mul), q));
    n /= p;
    if (n) q *= p;
  }
  return result;
}

Polynomial reduce_mod_p(const Polynomial& a, std::uint64_t p) {
  if (a.ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "reduce_mod_p expects a polynomial over the rationals");
  Polynomial out(Ring::integers_mod(p), a.varcount());
  for (const auto& [mon, c] : a.terms()) out.add_term(mon, c);
  return out;
}

std::vector<Monomial> support(const Polynomial& a) {
  std::vector<Monomial> out;
  out.reserve(a.size());
  for (const auto& [mon, c] : a.terms()) out.push_back(mon);
  return out;
}

namespace {

bool in_frobenius_ideal(const Monomial& mon, std::uint64_t q) {
  return std::any_of(mon.exponents().begin(), mon.exponents().end(),
                     [q](Exponent e) { return e >= q; });
}

}  // namespace

bool in_frobenius_power(const Polynomial& a, std::uint64_t e) {
  if (!a.ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "Frobenius powers need a prime-field polynomial");
  if (e == 0) throw Error(ErrorKind::Domain, "Frobenius exponent must be positive");
  const std::uint64_t q = saturating_pow(a.ring().p, e);
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [q](const auto& t) { return in_frobenius_ideal(t.first, q); });
}

Rational coefficient_of(const Polynomial& a, const Monomial& mon) {
  if (mon.size() != a.varcount())
    throw Error(ErrorKind::Domain, "monomial length does not match variable count");
  auto it = a.terms().find(mon);
  return it == a.terms().end() ? Rational(0) : it->second;
}

Polynomial truncate_frobenius(const Polynomial& a, std::uint64_t q) {
  Polynomial out(a.ring(), a.varcount());
  for (const auto& [mon, c] : a.terms())
    if (!in_frobenius_ideal(mon, q)) out.add_term(mon, c);
  return out;
}

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t q) {
  return multiply(a, b, [q](const Monomial& m) { return !in_frobenius_ideal(m, q); });
}

Polynomial mul_bounded(const Polynomial& a, const Polynomial& b, const Monomial& bound) {
  return multiply(a, b, [&bound](const Monomial& m) { return m.divides(bound); });
}

Polynomial pow_bounded(const Polynomial& a, std::uint64_t n, const Monomial& bound) {
  auto bounded = [](const Monomial& limit) {
    return [&limit](const Polynomial& x, const Polynomial& y) { return mul_bounded(x, y, limit); };
  };
  if (!a.ring().is_modular() || n < a.ring().p) return binary_pow(a, n, bounded(bound));
  const std::uint64_t p = a.ring().p;
  Polynomial result = one_like(a);
  std::uint64_t q = 1;
  while (n) {
    const std::uint64_t digit = n % p;
    if (digit) {
      const Monomial shrunk = floor_div(bound, q);
      result = mul_bounded(result, frobenius(binary_pow(a, digit, bounded(shrunk)), q), bound);
    }
    n /= p;
    if (n) q *= p;
  }
  return result;
}

Polynomial frobenius(const Polynomial& a, std::uint64_t q) {
  Polynomial out(a.ring(), a.varcount());
  for (const auto& [mon, c] : a.terms()) out.add_term(mon.scaled(q), c);
  return out;
}

Polynomial primitive_integer_form(const Polynomial& a) {
  if (a.ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "primitive form needs a polynomial over the rationals");
  Integer den_lcm = 1;
  for (const auto& [mon, c] : a.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& [mon, c] : a.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Polynomial out(a.ring(), a.varcount());
  if (content == 0) return out;
  for (const auto& [mon, c] : a.terms())
    out.add_term(mon, Rational(c.get_num() * (den_lcm / c.get_den()) / content));
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), vars_(variables) {}

  Polynomial parse() {
    Polynomial out(Ring::rationals(), vars_.size());
    skip_ws();
    if (at_end()) fail(ErrorKind::Syntax, "empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    parse_term(out, negative);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(ErrorKind::Syntax, std::string("unexpected '") + op + "'");
      ++pos_;
      parse_term(out, op == '-');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    throw ParseError(kind, message, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail(ErrorKind::Syntax, "expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void parse_factor(Monomial& mon) {
    skip_ws();
    if (at_end() || !is_ident_start(peek())) fail(ErrorKind::Syntax, "expected a variable");
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      pos_ = start;
      fail(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    }
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '-') fail(ErrorKind::NegativeExponent, "negative exponent");
      Integer e = parse_uint();
      if (e > std::numeric_limits<Exponent>::max()) fail(ErrorKind::Domain, "exponent too large");
      exponent = e.get_ui();
    }
    auto& slot = mon[static_cast<std::size_t>(it - vars_.begin())];
    slot = checked_exponent(std::uint64_t{slot} + exponent);
  }

  void parse_term(Polynomial& out, bool negative) {
    skip_ws();
    if (at_end()) fail(ErrorKind::Syntax, "expected a term");
    Rational coeff = 1;
    Monomial mon(vars_.size());
    if (is_digit(peek())) {
      Integer num = parse_uint();
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = parse_uint();
        if (den == 0) fail(ErrorKind::Domain, "zero denominator");
      }
      coeff = make_rational(num, den);
      // coeff ('*'? factor)*
      for (skip_ws(); !at_end(); skip_ws()) {
        if (peek() == '*') {
          ++pos_;
          parse_factor(mon);
        } else if (is_ident_start(peek())) {
          parse_factor(mon);
        } else {
          break;
        }
      }
    } else {
      parse_factor(mon);
      for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
        ++pos_;
        parse_factor(mon);
      }
    }
    out.add_term(mon, negative ? Rational(-coeff) : coeff);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate_variables(std::span<const std::string> variables) {
  if (variables.empty()) throw Error(ErrorKind::Domain, "variable list is empty");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !is_ident_start(v[0]) ||
        !std::all_of(v.begin(), v.end(), [](char c) { return is_ident_char(c); }))
      throw Error(ErrorKind::Domain, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorKind::Domain, "duplicate variable '" + v + "'");
  }
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  validate_variables(variables);
  return Parser(text, variables).parse();
}

std::string to_string(const Polynomial& a, std::span<const std::string> variables) {
  if (variables.size() != a.varcount())
    throw Error(ErrorKind::Domain, "variable names do not match variable count");
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [mon, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    for (std::size_t i = 0; i < mon.size(); ++i) {
      if (mon[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += variables[i];
      if (mon[i] > 1) body += "^" + std::to_string(mon[i]);
    }
    if (body.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += to_string(mag) + "*" + body;
    }
  }
  return out;
}

}  // namespace fpt
