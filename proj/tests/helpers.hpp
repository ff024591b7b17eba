#pragma once

#include "error.hpp"
#include "fvolume.hpp"
#include "geometry.hpp"
#include "oracle.hpp"
#include "polyring.hpp"
#include "thresholds.hpp"

#include <string>
#include <vector>

namespace th {

using namespace fpt;

inline const std::vector<std::string> xyz = {"x", "y", "z"};
inline const std::vector<std::string> xy = {"x", "y"};

inline Rational R(const char* text) { return parse_rational(text); }

inline RationalVector RV(std::initializer_list<const char*> items) {
  RationalVector out;
  for (auto s : items) out.push_back(parse_rational(s));
  return out;
}

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return parse_polynomial(text, vars);
}

inline Polynomial Pm(const std::string& text, std::uint64_t p, const std::vector<std::string>& vars = xyz) {
  return reduce_mod_p(parse_polynomial(text, vars), p);
}

inline std::vector<Polynomial> gens(std::initializer_list<const char*> texts, const std::vector<std::string>& vars = xyz) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(P(t, vars));
  return out;
}

inline std::vector<Polynomial> gens_mod(std::initializer_list<const char*> texts, std::uint64_t p,
                                        const std::vector<std::string>& vars = xyz) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(Pm(t, p, vars));
  return out;
}

// The running example (x^2 + x y^2, y z^3).
inline std::vector<Polynomial> running(std::uint64_t p = 0) {
  return p ? gens_mod({"x^2+x*y^2", "y*z^3"}, p) : gens({"x^2+x*y^2", "y*z^3"});
}

inline oracle::Poly to_oracle(const Polynomial& a) {
  oracle::Poly out;
  const long p = a.ring().p;
  for (const auto& [mon, c] : a.terms()) {
    oracle::Exps e(mon.exponents().begin(), mon.exponents().end());
    long v = c.get_num().get_si() % p;
    if (v < 0) v += p;
    out[e] = v;
  }
  return out;
}

inline std::vector<oracle::Poly> to_oracle(const std::vector<Polynomial>& gs) {
  std::vector<oracle::Poly> out;
  for (const auto& g : gs) out.push_back(to_oracle(g));
  return out;
}

inline std::vector<std::vector<long>> dense_rows(const ExponentMatrix& e) {
  std::vector<std::vector<long>> rows(e.rows, std::vector<long>(e.cols()));
  for (std::size_t i = 0; i < e.rows; ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) rows[i][j] = static_cast<long>(e.at(i, j));
  return rows;
}

// Random polynomial over F_p without constant term.
inline Polynomial random_poly(std::mt19937& rng, std::size_t vars, unsigned max_degree, std::uint64_t p,
                              unsigned terms) {
  Polynomial out(Ring::integers_mod(p), vars);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(vars);
    for (std::size_t i = 0; i < vars; ++i) m[i] = deg(rng);
    if (m.is_one() || m.degree() > max_degree) continue;
    out.add_term(m, Rational(static_cast<unsigned long>(coeff(rng))));
  }
  return out;
}

}  // namespace th

namespace th {

template <class F>
std::optional<fpt::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const fpt::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace th
