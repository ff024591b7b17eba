// Slow reference implementations used to check the engine. Nothing here
// calls into the core.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Exps = std::vector<int>;
// Polynomial over F_p as exponent vector -> residue in [1, p-1].
using Poly = std::map<Exps, long>;

inline Poly mul(const Poly& a, const Poly& b, long p) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      long& c = out[e];
      c = (c + ca * cb) % p;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly one(std::size_t vars) { return Poly{{Exps(vars, 0), 1}}; }

inline Poly power(const Poly& a, int n, long p, std::size_t vars) {
  Poly out = one(vars);
  for (int i = 0; i < n; ++i) out = mul(out, a, p);
  return out;
}

// Keeps only terms with every exponent < q; everything else is in m^[q].
inline Poly clip(const Poly& a, int q) {
  Poly out;
  for (const auto& [e, c] : a)
    if (std::all_of(e.begin(), e.end(), [q](int x) { return x < q; })) out.emplace(e, c);
  return out;
}

inline bool outside_frobenius(const Poly& a, int q) { return !clip(a, q).empty(); }

// Products are clipped at q as they grow.
// a^c escapes m^[q] iff some product of c generators escapes.
inline bool power_escapes(const std::vector<Poly>& gens, int c, int q, long p, std::size_t vars) {
  // enumerate exponent vectors k with |k| = c over the generators
  const std::size_t t = gens.size();
  std::vector<int> k(t, 0);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int left) -> bool {
    if (i + 1 == t) {
      k[i] = left;
      Poly prod = one(vars);
      for (std::size_t j = 0; j < t; ++j) {
        for (int r = 0; r < k[j]; ++r) prod = clip(mul(prod, gens[j], p), q);
      }
      return !prod.empty();
    }
    for (int x = 0; x <= left; ++x) {
      k[i] = x;
      if (rec(i + 1, left - x)) return true;
    }
    return false;
  };
  return rec(0, c);
}

// nu(p^e): largest c with a^c outside m^[q]. The scan stops once a
// power falls inside, which is fine since containment is monotone in c.
inline int nu(const std::vector<Poly>& gens, int q, long p, std::size_t vars) {
  int c = 0;
  while (power_escapes(gens, c + 1, q, p, vars)) ++c;
  return c;
}

// Card V(q) for principal ideals (f_1), ..., (f_t): tuples n with
// f_1^{n_1} ... f_t^{n_t} outside m^[q]. Brute force over a box.
inline long volume_count(const std::vector<Poly>& gens, int q, long p, std::size_t vars, int box) {
  const std::size_t t = gens.size();
  // powers[i][n] = f_i^n clipped
  std::vector<std::vector<Poly>> powers(t);
  for (std::size_t i = 0; i < t; ++i) {
    powers[i].push_back(one(vars));
    for (int n = 1; n <= box; ++n) powers[i].push_back(clip(mul(powers[i].back(), gens[i], p), q));
  }
  long count = 0;
  std::vector<int> n(t, 0);
  std::function<void(std::size_t, Poly)> rec = [&](std::size_t i, Poly acc) {
    if (acc.empty()) return;
    if (i == t) {
      ++count;
      return;
    }
    for (int x = 0; x <= box; ++x) rec(i + 1, clip(mul(acc, powers[i][x], p), q));
  };
  rec(0, one(vars));
  return count;
}

// Digit k of the nonterminating expansion: ceil(p^k a) - 1 - p (ceil(p^{k-1} a) - 1).
inline Z ceil_q(const Q& v) {
  Z out;
  mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

inline Z pow_z(long base, unsigned long e) {
  Z out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

inline long digit(const Q& a, long p, unsigned k) {
  if (a == 0) return 0;
  const Z hi = ceil_q(a * Q(pow_z(p, k))) - 1;
  const Z lo = ceil_q(a * Q(pow_z(p, k - 1))) - 1;
  const Z d = hi - lo * p;
  return d.get_si();
}

inline Q truncation(const Q& a, long p, unsigned e) {
  if (a == 0 || e == 0) return 0;
  Q out = Q(ceil_q(a * Q(pow_z(p, e))) - 1) / Q(pow_z(p, e));
  out.canonicalize();
  return out;
}

inline long digit_sum(Z n, long p) {
  long s = 0;
  while (n > 0) {
    Z r = n % p;
    s += r.get_si();
    n /= p;
  }
  return s;
}

// Legendre: v_p(total! / prod parts!) = (sum s_p(parts) - s_p(total)) / (p - 1).
inline bool multinomial_nonzero(const Z& total, const std::vector<Z>& parts, long p) {
  long s = 0;
  for (const auto& x : parts) s += digit_sum(x, p);
  return s - digit_sum(total, p) == 0;
}

// Gaussian elimination on a square system; nullopt if singular.
inline std::optional<std::vector<Q>> solve(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Vertices of {g >= 0 : E g <= 1} by trying every set of N tight
// constraints among the m rows and the N coordinate planes.
inline std::vector<std::vector<Q>> vertices(const std::vector<std::vector<long>>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  std::vector<std::vector<Q>> hyper;
  std::vector<Q> rhs;
  for (const auto& r : rows) {
    hyper.emplace_back(r.begin(), r.end());
    rhs.push_back(1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Q> h(n, 0);
    h[j] = 1;
    hyper.push_back(h);
    rhs.push_back(0);
  }
  std::vector<std::vector<Q>> out;
  const std::size_t total = m + n;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<std::vector<Q>> a;
    std::vector<Q> b;
    for (std::size_t i = 0; i < total; ++i)
      if (pick[i]) {
        a.push_back(hyper[i]);
        b.push_back(rhs[i]);
      }
    auto x = solve(a, b);
    if (!x) continue;
    bool ok = std::all_of(x->begin(), x->end(), [](const Q& v) { return v >= 0; });
    for (std::size_t i = 0; ok && i < m; ++i) {
      Q s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Q(rows[i][j]) * (*x)[j];
      ok = s <= 1;
    }
    if (ok && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline Q coordinate_sum(const std::vector<Q>& v) {
  Q s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace oracle
