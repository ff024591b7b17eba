#include "thresholds.hpp"

#include "error.hpp"
#include "primes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fpt {

const char* to_string(BoundKind kind) {
  return kind == BoundKind::Exact ? "exact" : "lower_bound";
}

const char* to_string(LctCase which) {
  switch (which) {
    case LctCase::DiagonalAboveT: return "above_t";
    case LctCase::DiagonalAtMostT: return "at_most_t";
    case LctCase::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::vector<Polynomial> over_prime_field(const std::vector<Polynomial>& gens, std::uint64_t p) {
  const Ring field = Ring::integers_mod(p);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.ring().is_modular()) {
      if (!(g.ring() == field))
        throw Error(ErrorKind::RingMismatch, "generator over " + g.ring().name() + " used with p = " +
                                                 std::to_string(p));
      out.push_back(g);
      continue;
    }
    if (g.is_zero()) throw Error(ErrorKind::ZeroGenerator, "generator " + std::to_string(i + 1) + " is zero");
    Polynomial r = reduce_mod_p(g, p);
    if (r.is_zero())
      throw Error(ErrorKind::ZeroGenerator,
                  "generator " + std::to_string(i + 1) + " vanishes mod " + std::to_string(p));
    out.push_back(std::move(r));
  }
  return out;
}

void require_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorKind::Domain, "generator list is empty");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (!(g.ring() == gens.front().ring()) || g.varcount() != gens.front().varcount())
      throw Error(ErrorKind::RingMismatch, "generators live in different rings");
    if (g.is_zero()) throw Error(ErrorKind::ZeroGenerator, "generator " + std::to_string(i + 1) + " is zero");
    if (coefficient_of(g, Monomial(g.varcount())) != 0)
      throw Error(ErrorKind::NotInMaximalIdeal,
                  "generator " + std::to_string(i + 1) + " has a nonzero constant term");
  }
}

std::uint64_t frobenius_modulus(std::uint64_t p, std::uint64_t e) {
  if (e == 0) throw Error(ErrorKind::Domain, "e must be positive");
  const std::uint64_t q = saturating_pow(p, e);
  if (q > std::numeric_limits<Exponent>::max())
    throw Error(ErrorKind::BudgetExceeded, "p^e exceeds the exponent range");
  return q;
}

void check_terms(const Polynomial& a, const Budgets& budgets) {
  if (a.size() > budgets.max_terms)
    throw Error(ErrorKind::BudgetExceeded, "product has " + std::to_string(a.size()) +
                                               " terms, above max_terms = " +
                                               std::to_string(budgets.max_terms));
}

std::uint64_t small(const Integer& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is too large");
  return v.get_ui();
}

Integer multinomial(const std::vector<Integer>& parts) {
  Integer result = 1, running = 0;
  for (const auto& k : parts) {
    running += k;
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), running.get_mpz_t(), small(k, "multinomial part"));
    result *= b;
  }
  return result;
}

}  // namespace

PreparedMapping prepare(const std::vector<Polynomial>& gens, std::uint64_t p) {
  if (gens.empty()) throw Error(ErrorKind::Domain, "generator list is empty");
  PreparedMapping pm;
  pm.p = p;
  pm.generators = over_prime_field(gens, p);
  pm.reduced = reduce_generators(pm.generators);
  pm.matrix = exponent_matrix(pm.reduced);
  pm.maximal = maximal_point(pm.matrix);
  if (!pm.maximal.unique)
    throw Error(ErrorKind::NonUniqueMaximalPoint,
                "the sum is maximal on a face of dimension " + std::to_string(pm.maximal.face_dimension));
  return pm;
}

Rational monomial_fpt(const std::vector<Monomial>& supports) {
  return 1 / newton_min_diagonal(supports);
}

FptCertificate certificate_from(const PreparedMapping& pm) {
  FptCertificate cert;
  cert.p = pm.p;
  cert.rho_blocks = pm.maximal.rho_blocks;
  cert.max_sum = pm.maximal.max_sum;
  const Rational t = static_cast<unsigned long>(cert.rho_blocks.size());
  cert.upper_bound = std::min(t, cert.max_sum);
  Rational value = 0;
  for (std::size_t i = 0; i < cert.rho_blocks.size(); ++i) {
    const auto& block = cert.rho_blocks[i];
    const CarryHorizon s = carry_horizon(block, pm.p);
    cert.horizons.push_back(s);
    if (s.infinite()) {
      value += sum(block);
      continue;
    }
    cert.finite_set.push_back(i);
    RationalVector trunc = truncation(block, pm.p, *s.value);
    value += sum(trunc) + make_rational(1, ipow(static_cast<unsigned long>(pm.p), *s.value));
    cert.truncations.push_back(std::move(trunc));
  }
  cert.kind = cert.finite_set.empty() ? BoundKind::Exact : BoundKind::LowerBound;
  cert.value = value;
  if (cert.value > cert.upper_bound)
    throw Error(ErrorKind::Internal, "certificate value exceeds min(t, |rho|)");
  return cert;
}

FptCertificate fpt_bound(const std::vector<Polynomial>& gens, std::uint64_t p) {
  return certificate_from(prepare(gens, p));
}

std::uint64_t nu(const std::vector<Polynomial>& gens, std::uint64_t e, const Budgets& budgets) {
  require_generators(gens);
  if (!gens.front().ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "nu needs generators over a prime field");
  const std::uint64_t q = frobenius_modulus(gens.front().ring().p, e);
  std::vector<Polynomial> trimmed;
  for (const auto& g : gens) trimmed.push_back(truncate_frobenius(g, q));

  // Products of c generators outside m^[q], kept modulo m^[q]. Each product
  // remembers the smallest last generator index among the multisets that
  // produced it so every multiset is reached once.
  using Level = std::map<Polynomial, std::size_t, PolynomialLess>;
  Level current;
  current.emplace(Polynomial::constant(gens.front().ring(), gens.front().varcount(), 1), 0);
  std::uint64_t c = 0;
  std::uint64_t kept = 0;
  while (true) {
    Level next;
    for (const auto& [prod, last] : current) {
      for (std::size_t j = last; j < trimmed.size(); ++j) {
        Polynomial r = mul_truncated(prod, trimmed[j], q);
        if (r.is_zero()) continue;
        check_terms(r, budgets);
        auto [it, inserted] = next.emplace(std::move(r), j);
        if (!inserted) {
          it->second = std::min(it->second, j);
          continue;
        }
        if (++kept > budgets.max_multisets)
          throw Error(ErrorKind::BudgetExceeded, "more than max_multisets = " +
                                                     std::to_string(budgets.max_multisets) +
                                                     " generator products");
      }
    }
    if (next.empty()) return c;
    ++c;
    current = std::move(next);
  }
}

std::vector<NuSample> fpt_estimate(const std::vector<Polynomial>& gens, std::uint64_t p,
                                   std::uint64_t e_max, const Budgets& budgets) {
  if (e_max == 0) throw Error(ErrorKind::Domain, "e_max must be positive");
  const auto field = over_prime_field(gens, p);
  std::vector<NuSample> out;
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    NuSample s;
    s.e = e;
    s.nu = nu(field, e, budgets);
    s.ratio = make_rational(Integer(static_cast<unsigned long>(s.nu)), ipow(static_cast<unsigned long>(p), e));
    out.push_back(std::move(s));
  }
  return out;
}

BoundWitness lower_bound_witness(const FptCertificate& cert, std::uint64_t extra) {
  if (extra == 0) throw Error(ErrorKind::Domain, "witness level offset must be positive");
  const std::uint64_t p = cert.p;
  std::uint64_t top = 0;
  for (auto i : cert.finite_set) top = std::max(top, *cert.horizons[i].value);
  BoundWitness w;
  w.level = top + extra;
  for (std::size_t i = 0; i < cert.rho_blocks.size(); ++i) {
    const auto& block = cert.rho_blocks[i];
    if (cert.horizons[i].infinite()) {
      for (const auto& r : truncation(block, p, w.level)) w.point.push_back(r);
      continue;
    }
    // Digits at S_i + 1 sum to at least p; spend p - 1 of them greedily and
    // hang the (p - 1) tail on a coordinate left strictly below its digit.
    const std::uint64_t s = *cert.horizons[i].value;
    RationalVector v = truncation(block, p, s);
    const Integer scale = ipow(static_cast<unsigned long>(p), s + 1);
    std::uint64_t remaining = p - 1;
    std::size_t slack = block.size();
    for (std::size_t j = 0; j < block.size(); ++j) {
      const std::uint64_t d = digit_at(block[j], p, s + 1);
      const std::uint64_t take = std::min(d, remaining);
      remaining -= take;
      if (take < d && slack == block.size()) slack = j;
      v[j] += make_rational(Integer(static_cast<unsigned long>(take)), scale);
    }
    if (slack == block.size() || remaining != 0)
      throw Error(ErrorKind::Internal, "finite horizon without a carry at the next digit");
    for (std::uint64_t k = 2; k <= extra; ++k)
      v[slack] += make_rational(Integer(static_cast<unsigned long>(p - 1)), ipow(static_cast<unsigned long>(p), s + k));
    for (const auto& r : v) w.point.push_back(r);
  }
  w.exponent = 0;
  const Integer pl = ipow(static_cast<unsigned long>(p), w.level);
  Rational total = sum(w.point) * pl;
  if (total.get_den() != 1) throw Error(ErrorKind::Internal, "witness exponent is not integral");
  w.exponent = total.get_num();
  return w;
}

CoefficientReport coefficient_witness(const std::vector<Polynomial>& gens, std::uint64_t p,
                                      std::uint64_t e, const Budgets& budgets) {
  if (e == 0) throw Error(ErrorKind::Domain, "e must be positive");
  const PreparedMapping pm = prepare(gens, p);
  const auto& blocks = pm.maximal.rho_blocks;
  const Integer pe = ipow(static_cast<unsigned long>(p), e);
  const std::size_t m = pm.reduced.varcount;

  CoefficientReport report;
  report.p = p;
  report.e = e;
  std::vector<std::uint64_t> target(m, 0);
  Integer expected = 1;
  const Integer modulus = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Integer> k;
    Integer power = 0;
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      const Rational scaled = truncation(blocks[i][j], p, e) * pe;
      const Integer kij = scaled.get_num();
      k.push_back(kij);
      power += kij;
      const auto& mon = pm.reduced.blocks[i][j];
      for (std::size_t r = 0; r < m; ++r) {
        const Integer add = kij * static_cast<unsigned long>(mon[r]);
        target[r] += small(add, "target exponent");
      }
      Integer c = pm.reduced.coefficients[i][j].get_num();
      Integer cp;
      mpz_powm(cp.get_mpz_t(), c.get_mpz_t(), kij.get_mpz_t(), modulus.get_mpz_t());
      expected *= cp;
    }
    expected *= multinomial(k);
    report.powers.push_back(power);
  }
  expected %= modulus;
  report.expected = Rational(expected);

  Monomial bound(m);
  Integer cells = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (target[r] > std::numeric_limits<Exponent>::max())
      throw Error(ErrorKind::BudgetExceeded, "target exponent exceeds the exponent range");
    bound[r] = static_cast<Exponent>(target[r]);
    cells *= static_cast<unsigned long>(target[r] + 1);
  }
  if (cells > budgets.max_terms)
    throw Error(ErrorKind::BudgetExceeded, "expansion below the target monomial may exceed max_terms");
  report.target = bound;

  Polynomial g = Polynomial::constant(pm.generators.front().ring(), m, 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto piece = pow_bounded(pm.generators[i], small(report.powers[i], "power"), bound);
    g = mul_bounded(g, piece, bound);
  }
  report.observed = coefficient_of(g, bound);
  report.match = report.observed == report.expected;
  return report;
}

namespace {

Integer lcm_of_denominators(const Blocks& blocks) {
  Integer d = 1;
  for (const auto& b : blocks)
    for (const auto& r : b) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den_mpz_t());
  return d;
}

bool coefficients_clear(const std::vector<Polynomial>& gens, std::uint64_t p) {
  for (const auto& g : gens) {
    const Polynomial prim = primitive_integer_form(g);
    for (const auto& [mon, c] : prim.terms())
      if (mpz_divisible_ui_p(c.get_num_mpz_t(), p)) return false;
  }
  return true;
}

}  // namespace

LctVerdict lct_fpt_classifier(const std::vector<Polynomial>& gens) {
  require_generators(gens);
  if (gens.front().ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "the classifier needs generators over the rationals");
  const ReducedMapping rm = reduce_generators(gens);
  const ExponentMatrix e = exponent_matrix(rm);
  const MaximalPointCert mp = maximal_point(e);
  if (!mp.unique)
    throw Error(ErrorKind::NonUniqueMaximalPoint,
                "the sum is maximal on a face of dimension " + std::to_string(mp.face_dimension));

  LctVerdict v;
  v.rho_blocks = mp.rho_blocks;
  v.max_sum = mp.max_sum;
  v.generators = gens.size();
  const Rational t = static_cast<unsigned long>(gens.size());
  const Rational mono = monomial_fpt(e.columns);
  if (mono != mp.max_sum) throw Error(ErrorKind::Internal, "diagonal LP disagrees with the polytope maximum");

  std::vector<std::size_t> above, below;
  for (std::size_t k = 0; k < v.rho_blocks.size(); ++k)
    (sum(v.rho_blocks[k]) > 1 ? above : below).push_back(k);

  if (below.empty() && mono > t) {
    v.which = LctCase::DiagonalAboveT;
    v.value = t;
    Integer start = 0;
    for (const auto& b : v.rho_blocks) {
      const Rational bound = Rational(Integer(static_cast<unsigned long>(b.size()))) / (sum(b) - 1);
      start = std::max(start, ceil(bound));
    }
    v.predicate = "first-digit sum of every rho block is at least p (guaranteed once p >= " +
                  to_string(start) + "), and no generator coefficient is divisible by p";
  } else if (above.empty() && mono <= t) {
    v.which = LctCase::DiagonalAtMostT;
    v.value = mp.max_sum;
    v.predicate = "every rho block adds without carrying (includes all p = 1 mod " +
                  to_string(lcm_of_denominators(v.rho_blocks)) +
                  "), and no generator coefficient is divisible by p";
  } else {
    v.which = LctCase::Inconclusive;
    std::string list;
    for (auto k : above) list += (list.empty() ? "" : ",") + std::to_string(k + 1);
    std::string small_list;
    for (auto k : below) small_list += (small_list.empty() ? "" : ",") + std::to_string(k + 1);
    v.failed_hypothesis = "mixed blocks: |rho_k| > 1 for k in {" + list + "} but <= 1 for k in {" +
                          small_list + "}";
    return v;
  }
  for (auto p : primes_below(50)) v.checked_primes.push_back(verify_prime(gens, p, v));
  return v;
}

PrimeCheck verify_prime(const std::vector<Polynomial>& gens, std::uint64_t p, const LctVerdict& verdict) {
  if (verdict.which == LctCase::Inconclusive || !verdict.value)
    throw Error(ErrorKind::Domain, "prime verification needs a conclusive verdict");
  if (!is_prime(p) || p > kMaxPrime) throw Error(ErrorKind::Domain, std::to_string(p) + " is not a prime below 2^31");
  PrimeCheck check;
  check.p = p;
  check.coefficient_check = coefficients_clear(gens, p);
  if (verdict.which == LctCase::DiagonalAboveT)
    check.in_predicate = in_P_rho_0(verdict.rho_blocks, p);
  else
    check.in_predicate = in_P_rho_inf(verdict.rho_blocks, p);
  if (check.coefficient_check) {
    try {
      const FptCertificate cert = fpt_bound(gens, p);
      if (verdict.which == LctCase::DiagonalAboveT)
        check.certified_by_bound = cert.value == *verdict.value;
      else
        check.certified_by_bound = cert.kind == BoundKind::Exact && cert.value == *verdict.value;
    } catch (const Error& err) {
      if (err.category() == ErrorCategory::Internal) throw;
      check.certified_by_bound = false;
    }
  }
  check.holds = check.coefficient_check && (check.in_predicate || check.certified_by_bound);
  return check;
}

}  // namespace fpt
