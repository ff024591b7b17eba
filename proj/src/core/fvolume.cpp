#include "fvolume.hpp"

#include "error.hpp"

#include <map>
#include <set>

namespace fpt {

namespace {

using Tuple = std::vector<std::uint64_t>;
using Survivors = std::set<Polynomial, PolynomialLess>;

void require_ideals(const IdealList& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::Domain, "ideal list is empty");
  const Polynomial* first = nullptr;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].empty())
      throw Error(ErrorKind::ZeroGenerator, "ideal " + std::to_string(i + 1) + " has no generators");
    for (const auto& g : ideals[i]) {
      if (!first) first = &g;
      if (!(g.ring() == first->ring()) || g.varcount() != first->varcount())
        throw Error(ErrorKind::RingMismatch, "generators live in different rings");
      if (g.is_zero())
        throw Error(ErrorKind::ZeroGenerator, "ideal " + std::to_string(i + 1) + " has a zero generator");
      if (coefficient_of(g, Monomial(g.varcount())) != 0)
        throw Error(ErrorKind::NotInMaximalIdeal,
                    "ideal " + std::to_string(i + 1) + " has a generator with a constant term");
    }
  }
  if (!first->ring().is_modular())
    throw Error(ErrorKind::RingMismatch, "F-volume counts need generators over a prime field");
}

}  // namespace

VolumeCount fvolume_count(const IdealList& ideals, std::uint64_t e, const Budgets& budgets) {
  require_ideals(ideals);
  if (e == 0) throw Error(ErrorKind::Domain, "e must be positive");
  const Ring ring = ideals.front().front().ring();
  const std::size_t m = ideals.front().front().varcount();
  const std::size_t t = ideals.size();
  const std::uint64_t q = saturating_pow(ring.p, e);
  if (q > std::numeric_limits<Exponent>::max())
    throw Error(ErrorKind::BudgetExceeded, "p^e exceeds the exponent range");

  std::vector<std::vector<Polynomial>> trimmed(t);
  for (std::size_t i = 0; i < t; ++i)
    for (const auto& g : ideals[i]) trimmed[i].push_back(truncate_frobenius(g, q));

  // Walk V level by level in total degree. A tuple's surviving products
  // come from any one predecessor times one more generator.
  std::map<Tuple, Survivors> current;
  current[Tuple(t, 0)].insert(Polynomial::constant(ring, m, 1));
  VolumeCount out;
  out.e = e;
  out.count = 1;
  std::uint64_t kept = 0;
  while (!current.empty()) {
    std::map<Tuple, Survivors> next;
    std::set<Tuple> outside;
    for (const auto& [tuple, survivors] : current) {
      bool on_boundary = false;
      for (std::size_t i = 0; i < t; ++i) {
        Tuple succ = tuple;
        ++succ[i];
        if (next.count(succ)) continue;
        if (outside.count(succ)) {
          on_boundary = true;
          continue;
        }
        Survivors made;
        for (const auto& s : survivors)
          for (const auto& g : trimmed[i]) {
            Polynomial r = mul_truncated(s, g, q);
            if (r.is_zero()) continue;
            if (r.size() > budgets.max_terms)
              throw Error(ErrorKind::BudgetExceeded, "product exceeds max_terms");
            if (made.insert(std::move(r)).second && ++kept > budgets.max_multisets)
              throw Error(ErrorKind::BudgetExceeded, "more than max_multisets = " +
                                                         std::to_string(budgets.max_multisets) +
                                                         " generator products");
          }
        if (made.empty()) {
          outside.insert(succ);
          on_boundary = true;
        } else {
          next.emplace(std::move(succ), std::move(made));
        }
      }
      if (on_boundary) ++out.boundary;
    }
    // Downward closure: every predecessor of a new tuple is already in V.
    for (const auto& [tuple, survivors] : next)
      for (std::size_t i = 0; i < t; ++i) {
        if (tuple[i] == 0) continue;
        Tuple pred = tuple;
        --pred[i];
        if (!current.count(pred))
          throw Error(ErrorKind::Internal, "exponent set is not downward closed");
      }
    out.count += next.size();
    current = std::move(next);
  }
  out.estimate = make_rational(Integer(static_cast<unsigned long>(out.count)),
                          ipow(static_cast<unsigned long>(ring.p), e * t));
  return out;
}

std::vector<VolumeCount> fvolume_estimate(const IdealList& ideals, std::uint64_t p, std::uint64_t e_max,
                                          const Budgets& budgets) {
  require_ideals(ideals);
  if (ideals.front().front().ring().p != p)
    throw Error(ErrorKind::RingMismatch, "ideals are not over F_" + std::to_string(p));
  if (e_max == 0) throw Error(ErrorKind::Domain, "e_max must be positive");
  std::vector<VolumeCount> out;
  for (std::uint64_t e = 1; e <= e_max; ++e) out.push_back(fvolume_count(ideals, e, budgets));
  return out;
}

FVolumeCertificate fvolume_lower_bound(const std::vector<Polynomial>& gens, std::uint64_t p) {
  const FptCertificate cert = fpt_bound(gens, p);
  FVolumeCertificate out;
  out.p = p;
  out.rho_blocks = cert.rho_blocks;
  out.horizons = cert.horizons;
  out.finite_set = cert.finite_set;
  Rational bound = 1;
  for (std::size_t i = 0; i < cert.rho_blocks.size(); ++i) {
    const auto& s = cert.horizons[i];
    if (s.infinite())
      bound *= sum(cert.rho_blocks[i]);
    else
      bound *= sum(truncation(cert.rho_blocks[i], p, *s.value)) +
               make_rational(1, ipow(static_cast<unsigned long>(p), *s.value));
  }
  out.bound = bound;
  return out;
}

ProductBound term_ideal_volume_bound(const std::vector<Polynomial>& gens, std::size_t max_dimension) {
  const ExponentMatrix e = exponent_matrix(reduce_generators(gens));
  const auto points = vertices(e, max_dimension);
  const MaximalPointCert mp = maximal_point(e);
  auto product = [&e](const RationalVector& g) {
    Rational value = 1;
    for (const auto& block : e.split(g)) value *= sum(block);
    return value;
  };
  ProductBound best;
  best.bound = -1;
  if (mp.rho) {
    best.bound = product(*mp.rho);
    best.witness = *mp.rho;
  }
  for (const auto& v : points) {
    const Rational value = product(v);
    if (value > best.bound) {
      best.bound = value;
      best.witness = v;
    }
  }
  return best;
}

}  // namespace fpt
