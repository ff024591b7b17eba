#include "doctest.h"
#include "helpers.hpp"

using namespace th;

namespace {

IdealList principal(const std::vector<Polynomial>& gs) {
  IdealList out;
  for (const auto& g : gs) out.push_back({g});
  return out;
}

std::vector<Polynomial> line_pair(std::uint64_t p) { return gens_mod({"x", "x+y^2"}, p, xy); }

}  // namespace

TEST_CASE("volume counts") {
  const auto c = fvolume_count(principal(line_pair(2)), 1);
  CHECK(c.count == 3);
  CHECK(c.estimate == R("3/4"));
  CHECK(oracle::volume_count(to_oracle(line_pair(2)), 2, 2, 2, 4) == 3);

  CHECK(fvolume_count(principal(running(2)), 1).count == 1);
  CHECK(fvolume_count(principal(running(3)), 2).count >= 1);

  for (std::uint64_t e = 1; e <= 4; ++e) {
    const auto axes = fvolume_count(principal(gens_mod({"x", "y"}, 2, xy)), e);
    const std::uint64_t q = saturating_pow(2, e);
    CHECK(axes.count == q * q);
    CHECK(axes.estimate == 1);
  }
}

TEST_CASE("volume counts match brute force") {
  struct Case {
    std::vector<Polynomial> gens;
    std::uint64_t p;
    unsigned e;
  };
  const std::vector<Case> cases = {
      {line_pair(2), 2, 2}, {line_pair(2), 2, 3}, {line_pair(3), 3, 1}, {line_pair(3), 3, 2},
      {running(2), 2, 2},   {running(3), 3, 1},   {gens_mod({"x^2+y^3", "x*y"}, 5, xy), 5, 1},
  };
  for (const auto& c : cases) {
    const int q = static_cast<int>(saturating_pow(c.p, c.e));
    const long long ref = oracle::volume_count(to_oracle(c.gens), q, static_cast<long long>(c.p),
                                               c.gens.front().varcount(), 3 * q);
    CHECK(fvolume_count(principal(c.gens), c.e).count == static_cast<std::uint64_t>(ref));
  }
}

TEST_CASE("non-principal ideals") {
  // ((x, y), (x)): tuples with (x,y)^a x^b outside m^[2]
  IdealList ideals = {{Pm("x", 2, xy), Pm("y", 2, xy)}, {Pm("x", 2, xy)}};
  const auto c = fvolume_count(ideals, 1);
  // V = {(0,0), (0,1), (1,0), (1,1), (2,0)}
  CHECK(c.count == 5);
}

TEST_CASE("volume estimates") {
  const auto s = fvolume_estimate(principal(line_pair(2)), 2, 5);
  REQUIRE(s.size() == 5);
  CHECK(s[0].estimate == R("3/4"));
  for (const auto& c : s) {
    CHECK(c.estimate >= R("1/2"));
    CHECK(c.estimate <= 1);
  }
  CHECK(error_of([] { fvolume_estimate({{P("x", xy)}}, 2, 1); }) == ErrorKind::RingMismatch);
}

TEST_CASE("volume lower bounds") {
  CHECK(fvolume_lower_bound(running(), 7).bound == R("2/9"));
  CHECK(fvolume_lower_bound(running(), 2).bound == R("1/6"));
  CHECK(fvolume_lower_bound(running(), 3).bound == R("1/9"));
  CHECK(fvolume_lower_bound(gens({"x", "x+y^2"}, xy), 2).bound == R("1/2"));
  // closed form 2/9 - 1/(9p) for p = 5 mod 6
  for (std::uint64_t p : {5, 11, 17}) CHECK(fvolume_lower_bound(running(), p).bound == R("2/9") - Rational(1ul, 9 * p));
}

TEST_CASE("term ideal candidates") {
  auto b = term_ideal_volume_bound(gens({"x", "x+y^2"}, xy));
  CHECK(b.bound == R("1/2"));
  CHECK(b.witness == RV({"1", "1/2"}));
  b = term_ideal_volume_bound(gens({"x", "y"}, xy));
  CHECK(b.bound == 1);
  CHECK(b.witness == RV({"1", "1"}));
  b = term_ideal_volume_bound(running());
  CHECK(b.bound == R("2/9"));
  CHECK(b.witness == RV({"1/3", "1/3", "1/3"}));
  // oracle: best block product over the brute-force vertex list
  const auto e = exponent_matrix(reduce_generators(running()));
  oracle::Q best = 0;
  for (const auto& v : oracle::vertices(dense_rows(e), e.cols())) best = std::max(best, oracle::Q((v[0] + v[1]) * v[2]));
  CHECK(best == b.bound);
}

TEST_CASE("property: counts dominate the certificate") {
  struct Case {
    std::vector<Polynomial> gens;
    std::uint64_t p;
  };
  const std::vector<Case> cases = {{gens({"x", "x+y^2"}, xy), 2}, {running(), 2}, {running(), 3}, {running(), 7},
                                   {gens({"x^2+y^3", "x*y"}, xy), 5}};
  for (const auto& c : cases) {
    const auto cert = fvolume_lower_bound(c.gens, c.p);
    std::vector<Polynomial> reduced;
    for (const auto& g : c.gens) reduced.push_back(reduce_mod_p(g, c.p));
    const std::size_t t = reduced.size();
    const auto mp = prepare(c.gens, c.p).maximal;
    for (unsigned e = 1; e <= 3; ++e) {
      if (saturating_pow(c.p, e * t) > 3000) break;
      const auto count = fvolume_count(principal(reduced), e);
      const Rational qt(Integer(static_cast<unsigned long>(saturating_pow(c.p, e * t))));
      CHECK(cert.bound <= count.estimate + Rational(static_cast<unsigned long>(count.boundary)) / qt);
      if (cert.finite_set.empty()) {
        Rational prod = qt;
        for (const auto& block : mp.rho_blocks) prod *= sum(truncation(block, c.p, e));
        CHECK(prod <= Rational(static_cast<unsigned long>(count.count)));
      }
    }
    const auto term = term_ideal_volume_bound(c.gens);
    if (cert.finite_set.empty()) CHECK(term.bound >= cert.bound);
  }
}

TEST_CASE("property: one generator reduces to the threshold bound") {
  const std::vector<std::vector<Polynomial>> cases = {gens({"x^2+x*y^2"}), gens({"x^2+y^3"}), gens({"x*y*z"})};
  for (const auto& g : cases)
    for (std::uint64_t p : {2, 3, 5, 7}) CHECK(fvolume_lower_bound(g, p).bound == fpt_bound(g, p).value);
}
