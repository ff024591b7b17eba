#include "serialize.hpp"

namespace fpt {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

Json to_json(const Blocks& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(to_json(b));
  return out;
}

Json to_json(const CarryHorizon& s) {
  if (s.infinite()) return "inf";
  return *s.value;
}

Json to_json(const DigitStream& stream) {
  Json out;
  out["value"] = to_json(stream.value);
  out["p"] = stream.base;
  out["preperiod"] = stream.preperiod;
  out["period"] = stream.period;
  return out;
}

Json to_json(const Monomial& mon) { return mon.exponents(); }

Json to_json(const ExponentMatrix& e) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < e.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < e.cols(); ++j) row.push_back(std::to_string(e.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json one_based(const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

Json to_json(const MaximalPointCert& cert) {
  Json out;
  out["M"] = to_json(cert.max_sum);
  out["unique"] = cert.unique;
  out["rho"] = cert.rho ? to_json(cert.rho_blocks) : Json(nullptr);
  out["face_dimension"] = cert.face_dimension;
  return out;
}

Json to_json(const FptCertificate& cert) {
  Json out;
  out["p"] = cert.p;
  out["kind"] = to_string(cert.kind);
  out["value"] = to_json(cert.value);
  out["upper_bound"] = to_json(cert.upper_bound);
  out["rho"] = to_json(cert.rho_blocks);
  Json s = Json::array();
  for (const auto& h : cert.horizons) s.push_back(to_json(h));
  out["S"] = s;
  out["I"] = one_based(cert.finite_set);
  out["truncations"] = to_json(cert.truncations);
  return out;
}

Json to_json(const VolumeCount& count) {
  Json out = Json::array();
  out.push_back(count.e);
  out.push_back(count.count);
  out.push_back(to_json(count.estimate));
  return out;
}

Json to_json(const FVolumeCertificate& cert) {
  Json out;
  out["p"] = cert.p;
  out["bound"] = to_json(cert.bound);
  out["bound_decimal"] = to_decimal(cert.bound);
  out["rho"] = to_json(cert.rho_blocks);
  Json s = Json::array();
  for (const auto& h : cert.horizons) s.push_back(to_json(h));
  out["S"] = s;
  out["I"] = one_based(cert.finite_set);
  Json counts = Json::array();
  for (const auto& c : cert.counts) counts.push_back(to_json(c));
  out["counts"] = counts;
  return out;
}

Json to_json(const CoefficientReport& report) {
  Json out;
  out["p"] = report.p;
  out["e"] = report.e;
  out["monomial"] = to_json(report.target);
  Json powers = Json::array();
  for (const auto& q : report.powers) powers.push_back(to_string(q));
  out["powers"] = powers;
  out["observed"] = to_json(report.observed);
  out["expected"] = to_json(report.expected);
  out["match"] = report.match;
  return out;
}

Json to_json(const PrimeCheck& check) {
  Json out;
  out["p"] = check.p;
  out["holds"] = check.holds;
  out["coefficient_check"] = check.coefficient_check;
  out["in_predicate"] = check.in_predicate;
  out["certified_by_bound"] = check.certified_by_bound;
  out["big_enough_caveat"] = check.big_enough_caveat;
  return out;
}

Json to_json(const LctVerdict& verdict) {
  Json out;
  out["case"] = to_string(verdict.which);
  out["value"] = verdict.value ? to_json(*verdict.value) : Json(nullptr);
  out["rho"] = to_json(verdict.rho_blocks);
  out["lct_term_ideal"] = to_json(verdict.max_sum);
  out["t"] = verdict.generators;
  if (verdict.which == LctCase::Inconclusive) {
    out["failed_hypothesis"] = verdict.failed_hypothesis;
  } else {
    out["predicate"] = verdict.predicate;
    Json checks = Json::array();
    for (const auto& c : verdict.checked_primes) checks.push_back(to_json(c));
    out["checked_primes"] = checks;
  }
  return out;
}

}  // namespace fpt
