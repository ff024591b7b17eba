#pragma once

#include "fvolume.hpp"
#include "geometry.hpp"
#include "thresholds.hpp"

#include "json.hpp"

namespace fpt {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const Blocks& blocks);
Json to_json(const CarryHorizon& s);
Json to_json(const DigitStream& stream);
Json to_json(const ExponentMatrix& e);
Json to_json(const MaximalPointCert& cert);
Json to_json(const FptCertificate& cert);
Json to_json(const FVolumeCertificate& cert);
Json to_json(const VolumeCount& count);
Json to_json(const CoefficientReport& report);
Json to_json(const PrimeCheck& check);
Json to_json(const LctVerdict& verdict);
Json to_json(const Monomial& mon);

// Block indices on the wire are 1-based.
Json one_based(const std::vector<std::size_t>& indices);

}  // namespace fpt
