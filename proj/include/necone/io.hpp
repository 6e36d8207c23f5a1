#pragma once

// JSON forms of scalars, classes, surfaces and certificates.
//
// Rationals are strings "p/q". A Scalar is {"a","b","d"} meaning a + b*sqrt(d);
// a TowerScalar has the same shape with Scalar objects as fields. Parse errors
// carry the JSON path of the offending field.

#include "necone/segre.hpp"
#include "necone/strict_inclusion.hpp"
#include "necone/thresholds.hpp"
#include "necone/zariski.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace necone {

using Json = nlohmann::json;

Json to_json(const Rational& x);
Json to_json(const Scalar& x);
Json to_json(const TowerScalar& x);
Json to_json(const DivisorClass& x);
Json to_json(const TowerDivisor& x);

Rational rational_from_json(const Json& j, const std::string& path);
Scalar scalar_from_json(const Json& j, const std::string& path);
TowerScalar tower_from_json(const Json& j, const std::string& path);
DivisorClass divisor_from_json(const ModelPtr& model, const Json& j, const std::string& path);
TowerDivisor tower_divisor_from_json(const ModelPtr& model, const Json& j, const std::string& path);

/// Surface description plus the optional negative-curve list and linear systems.
struct SurfaceInput {
    ModelPtr model;
    CurveList curves;
    std::vector<LinearSystemRecord> systems;
    std::optional<int> nu;
    std::optional<int> pi;
    std::string label;
};

SurfaceInput surface_from_json(const Json& j);
/// Reads and parses a JSON file; malformed JSON is a Model error.
Json read_json_file(const std::string& path);

Json model_to_json(const BlowupModel& model);
Json to_json(const NegativeCurveRecord& c);
NegativeCurveRecord curve_from_json(const ModelPtr& model, const Json& j, const std::string& path);

Json certificate_json(const RayContainmentCert& cert);
Json certificate_json(const ZariskiDecomposition& zd, const CurveList& curves);
Json certificate_json(const StrictInclusionWitness& w);
Json bundle_json(std::vector<Json> certificates);

struct VerifyResult {
    bool ok = false;
    bool certified = true;   // false when produced with an overridden δ cap
    std::string violation;   // first violated invariant
    std::size_t checked = 0; // number of certificates examined
};

/// Re-checks a certificate from its JSON alone. Unknown types and malformed
/// fields throw Error; a failed invariant is reported in the result.
VerifyResult verify_certificate(const Json& cert);

}  // namespace necone
