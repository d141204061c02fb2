#pragma once

#include <json.hpp>

#include "slicecalc/polyanalytic.hpp"
#include "slicecalc/verify.hpp"

namespace slicecalc::cli {

/// Rationals are always "p/q" strings.
nlohmann::json to_json(const Rational& r);
/// {"text": ..., "components": ["p/q", ...]}
nlohmann::json to_json(const AlgebraElement& a);
/// [{"exp": [...], "coeff": [...]}, ...] in the input term format.
nlohmann::json terms_to_json(const CoordPoly& p);
nlohmann::json to_json(const StemFunction& f);
nlohmann::json to_json(const RepresentationWitness& w);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const CampaignReport& r);

}  // namespace slicecalc::cli
