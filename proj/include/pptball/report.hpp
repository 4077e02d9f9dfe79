#pragma once

#include <string>

#include <json.hpp>

#include "pptball/montecarlo.hpp"

namespace pptball {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = PPTBALL_VERSION;

Json to_json(const Vector& v);  // [[re, im], ...]
Json to_json(const ProductState& s);
Json to_json(const UPBSet& upb);
Json to_json(const LambdaResult& r);
Json to_json(const CrossingReport& c);
Json to_json(const RobustnessProfile& p);
Json to_json(const SamplerConfig& c);
Json to_json(const VerificationOutcome& o);
Json to_json(const MaximalRobustnessReport& r);
Json to_json(const FractionEstimate& f);

/// Rebuilds a UPB from the export schema; the constructor re-validates it.
UPBSet upb_from_json(const Json& j);

/// One `path,value` row per leaf, paths joined with '.', numbers with 17 significant digits.
std::string to_csv(const Json& j);

/// 17 significant digits.
std::string format_double(double v);

}  // namespace pptball
