#pragma once

#include "cohiggs/genus2.hpp"
#include "cohiggs/hopf.hpp"
#include "cohiggs/invariants.hpp"
#include "cohiggs/jumps.hpp"
#include "cohiggs/surface.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cohiggs {

using Json = nlohmann::json;

// All commands except "sweep" (which emits CSV) take and return JSON.
// Throws SchemaError on malformed requests, DomainError on named failures.
Json run_command(const std::string& command, const Json& request);
std::string run_sweep_csv(const Json& config);

std::vector<std::string> command_names();
bool known_command(const std::string& command);
Json command_schema(const std::string& command);  // {"request": ..., "response": ...}

// Minimal structural validator for the subset of JSON Schema the published
// schemas use (type / properties / required / additionalProperties / items /
// minItems / maxItems / enum / oneOf).
void validate_schema(const Json& schema, const Json& value, const std::string& path = "$");

// Wire-format helpers shared with the tests.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Json h0_to_json(const H0Value& v);
GaussQ gauss_from_json(const Json& j);
Json gauss_to_json(const GaussQ& g);
Mat2 mat2_from_json(const Json& j);
Json tower_to_json(const TowerElem& t);
PointLabel point_from_json(const Json& j);
Json point_to_json(const PointLabel& p);
DivisorG2 divisor_from_json(const Json& j);
Json divisor_to_json(const DivisorG2& d);
SurfaceSpec surface_from_json(const Json& j);
LineBundleX line_bundle_from_json(const Json& j);
Json line_bundle_to_json(const LineBundleX& lb);
BundleDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const BundleDescriptor& d);
G2HiggsInput g2_input_from_json(const Json& j);

}  // namespace cohiggs
