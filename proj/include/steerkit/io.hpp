#pragma once

#include <string>

#include <json.hpp>

#include "steerkit/adapted.hpp"
#include "steerkit/measurement.hpp"
#include "steerkit/steering.hpp"
#include "steerkit/threshold.hpp"

namespace steerkit {

/// Measurement-set schema: either the full form
///   {"dim": d, "weights": [...], "measurements": [[[ [re,im], ... ]]]}
/// with each projector a flat row-major list of d*d complex entries, or the
/// qubit shorthand {"axes": [[x,y,z], ...], "weights": optional}.
/// Unknown fields are rejected.
MeasurementAssembly parse_measurement_json(const nlohmann::json& j);
MeasurementAssembly load_measurement_file(const std::string& path);

/// State schema: {"kind": "isotropic", "d":, "eta":} |
/// {"kind": "pure", "gamma":} | {"kind": "matrix", "d":, "entries": [...]}
/// with entries a flat row-major list of (d*d)^2 complex entries.
BipartiteState parse_state_json(const nlohmann::json& j);
BipartiteState load_state_file(const std::string& path);

nlohmann::json measurement_to_json(const MeasurementAssembly& assembly);
nlohmann::json threshold_report_to_json(const ThresholdReport& report);
nlohmann::json verdict_to_json(const SteeringVerdict& verdict);
nlohmann::json adapted_to_json(const AdaptedCriterion& criterion);

std::string criterion_kind_name(CriterionKind kind);

}  // namespace steerkit
