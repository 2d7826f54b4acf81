#pragma once

#include <json.hpp>

#include "sturmion/harness.hpp"

namespace sturmion {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Rationals as "num/den" (always with a denominator); BigFloat values as
/// {"decimal": ..., "precision_bits": ...}.
nlohmann::json to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<Scalar>& xs);
nlohmann::json to_json(const JacobiMatrix& J);
nlohmann::json to_json(const SpectralData& data);
nlohmann::json to_json(const GridSpec& spec);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

}  // namespace sturmion
