#pragma once

#include <nlohmann/json.hpp>

#include "sobolev/inner_product.hpp"
#include "sobolev/jordan.hpp"

namespace sobolev {

// Wire format:
//   {"blocks": [{"z": [re, im], "alphas": [[re, im], ...]}, ...],
//    "betas":  [[re, im], ...]}
// and for product specs {"terms": [{"z": [re, im], "weights": [...]}, ...]}.

nlohmann::json to_json(const JordanOperator& z);
nlohmann::json to_json(const WeightVector& w);
nlohmann::json to_json(const SpectralData& data);
nlohmann::json to_json(const SobolevProductSpec& spec);

/// Throws std::invalid_argument on malformed input or invalid spectral data.
SpectralData spectral_from_json(const nlohmann::json& j);
SobolevProductSpec spec_from_json(const nlohmann::json& j);

} // namespace sobolev
