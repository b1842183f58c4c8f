#pragma once

#include <json.hpp>

#include "fishnet/augment.hpp"
#include "fishnet/coloring.hpp"
#include "fishnet/distance.hpp"
#include "fishnet/spec.hpp"

namespace fishnet {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

ordered_json to_json(const QuotientCertificate& cert);
ordered_json to_json(const DistanceReport& report);
ordered_json to_json(const AugmentationResult& result);
ordered_json spec_info_json(const FishnetSpec& spec);

std::string certificate_text(const QuotientCertificate& cert);
std::string distance_text(const DistanceReport& report);
std::string augment_text(const AugmentationResult& result);
std::string spec_info_text(const FishnetSpec& spec);

}  // namespace fishnet
