#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "banet/network.hpp"

namespace banet {

struct BundledModel {
  std::string_view name;
  std::string_view description;
  std::string_view document;          // network document text
  std::string_view schedule;          // reference schedule, schedule notation
  std::string_view initial;           // reference initial configuration
};

// cycle3, plant, cardio, cardio_w44_1.
std::span<const BundledModel> bundled_models();
std::optional<BundledModel> find_bundled_model(std::string_view name);

// A bundled model name, or otherwise a path to a network document.
ThresholdNetwork load_network(std::string_view name_or_path);

}  // namespace banet
