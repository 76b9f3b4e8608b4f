#include "banet/models.hpp"

#include <array>

#include "banet/io.hpp"

namespace banet {
namespace {

constexpr std::string_view kCycle3 = R"(# Positive 3-cycle 1 -> 2 -> 3 -> 1
nodes 3
weights
0 0 1
1 0 0
0 1 0
thresholds eps eps eps
)";

constexpr std::string_view kPlant = R"(# Genetic control of plant growth: auxin component (apical, left and right
# buds) paced by the CCA/TOC timer.
nodes 5
names AUXa AUXl AUXr CCA TOC
weights
1 -2 -2 -2 0
-2 1 -2 -2 0
-2 -2 1 -2 0
0 0 0 1 -2
0 0 0 1 0
thresholds -eps -eps -eps -eps eps
)";

constexpr std::string_view kCardio = R"(# Cardio-respiratory regulation: expiratory (E) and inspiratory (I) neurons
# pacing the baroreceptor (B) and the sino-atrial node (S).
nodes 4
names E I B S
weights
0 2 0 -1
-2 1 1 0
0 -1 0 1
1 0 -1 2
thresholds eps -eps eps eps
)";

constexpr std::string_view kCardioW44 = R"(# Cardio-respiratory regulation with the sino-atrial self-influence reduced
# from 2 to 1.
nodes 4
names E I B S
weights
0 2 0 -1
-2 1 1 0
0 -1 0 1
1 0 -1 1
thresholds eps -eps eps eps
)";

constexpr std::array<BundledModel, 4> kModels{{
    {"cycle3", "positive cycle of three nodes", kCycle3, "parallel", "000"},
    {"plant", "plant growth network with its CCA/TOC timer", kPlant, "{(1,2,3),(4),(5)}", "10010"},
    {"cardio", "cardio-respiratory network (w44 = 2)", kCardio, "{(1),(2),(4,3)}", "0000"},
    {"cardio_w44_1", "cardio-respiratory network with w44 = 1", kCardioW44, "{(1),(2),(4,3)}", "0000"},
}};

}  // namespace

std::span<const BundledModel> bundled_models() { return kModels; }

std::optional<BundledModel> find_bundled_model(std::string_view name) {
  for (const auto& m : kModels) {
    if (m.name == name) return m;
  }
  return std::nullopt;
}

ThresholdNetwork load_network(std::string_view name_or_path) {
  if (const auto m = find_bundled_model(name_or_path)) return parse_network(m->document);
  return parse_network(read_file(std::filesystem::path(name_or_path)));
}

}  // namespace banet
