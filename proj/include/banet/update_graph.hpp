#pragma once

#include <optional>
#include <vector>

#include "banet/dynamics.hpp"
#include "banet/interaction_graph.hpp"
#include "banet/schedule.hpp"

namespace banet {

enum class UpdateLabel { less, greater_equal };

// Arc (source, target) of the unlabelled interaction graph with its label:
// "<" iff delta(source) < delta(target), ">=" otherwise. Self-loops are
// always ">=".
struct LabelledArc {
  Node source = 0;
  Node target = 0;
  UpdateLabel label = UpdateLabel::greater_equal;

  friend bool operator==(const LabelledArc&, const LabelledArc&) = default;
};

struct UpdateGraph {
  std::size_t node_count = 0;
  std::vector<LabelledArc> arcs;  // sorted by (source, target)

  friend bool operator==(const UpdateGraph&, const UpdateGraph&) = default;
};

const char* to_string(UpdateLabel label);  // "<" or ">="

UpdateGraph update_graph(const ThresholdNetwork& net, const BlockSequentialSchedule& schedule);

// Update graphs exist only for block-sequential schedules; any other family
// throws ScheduleError.
UpdateGraph update_graph(const ThresholdNetwork& net, const Schedule& schedule);

bool same_update_graph(const ThresholdNetwork& net, const Schedule& first, const Schedule& second);

struct EquivalenceReport {
  bool graphs_equal = false;
  bool dynamics_equal = false;
  // A configuration on which the two global transition functions differ.
  std::optional<Configuration> counterexample;
};

// Compares the update graphs and, exhaustively over all 2^n configurations,
// the global transition functions of two block-sequential schedules.
EquivalenceReport verify_update_graph_equivalence(const ThresholdNetwork& net, const Schedule& first,
                                                  const Schedule& second,
                                                  const ExhaustiveOptions& options = {});

}  // namespace banet
