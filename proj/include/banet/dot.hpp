#pragma once

#include <string>

#include "banet/dynamics.hpp"
#include "banet/interaction_graph.hpp"
#include "banet/update_graph.hpp"

namespace banet {

// DOT renderings. Output depends only on the input values: nodes are emitted
// in increasing id (code) order and arcs in a fixed order derived from the
// input, so equal inputs give byte-identical text.

// Configurations labelled by bit string; complete-mode states as "bits:phase".
std::string emit_dot(const TransitionGraph& graph);

// Nodes labelled by name (or index); arcs carry the weight, colour and
// arrowhead by sign (positive: normal head, negative: tee).
std::string emit_dot(const InteractionGraph& graph, const ThresholdNetwork& net);

// Arcs labelled "<" or ">=".
std::string emit_dot(const UpdateGraph& graph, const ThresholdNetwork& net);

// Anteriority graph of a block-parallel schedule: within each sequence an
// arc from every node to the next one, and from the last back to the first
// (a self-loop for a sequence of length one).
std::string emit_anteriority_dot(const BlockParallelSchedule& schedule, const ThresholdNetwork& net);

}  // namespace banet
