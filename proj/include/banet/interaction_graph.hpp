#pragma once

#include <optional>
#include <vector>

#include "banet/network.hpp"

namespace banet {

// Arc source -> target labelled with w_{target,source} (the influence of
// source on target).
struct Arc {
  Node source = 0;
  Node target = 0;
  Rational weight;

  int sign() const { return weight.sign(); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Signed interaction graph G(f): one arc per nonzero matrix entry.
struct InteractionGraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;  // sorted by (source, target)

  // Weight of arc i -> j, if present.
  std::optional<Rational> weight(Node i, Node j) const;
  std::vector<std::vector<Node>> successors() const;
};

InteractionGraph interaction_graph(const ThresholdNetwork& net);

enum class CycleSign { positive, negative };

// An elementary cycle v_0 -> v_1 -> ... -> v_{k-1} -> v_0, listed from its
// minimal node. A self-loop is a cycle of length 1.
struct SignedCycle {
  std::vector<Node> nodes;
  CycleSign sign = CycleSign::positive;

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

// All elementary cycles with their signs (positive iff the number of
// negative arcs is even), ordered by length and then lexicographically.
std::vector<SignedCycle> cycle_signs(const InteractionGraph& graph);

// First positive cycle in cycle_signs order, if any.
std::optional<SignedCycle> find_positive_cycle(const InteractionGraph& graph);

// True iff the graph has no cycle, self-loops included.
bool is_acyclic(const InteractionGraph& graph);

}  // namespace banet
