#include "banet/update_graph.hpp"

#include "banet/error.hpp"

namespace banet {

const char* to_string(UpdateLabel label) { return label == UpdateLabel::less ? "<" : ">="; }

UpdateGraph update_graph(const ThresholdNetwork& net, const BlockSequentialSchedule& schedule) {
  if (schedule.node_count() != net.size()) throw IndexError("schedule and network sizes differ");
  UpdateGraph g;
  g.node_count = net.size();
  for (const Arc& a : interaction_graph(net).arcs) {
    const bool less = schedule.block_index(a.source) < schedule.block_index(a.target);
    g.arcs.push_back({a.source, a.target, less ? UpdateLabel::less : UpdateLabel::greater_equal});
  }
  return g;
}

UpdateGraph update_graph(const ThresholdNetwork& net, const Schedule& schedule) {
  if (const auto* bs = std::get_if<BlockSequentialSchedule>(&schedule)) return update_graph(net, *bs);
  // A periodic list that happens to be an ordered partition is accepted.
  if (const auto* ps = std::get_if<PeriodicSchedule>(&schedule)) {
    if (auto c = classify(*ps); c.block_sequential) return update_graph(net, *c.as_block_sequential);
  }
  throw ScheduleError("update graphs are defined only for block-sequential schedules, got " + to_string(schedule));
}

bool same_update_graph(const ThresholdNetwork& net, const Schedule& first, const Schedule& second) {
  return update_graph(net, first) == update_graph(net, second);
}

EquivalenceReport verify_update_graph_equivalence(const ThresholdNetwork& net, const Schedule& first,
                                                  const Schedule& second,
                                                  const ExhaustiveOptions& options) {
  EquivalenceReport report;
  report.graphs_equal = same_update_graph(net, first, second);
  const auto g1 = transition_graph(net, to_periodic(first), Mode::macro, options);
  const auto g2 = transition_graph(net, to_periodic(second), Mode::macro, options);
  report.dynamics_equal = true;
  for (std::uint64_t code = 0; code < g1.state_count(); ++code) {
    if (g1.successor(code) != g2.successor(code)) {
      report.dynamics_equal = false;
      report.counterexample = Configuration(net.size(), code);
      break;
    }
  }
  return report;
}

}  // namespace banet
