#include "banet/theorems.hpp"

#include <algorithm>

#include "banet/error.hpp"
#include "banet/generators.hpp"

namespace banet {

std::string format_configurations(const std::vector<Configuration>& configs) {
  std::string out = "{";
  for (std::size_t k = 0; k < configs.size(); ++k) {
    if (k) out += ", ";
    out += configs[k].to_string();
  }
  return out + "}";
}

std::vector<Configuration> fixed_points(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                        const ExhaustiveOptions& options) {
  const auto graph = transition_graph(net, schedule, Mode::macro, options);
  std::vector<Configuration> out;
  for (std::uint64_t code = 0; code < graph.state_count(); ++code) {
    if (graph.successor(code) == code) out.emplace_back(net.size(), code);
  }
  return out;
}

PropertyReport check_parallel_fixpoint_preservation(const ThresholdNetwork& net,
                                                    const PeriodicSchedule& schedule,
                                                    const ExhaustiveOptions& options) {
  PropertyReport r{"parallel-fixed-points-preserved", true, std::nullopt, {}};
  const auto parallel = fixed_points(net, as_periodic(BlockSequentialSchedule::parallel(net.size())), options);
  const auto scheduled = fixed_points(net, schedule, options);
  for (const auto& x : parallel) {
    if (!std::binary_search(scheduled.begin(), scheduled.end(), x)) {
      r.holds = false;
      r.witness = x.to_string();
      break;
    }
  }
  r.details = "parallel " + format_configurations(parallel) + " vs " + to_string(schedule) + " " +
              format_configurations(scheduled);
  if (r.holds && scheduled.size() > parallel.size()) r.details += " (strict inclusion)";
  return r;
}

PropertyReport check_acyclic_unique_attractor(const ThresholdNetwork& net,
                                              std::span<const PeriodicSchedule> schedules,
                                              const ExhaustiveOptions& options) {
  const auto graph = interaction_graph(net);
  if (!is_acyclic(graph)) {
    const auto cycles = cycle_signs(graph);
    std::string cycle;
    for (const Node v : cycles.front().nodes) cycle += (cycle.empty() ? "" : "->") + std::to_string(v);
    throw PreconditionError("interaction graph is not acyclic (cycle " + cycle + ")");
  }
  PropertyReport r{"acyclic-unique-fixed-point", true, std::nullopt, {}};
  std::optional<Configuration> common;
  for (const auto& schedule : schedules) {
    const auto found = attractors(net, schedule, Mode::macro, options);
    if (found.size() != 1 || found.front().kind != AttractorKind::fixed_point) {
      r.holds = false;
      r.witness = to_string(schedule);
      r.details = std::to_string(found.size()) + " attractor(s) under " + to_string(schedule);
      return r;
    }
    common = found.front().states.front().config;
  }
  r.details = std::to_string(schedules.size()) + " schedule(s), unique fixed point " +
              (common ? common->to_string() : std::string("-"));
  return r;
}

std::vector<PeriodicSchedule> acyclic_schedule_sample(std::size_t n, std::uint64_t seed,
                                                      std::size_t random_count) {
  std::vector<PeriodicSchedule> out;
  if (n <= 4) {
    for (const auto& bs : ordered_partitions(n)) out.push_back(as_periodic(bs));
    return out;
  }
  out.push_back(as_periodic(BlockSequentialSchedule::parallel(n)));
  out.push_back(as_periodic(BlockSequentialSchedule::sequential(n)));
  Generator gen(seed);
  for (std::size_t k = 0; k < random_count; ++k) out.push_back(gen.fair_periodic(n, 6));
  return out;
}

PropertyReport check_multistationarity_positive_cycle(const ThresholdNetwork& net,
                                                      const PeriodicSchedule& schedule,
                                                      const ExhaustiveOptions& options) {
  PropertyReport r{"multistationarity-needs-positive-cycle", true, std::nullopt, {}};
  const auto fixed = fixed_points(net, schedule, options);
  const auto positive = find_positive_cycle(interaction_graph(net));
  std::string cycle;
  if (positive) {
    for (const Node v : positive->nodes) cycle += (cycle.empty() ? "" : "->") + std::to_string(v);
  }
  if (fixed.size() < 2) {
    r.details = std::to_string(fixed.size()) + " fixed point(s); nothing to show";
  } else if (positive) {
    r.details = std::to_string(fixed.size()) + " fixed points " + format_configurations(fixed) +
                "; positive cycle " + cycle;
  } else {
    r.holds = false;
    r.witness = format_configurations(fixed);
    r.details = std::to_string(fixed.size()) + " fixed points under " + to_string(schedule) +
                " but no positive cycle";
  }
  return r;
}

PropertyReport check_update_graph_equivalence(const ThresholdNetwork& net, const Schedule& first,
                                              const Schedule& second,
                                              const ExhaustiveOptions& options) {
  PropertyReport r{"equal-update-graphs-equal-dynamics", true, std::nullopt, {}};
  const auto e = verify_update_graph_equivalence(net, first, second, options);
  r.details = to_string(first) + " vs " + to_string(second) + ": update graphs " +
              (e.graphs_equal ? "equal" : "differ") + ", dynamics " + (e.dynamics_equal ? "equal" : "differ");
  if (e.counterexample) r.details += " (on " + e.counterexample->to_string() + ")";
  if (e.graphs_equal && !e.dynamics_equal) {
    r.holds = false;
    r.witness = e.counterexample->to_string();
  }
  return r;
}

}  // namespace banet
