#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banet/dynamics.hpp"
#include "banet/interaction_graph.hpp"
#include "banet/update_graph.hpp"

namespace banet {

// Outcome of checking one property on a concrete network. When `holds` is
// false, `witness` names the configuration, schedule or cycle at fault.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<std::string> witness;
  std::string details;
};

// { x : F[delta](x) = x }, in increasing code order.
std::vector<Configuration> fixed_points(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                        const ExhaustiveOptions& options = {});

// Fixed points of the parallel map are fixed points under `schedule`.
PropertyReport check_parallel_fixpoint_preservation(const ThresholdNetwork& net,
                                                    const PeriodicSchedule& schedule,
                                                    const ExhaustiveOptions& options = {});

// For an acyclic interaction graph, every sampled schedule has exactly one
// attractor and it is a fixed point. Throws PreconditionError when the
// graph has a cycle.
PropertyReport check_acyclic_unique_attractor(const ThresholdNetwork& net,
                                              std::span<const PeriodicSchedule> schedules,
                                              const ExhaustiveOptions& options = {});

// Schedules checked by default for the acyclic property: every ordered
// partition when n <= 4, otherwise parallel, sequential and `random_count`
// random fair periodic schedules drawn from `seed`.
std::vector<PeriodicSchedule> acyclic_schedule_sample(std::size_t n, std::uint64_t seed = 1,
                                                      std::size_t random_count = 20);

// Two or more fixed points under `schedule` require a positive cycle in
// G(f). The property is guaranteed for block-sequential schedules only: a
// schedule that updates a node several times per period can turn a
// negative self-loop into the identity.
PropertyReport check_multistationarity_positive_cycle(const ThresholdNetwork& net,
                                                      const PeriodicSchedule& schedule,
                                                      const ExhaustiveOptions& options = {});

// Equal update graphs imply equal global transition functions.
PropertyReport check_update_graph_equivalence(const ThresholdNetwork& net, const Schedule& first,
                                              const Schedule& second,
                                              const ExhaustiveOptions& options = {});

std::string format_configurations(const std::vector<Configuration>& configs);

}  // namespace banet
