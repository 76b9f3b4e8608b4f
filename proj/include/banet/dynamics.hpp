#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "banet/network.hpp"
#include "banet/schedule.hpp"

namespace banet {

// macro: one state per configuration, one transition per full period F[delta].
// complete: states are (configuration, phase) pairs and each transition
// applies a single block, so intermediary configurations are kept apart
// even when they repeat inside one cycle.
enum class Mode { macro, complete };

struct State {
  Configuration config;
  std::size_t phase = 0;  // index of the next block to apply; always 0 in macro mode

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State& a, const State& b) {
    if (auto c = a.config.code() <=> b.config.code(); c != 0) return c;
    return a.phase <=> b.phase;
  }
};

struct ExhaustiveOptions {
  std::size_t max_nodes = 24;
  unsigned workers = 1;
};

// F[delta](x) = F_{B_{p-1}} o ... o F_{B_0}(x).
Configuration global_step(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                          const Configuration& x);

// Successor of `s` in the given mode.
State next_state(const ThresholdNetwork& net, const PeriodicSchedule& schedule, const State& s,
                 Mode mode);

struct Trajectory {
  Mode mode = Mode::macro;
  std::size_t period = 1;  // schedule period
  std::vector<State> transient;
  std::vector<State> cycle;  // in visiting order; cycle.front() follows cycle.back()
};

// Iterates from (x0, phase 0) until a state repeats. In complete mode the
// split between transient and cycle is taken at period boundaries: the cycle
// starts at the first phase-0 state that recurs, so the transient covers a
// whole number of periods and the macro trajectory is every p-th state.
// `max_steps` counts transitions of the chosen mode.
Trajectory trajectory(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                      const Configuration& x0, Mode mode, std::size_t max_steps);

class TransitionGraph {
 public:
  TransitionGraph(Mode mode, std::size_t node_count, PeriodicSchedule schedule,
                  std::vector<std::uint64_t> successors);

  Mode mode() const { return mode_; }
  std::size_t node_count() const { return n_; }
  const PeriodicSchedule& schedule() const { return schedule_; }
  // Number of states: 2^n (macro) or 2^n * p (complete).
  std::uint64_t state_count() const { return successors_.size(); }

  // Dense ids: code (macro) or code * p + phase (complete).
  std::uint64_t id_of(const State& s) const;
  State state_of(std::uint64_t id) const;
  std::uint64_t successor(std::uint64_t id) const { return successors_[id]; }
  const std::vector<std::uint64_t>& successors() const { return successors_; }

 private:
  Mode mode_;
  std::size_t n_;
  PeriodicSchedule schedule_;
  std::vector<std::uint64_t> successors_;
};

// Full successor map. Throws BoundExceeded above options.max_nodes.
TransitionGraph transition_graph(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                 Mode mode, const ExhaustiveOptions& options = {});

enum class AttractorKind { fixed_point, limit_cycle };

struct Attractor {
  AttractorKind kind = AttractorKind::fixed_point;
  std::vector<State> states;  // rotated to start at the minimal (code, phase)
  // Number of configurations whose trajectory ends here; macro mode only.
  std::optional<std::uint64_t> basin_size;

  std::size_t period() const { return states.size(); }
};

// All terminal cycles of the graph, sorted by their first (minimal) state.
std::vector<Attractor> attractors(const TransitionGraph& graph);

std::vector<Attractor> attractors(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                  Mode mode, const ExhaustiveOptions& options = {});

// The attractor's cyclic sequence restricted to `nodes` (taken in ascending
// order). Consecutive duplicates are kept.
std::vector<Configuration> project_attractor(const Attractor& attractor, std::span<const Node> nodes);

}  // namespace banet
