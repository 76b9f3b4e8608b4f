#include "banet/dynamics.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "banet/error.hpp"

namespace banet {
namespace {

void check_schedule(const ThresholdNetwork& net, const PeriodicSchedule& schedule) {
  if (schedule.node_count() != net.size()) {
    throw IndexError("schedule is over " + std::to_string(schedule.node_count()) +
                     " nodes but the network has " + std::to_string(net.size()));
  }
}

// Blocks compiled to node lists plus a mask of the updated bits.
struct CompiledBlock {
  std::vector<Node> nodes;
  std::uint64_t mask = 0;
};

std::vector<CompiledBlock> compile(const ThresholdNetwork& net, const PeriodicSchedule& schedule) {
  std::vector<CompiledBlock> out;
  out.reserve(schedule.period());
  for (const Block& b : schedule.blocks()) {
    CompiledBlock cb{b, 0};
    for (const Node i : b) cb.mask |= node_bit(net.size(), i);
    out.push_back(std::move(cb));
  }
  return out;
}

std::uint64_t apply_block(const ThresholdNetwork& net, const CompiledBlock& block, std::uint64_t code) {
  const std::size_t n = net.size();
  std::uint64_t updated = 0;
  for (const Node i : block.nodes) {
    if (net.evaluate(i, code)) updated |= node_bit(n, i);
  }
  return (code & ~block.mask) | updated;
}

std::uint64_t apply_all(const ThresholdNetwork& net, const std::vector<CompiledBlock>& blocks,
                        std::uint64_t code) {
  for (const auto& b : blocks) code = apply_block(net, b, code);
  return code;
}

}  // namespace

Configuration global_step(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                          const Configuration& x) {
  check_schedule(net, schedule);
  if (x.size() != net.size()) throw IndexError("configuration size does not match network size");
  return Configuration(net.size(), apply_all(net, compile(net, schedule), x.code()));
}

State next_state(const ThresholdNetwork& net, const PeriodicSchedule& schedule, const State& s,
                 Mode mode) {
  if (mode == Mode::macro) return {global_step(net, schedule, s.config), 0};
  check_schedule(net, schedule);
  if (s.phase >= schedule.period()) throw IndexError("phase out of range");
  const Configuration y = block_update(net, s.config, schedule.blocks()[s.phase]);
  return {y, (s.phase + 1) % schedule.period()};
}

Trajectory trajectory(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                      const Configuration& x0, Mode mode, std::size_t max_steps) {
  check_schedule(net, schedule);
  if (x0.size() != net.size()) throw IndexError("configuration size does not match network size");
  if (max_steps < 1) throw Error("max_steps must be at least 1");

  const std::size_t n = net.size();
  const std::size_t p = schedule.period();
  const auto blocks = compile(net, schedule);
  const std::size_t micro_per_step = mode == Mode::macro ? 1 : p;

  // Micro-states visited so far; element k * micro_per_step is the k-th
  // period boundary.
  std::vector<std::uint64_t> visited{x0.code()};
  std::unordered_map<std::uint64_t, std::size_t> boundary_index{{x0.code(), 0}};
  std::size_t steps = 0;
  std::uint64_t code = x0.code();
  while (steps + micro_per_step <= max_steps) {
    if (mode == Mode::macro) {
      code = apply_all(net, blocks, code);
    } else {
      for (std::size_t k = 0; k < p; ++k) {
        code = apply_block(net, blocks[k], code);
        if (k + 1 < p) visited.push_back(code);
      }
    }
    steps += micro_per_step;
    const auto [it, inserted] = boundary_index.emplace(code, visited.size() / micro_per_step);
    if (!inserted) {
      const std::size_t repeat_at = it->second * micro_per_step;
      Trajectory t{mode, p, {}, {}};
      for (std::size_t k = 0; k < visited.size(); ++k) {
        State s{Configuration(n, visited[k]), mode == Mode::macro ? 0 : k % p};
        (k < repeat_at ? t.transient : t.cycle).push_back(s);
      }
      return t;
    }
    visited.push_back(code);
  }
  throw StepBudgetExhausted("trajectory did not close within " + std::to_string(max_steps) + " steps");
}

TransitionGraph::TransitionGraph(Mode mode, std::size_t node_count, PeriodicSchedule schedule,
                                 std::vector<std::uint64_t> successors)
    : mode_(mode), n_(node_count), schedule_(std::move(schedule)), successors_(std::move(successors)) {}

std::uint64_t TransitionGraph::id_of(const State& s) const {
  if (mode_ == Mode::macro) return s.config.code();
  return s.config.code() * schedule_.period() + s.phase;
}

State TransitionGraph::state_of(std::uint64_t id) const {
  if (mode_ == Mode::macro) return {Configuration(n_, id), 0};
  const std::size_t p = schedule_.period();
  return {Configuration(n_, id / p), static_cast<std::size_t>(id % p)};
}

TransitionGraph transition_graph(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                 Mode mode, const ExhaustiveOptions& options) {
  check_schedule(net, schedule);
  const std::size_t n = net.size();
  if (n > options.max_nodes) {
    throw BoundExceeded("exhaustive enumeration over " + std::to_string(n) +
                        " nodes exceeds the bound of " + std::to_string(options.max_nodes));
  }
  const std::size_t p = schedule.period();
  const auto blocks = compile(net, schedule);
  const std::uint64_t configs = std::uint64_t{1} << n;
  const std::uint64_t count = mode == Mode::macro ? configs : configs * p;
  std::vector<std::uint64_t> succ(count);

  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t id = begin; id < end; ++id) {
      if (mode == Mode::macro) {
        succ[id] = apply_all(net, blocks, id);
      } else {
        const std::uint64_t code = id / p;
        const std::size_t phase = static_cast<std::size_t>(id % p);
        succ[id] = apply_block(net, blocks[phase], code) * p + (phase + 1) % p;
      }
    }
  };

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1 || count < 2 * workers) {
    fill(0, count);
  } else {
    // Each worker writes a disjoint slice, so the result is identical to a
    // single-threaded fill.
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(count, w * chunk);
      const std::uint64_t end = std::min(count, begin + chunk);
      pool.emplace_back(fill, begin, end);
    }
  }
  return TransitionGraph(mode, n, schedule, std::move(succ));
}

std::vector<Attractor> attractors(const TransitionGraph& graph) {
  constexpr std::uint32_t kUnvisited = 0xFFFFFFFFU;
  constexpr std::uint32_t kOnPath = 0xFFFFFFFEU;
  const std::uint64_t count = graph.state_count();
  std::vector<std::uint32_t> owner(count, kUnvisited);
  std::vector<std::vector<std::uint64_t>> cycles;
  std::vector<std::uint64_t> path;

  for (std::uint64_t start = 0; start < count; ++start) {
    if (owner[start] != kUnvisited) continue;
    path.clear();
    std::uint64_t v = start;
    while (owner[v] == kUnvisited) {
      owner[v] = kOnPath;
      path.push_back(v);
      v = graph.successor(v);
    }
    std::uint32_t target = 0;
    if (owner[v] == kOnPath) {
      // New cycle: the path suffix starting at v.
      target = static_cast<std::uint32_t>(cycles.size());
      const auto from = std::find(path.begin(), path.end(), v);
      cycles.emplace_back(from, path.end());
    } else {
      target = owner[v];
    }
    for (const std::uint64_t u : path) owner[u] = target;
  }

  std::vector<std::uint64_t> basin(cycles.size(), 0);
  if (graph.mode() == Mode::macro) {
    for (const std::uint32_t o : owner) ++basin[o];
  }

  std::vector<Attractor> out;
  out.reserve(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    Attractor a;
    std::vector<State> states;
    for (const std::uint64_t id : cycles[c]) states.push_back(graph.state_of(id));
    const auto min_it = std::min_element(states.begin(), states.end());
    std::rotate(states.begin(), min_it, states.end());
    a.states = std::move(states);
    a.kind = a.states.size() == 1 ? AttractorKind::fixed_point : AttractorKind::limit_cycle;
    if (graph.mode() == Mode::macro) a.basin_size = basin[c];
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(),
            [](const Attractor& a, const Attractor& b) { return a.states.front() < b.states.front(); });
  return out;
}

std::vector<Attractor> attractors(const ThresholdNetwork& net, const PeriodicSchedule& schedule,
                                  Mode mode, const ExhaustiveOptions& options) {
  return attractors(transition_graph(net, schedule, mode, options));
}

std::vector<Configuration> project_attractor(const Attractor& attractor, std::span<const Node> nodes) {
  if (nodes.empty()) throw IndexError("projection onto an empty node set");
  if (attractor.states.empty()) return {};
  const std::size_t n = attractor.states.front().config.size();
  std::vector<Node> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Node i : sorted) {
    if (i < 1 || i > n) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  std::vector<Configuration> out;
  out.reserve(attractor.states.size());
  for (const State& s : attractor.states) {
    std::uint64_t code = 0;
    for (const Node i : sorted) code = (code << 1) | (s.config[i] ? 1U : 0U);
    out.emplace_back(sorted.size(), code);
  }
  return out;
}

}  // namespace banet
