#pragma once

#include <cstdint>
#include <random>

#include "banet/network.hpp"
#include "banet/schedule.hpp"

namespace banet {

// Seeded generators for property checks. Draws use only raw mt19937_64
// output, so sequences are identical across standard libraries.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Integer weights in [-2, 2], thresholds in {-3/2, -1/2, 1/2, 3/2}.
  ThresholdNetwork network(std::size_t n);
  // As network(), but only arcs that go forward in a random node order, so
  // the interaction graph is acyclic (no self-loops).
  ThresholdNetwork acyclic_network(std::size_t n);

  BlockSequentialSchedule block_sequential(std::size_t n);
  BlockParallelSchedule block_parallel(std::size_t n);
  // Fair periodic schedule of period 1..max_period with random blocks.
  PeriodicSchedule fair_periodic(std::size_t n, std::size_t max_period);
  // One of the three families above, chosen uniformly, as a periodic list.
  PeriodicSchedule fair_schedule(std::size_t n);

  std::vector<Node> permutation(std::size_t n);

 private:
  Rational threshold();

  std::mt19937_64 engine_;
};

}  // namespace banet
