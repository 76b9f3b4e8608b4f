#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "banet/configuration.hpp"

namespace banet {

// A set of nodes, stored sorted and without repetition.
using Block = std::vector<Node>;

// Periodic update schedule (B_0, ..., B_{p-1}) over V = {1..n}: the blocks
// are applied in order, each one synchronously, and the list repeats.
class PeriodicSchedule {
 public:
  PeriodicSchedule(std::size_t node_count, std::vector<Block> blocks);

  std::size_t node_count() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t period() const { return blocks_.size(); }
  // Every node appears in some block.
  bool is_fair() const;

  friend bool operator==(const PeriodicSchedule&, const PeriodicSchedule&) = default;

 private:
  std::size_t n_;
  std::vector<Block> blocks_;
};

// Ordered partition of V. parallel() is the single-block partition and
// sequential() the partition into singletons ({1}, ..., {n}).
class BlockSequentialSchedule {
 public:
  BlockSequentialSchedule(std::size_t node_count, std::vector<Block> parts);

  static BlockSequentialSchedule parallel(std::size_t node_count);
  static BlockSequentialSchedule sequential(std::size_t node_count);

  std::size_t node_count() const { return n_; }
  const std::vector<Block>& parts() const { return parts_; }
  std::size_t period() const { return parts_.size(); }
  // delta(i): index of the part containing node i.
  std::size_t block_index(Node i) const { return index_.at(i - 1); }

  friend bool operator==(const BlockSequentialSchedule& a, const BlockSequentialSchedule& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }

 private:
  std::size_t n_;
  std::vector<Block> parts_;
  std::vector<std::size_t> index_;
};

// Set of disjoint node sequences covering V. All sequences advance together,
// one node per sequence per micro-step, each cycling through its members.
// Stored canonically: sequences sorted by their minimal node.
class BlockParallelSchedule {
 public:
  BlockParallelSchedule(std::size_t node_count, std::vector<std::vector<Node>> sequences);

  std::size_t node_count() const { return n_; }
  const std::vector<std::vector<Node>>& sequences() const { return sequences_; }
  // lcm of the sequence lengths.
  std::size_t period() const;

  friend bool operator==(const BlockParallelSchedule&, const BlockParallelSchedule&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<Node>> sequences_;
};

using Schedule = std::variant<PeriodicSchedule, BlockSequentialSchedule, BlockParallelSchedule>;

// Block k = { S[k mod |S|] : S in bp }, for k = 0 .. lcm|S| - 1.
PeriodicSchedule expand(const BlockParallelSchedule& bp);
PeriodicSchedule as_periodic(const BlockSequentialSchedule& bs);
PeriodicSchedule to_periodic(const Schedule& s);

std::size_t period(const Schedule& s);
std::size_t node_count(const Schedule& s);

struct Classification {
  bool fair = false;
  // Equal to `fair` for periodic schedules.
  bool strongly_ergodic = false;
  bool block_sequential = false;
  bool block_parallel = false;
  std::optional<BlockSequentialSchedule> as_block_sequential;
  std::optional<BlockParallelSchedule> as_block_parallel;
};

// Decides membership in each family. Block-parallel membership is decided
// by reconstructing the sequences from every node's update times: node i
// must be updated exactly at the steps r_i + k * l_i, with l_i dividing the
// period, the l_i having lcm equal to the period, and for each length l the
// nodes with l_i = l spread evenly over the residues 0..l-1.
Classification classify(const PeriodicSchedule& ps);

// All ordered partitions of {1..n} (Fubini number of them), in a fixed
// deterministic order.
std::vector<BlockSequentialSchedule> ordered_partitions(std::size_t n);

// Textual forms: "[{1,2},{3}]", "({1,2},{3})", "{(1),(2,3)}".
std::string to_string(const PeriodicSchedule& s);
std::string to_string(const BlockSequentialSchedule& s);
std::string to_string(const BlockParallelSchedule& s);
std::string to_string(const Schedule& s);

}  // namespace banet
