#include "banet/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "banet/error.hpp"

namespace banet {
namespace {

void check_node(std::size_t n, Node i) {
  if (i < 1 || i > n) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

Block normalize_block(std::size_t n, Block block) {
  if (block.empty()) throw ScheduleError("empty block");
  for (const Node i : block) check_node(n, i);
  std::sort(block.begin(), block.end());
  if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
    throw ScheduleError("node listed twice in one block");
  }
  return block;
}

void check_node_count(std::size_t n) {
  if (n == 0) throw ScheduleError("schedule over an empty node set");
  if (n > kMaxNodes) throw BoundExceeded("schedule over more than " + std::to_string(kMaxNodes) + " nodes");
}

std::string join_nodes(const std::vector<Node>& nodes) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(nodes[k]);
  }
  return out;
}

}  // namespace

PeriodicSchedule::PeriodicSchedule(std::size_t node_count, std::vector<Block> blocks) : n_(node_count) {
  check_node_count(n_);
  if (blocks.empty()) throw ScheduleError("periodic schedule needs at least one block");
  blocks_.reserve(blocks.size());
  for (auto& b : blocks) blocks_.push_back(normalize_block(n_, std::move(b)));
}

bool PeriodicSchedule::is_fair() const {
  std::vector<bool> seen(n_ + 1, false);
  for (const auto& b : blocks_) {
    for (const Node i : b) seen[i] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool s) { return s; });
}

BlockSequentialSchedule::BlockSequentialSchedule(std::size_t node_count, std::vector<Block> parts)
    : n_(node_count), index_(node_count, 0) {
  check_node_count(n_);
  if (parts.empty()) throw ScheduleError("block-sequential schedule needs at least one block");
  std::vector<bool> seen(n_ + 1, false);
  parts_.reserve(parts.size());
  for (auto& part : parts) {
    Block b = normalize_block(n_, std::move(part));
    for (const Node i : b) {
      if (seen[i]) throw ScheduleError("node " + std::to_string(i) + " appears in two blocks of a partition");
      seen[i] = true;
      index_[i - 1] = parts_.size();
    }
    parts_.push_back(std::move(b));
  }
  for (Node i = 1; i <= n_; ++i) {
    if (!seen[i]) throw ScheduleError("node " + std::to_string(i) + " is missing from the partition");
  }
}

BlockSequentialSchedule BlockSequentialSchedule::parallel(std::size_t node_count) {
  Block all(node_count);
  std::iota(all.begin(), all.end(), Node{1});
  return BlockSequentialSchedule(node_count, {all});
}

BlockSequentialSchedule BlockSequentialSchedule::sequential(std::size_t node_count) {
  std::vector<Block> parts;
  for (Node i = 1; i <= node_count; ++i) parts.push_back({i});
  return BlockSequentialSchedule(node_count, std::move(parts));
}

BlockParallelSchedule::BlockParallelSchedule(std::size_t node_count,
                                             std::vector<std::vector<Node>> sequences)
    : n_(node_count), sequences_(std::move(sequences)) {
  check_node_count(n_);
  if (sequences_.empty()) throw ScheduleError("block-parallel schedule needs at least one sequence");
  std::vector<bool> seen(n_ + 1, false);
  for (const auto& seq : sequences_) {
    if (seq.empty()) throw ScheduleError("empty sub-sequence");
    for (const Node i : seq) {
      check_node(n_, i);
      if (seen[i]) throw ScheduleError("node " + std::to_string(i) + " appears twice in the sub-sequences");
      seen[i] = true;
    }
  }
  for (Node i = 1; i <= n_; ++i) {
    if (!seen[i]) throw ScheduleError("node " + std::to_string(i) + " is missing from the sub-sequences");
  }
  std::sort(sequences_.begin(), sequences_.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
}

std::size_t BlockParallelSchedule::period() const {
  std::size_t p = 1;
  for (const auto& seq : sequences_) p = std::lcm(p, seq.size());
  return p;
}

PeriodicSchedule expand(const BlockParallelSchedule& bp) {
  const std::size_t p = bp.period();
  std::vector<Block> blocks(p);
  for (std::size_t k = 0; k < p; ++k) {
    for (const auto& seq : bp.sequences()) blocks[k].push_back(seq[k % seq.size()]);
  }
  return PeriodicSchedule(bp.node_count(), std::move(blocks));
}

PeriodicSchedule as_periodic(const BlockSequentialSchedule& bs) {
  return PeriodicSchedule(bs.node_count(), bs.parts());
}

PeriodicSchedule to_periodic(const Schedule& s) {
  return std::visit(
      [](const auto& v) -> PeriodicSchedule {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PeriodicSchedule>) {
          return v;
        } else if constexpr (std::is_same_v<T, BlockSequentialSchedule>) {
          return as_periodic(v);
        } else {
          return expand(v);
        }
      },
      s);
}

std::size_t period(const Schedule& s) {
  return std::visit([](const auto& v) { return v.period(); }, s);
}

std::size_t node_count(const Schedule& s) {
  return std::visit([](const auto& v) { return v.node_count(); }, s);
}

namespace {

std::optional<BlockParallelSchedule> reconstruct_block_parallel(const PeriodicSchedule& ps) {
  const std::size_t n = ps.node_count();
  const std::size_t p = ps.period();

  std::vector<std::vector<std::size_t>> times(n + 1);
  for (std::size_t k = 0; k < p; ++k) {
    for (const Node i : ps.blocks()[k]) times[i].push_back(k);
  }

  // length -> residue -> nodes
  std::map<std::size_t, std::vector<std::vector<Node>>> by_length;
  std::size_t lengths_lcm = 1;
  for (Node i = 1; i <= n; ++i) {
    const auto& t = times[i];
    if (t.empty() || p % t.size() != 0) return std::nullopt;
    const std::size_t length = p / t.size();
    const std::size_t residue = t.front();
    if (residue >= length) return std::nullopt;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] != residue + k * length) return std::nullopt;
    }
    auto& slots = by_length[length];
    slots.resize(length);
    slots[residue].push_back(i);
    lengths_lcm = std::lcm(lengths_lcm, length);
  }
  if (lengths_lcm != p) return std::nullopt;

  std::vector<std::vector<Node>> sequences;
  for (const auto& [length, slots] : by_length) {
    const std::size_t count = slots.front().size();
    for (const auto& nodes : slots) {
      if (nodes.size() != count) return std::nullopt;
    }
    // Any pairing across residues expands identically; zip the sorted lists.
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<Node> seq;
      for (const auto& nodes : slots) seq.push_back(nodes[m]);
      sequences.push_back(std::move(seq));
    }
  }
  BlockParallelSchedule bp(n, std::move(sequences));
  if (expand(bp) != ps) return std::nullopt;
  return bp;
}

}  // namespace

Classification classify(const PeriodicSchedule& ps) {
  Classification c;
  c.fair = ps.is_fair();
  c.strongly_ergodic = c.fair;
  if (c.fair) {
    std::size_t total = 0;
    for (const auto& b : ps.blocks()) total += b.size();
    if (total == ps.node_count()) {
      c.block_sequential = true;
      c.as_block_sequential = BlockSequentialSchedule(ps.node_count(), ps.blocks());
    }
    c.as_block_parallel = reconstruct_block_parallel(ps);
    c.block_parallel = c.as_block_parallel.has_value();
  }
  return c;
}

std::vector<BlockSequentialSchedule> ordered_partitions(std::size_t n) {
  check_node_count(n);
  if (n > 7) throw BoundExceeded("ordered partitions enumerated only for n <= 7");
  // Each assignment of nodes to block indices whose image is {0..k-1} is one
  // ordered partition.
  std::vector<BlockSequentialSchedule> out;
  std::vector<std::size_t> assign(n, 0);
  for (;;) {
    const std::size_t k = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<Block> parts(k);
    for (Node i = 1; i <= n; ++i) parts[assign[i - 1]].push_back(i);
    if (std::none_of(parts.begin(), parts.end(), [](const Block& b) { return b.empty(); })) {
      out.emplace_back(n, std::move(parts));
    }
    // Next assignment in base-n counting, last node varying fastest.
    std::size_t pos = n;
    while (pos > 0 && assign[pos - 1] == n - 1) assign[--pos] = 0;
    if (pos == 0) break;
    ++assign[pos - 1];
  }
  return out;
}

std::string to_string(const PeriodicSchedule& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.blocks().size(); ++k) {
    if (k) out += ',';
    out += '{' + join_nodes(s.blocks()[k]) + '}';
  }
  return out + ']';
}

std::string to_string(const BlockSequentialSchedule& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.parts().size(); ++k) {
    if (k) out += ',';
    out += '{' + join_nodes(s.parts()[k]) + '}';
  }
  return out + ')';
}

std::string to_string(const BlockParallelSchedule& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.sequences().size(); ++k) {
    if (k) out += ',';
    out += '(' + join_nodes(s.sequences()[k]) + ')';
  }
  return out + '}';
}

std::string to_string(const Schedule& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

}  // namespace banet
