#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "banet/dynamics.hpp"
#include "banet/network.hpp"
#include "banet/schedule.hpp"

namespace banet {

// Network document:
//
//   # comment
//   nodes 3
//   names a b c            (optional)
//   weights
//   0 0 1
//   1 0 0
//   0 1 0
//   thresholds eps eps eps
//
// Entries are integers, p/q fractions or decimals; `eps` / `+eps` / `-eps`
// stand for 1/2 / 1/2 / -1/2. Errors are ParseError with line and column.
ThresholdNetwork parse_network(std::string_view text);

// Canonical document; parse_network(serialize_network(net)) == net.
std::string serialize_network(const ThresholdNetwork& net);

// Schedule notation, whitespace insensitive:
//   ({1,2},{3})          block-sequential (ordered partition)
//   {(1,2,3),(4),(5)}    block-parallel (set of sequences)
//   [{1,2},{2,3}]        general periodic
//   parallel, sequential shorthands
// Node tokens are 1-based indices or node names of `net`.
Schedule parse_schedule(std::string_view text, const ThresholdNetwork& net);
// Same, for a bare node count (numeric node tokens only).
Schedule parse_schedule(std::string_view text, std::size_t node_count);

// Trajectory listing, one configuration per line:
//
//   # trace mode=complete period=2
//   transient 0000
//   transient 0100 micro
//   cycle 0011
//   ...
//   repeat 0011
//
// `micro` marks intermediary configurations (phase != 0); the final
// `repeat` line closes the cycle. Spaces inside bit strings are ignored on
// parse.
enum class TraceSection { transient, cycle, repeat };

struct TraceLine {
  TraceSection section = TraceSection::transient;
  Configuration config;
  bool micro = false;
};

struct TraceDocument {
  Mode mode = Mode::macro;
  std::size_t period = 1;
  std::vector<TraceLine> lines;

  // Every configuration in order, including the closing repeat.
  std::vector<Configuration> configurations() const;
};

TraceDocument make_trace(const Trajectory& t);
// `groups` splits each bit string for display, e.g. {3, 2} gives "100 10";
// a single entry k groups every k bits.
std::string serialize_trace(const TraceDocument& doc, const std::vector<std::size_t>& groups = {});
TraceDocument parse_trace(std::string_view text);

std::string group_bits(const std::string& bits, const std::vector<std::size_t>& groups);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace banet
