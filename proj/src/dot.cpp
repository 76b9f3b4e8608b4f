#include "banet/dot.hpp"

#include <sstream>

namespace banet {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void emit_nodes(std::ostream& out, const ThresholdNetwork& net) {
  for (Node i = 1; i <= net.size(); ++i) {
    out << "  n" << i << " [label=" << quote(net.label(i)) << "];\n";
  }
}

}  // namespace

std::string emit_dot(const TransitionGraph& graph) {
  std::ostringstream out;
  out << "digraph transitions {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  const bool complete = graph.mode() == Mode::complete;
  for (std::uint64_t id = 0; id < graph.state_count(); ++id) {
    const State s = graph.state_of(id);
    std::string label = s.config.to_string();
    if (complete) label += ":" + std::to_string(s.phase);
    out << "  s" << id << " [label=" << quote(label) << "];\n";
  }
  for (std::uint64_t id = 0; id < graph.state_count(); ++id) {
    out << "  s" << id << " -> s" << graph.successor(id) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const InteractionGraph& graph, const ThresholdNetwork& net) {
  std::ostringstream out;
  out << "digraph interactions {\n";
  out << "  node [shape=circle];\n";
  emit_nodes(out, net);
  for (const Arc& a : graph.arcs) {
    const bool positive = a.sign() > 0;
    out << "  n" << a.source << " -> n" << a.target << " [label=" << quote(a.weight.to_string())
        << ", color=" << (positive ? "darkgreen" : "red")
        << ", arrowhead=" << (positive ? "normal" : "tee") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const UpdateGraph& graph, const ThresholdNetwork& net) {
  std::ostringstream out;
  out << "digraph update {\n";
  out << "  node [shape=circle];\n";
  emit_nodes(out, net);
  for (const LabelledArc& a : graph.arcs) {
    out << "  n" << a.source << " -> n" << a.target << " [label=" << quote(to_string(a.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_anteriority_dot(const BlockParallelSchedule& schedule, const ThresholdNetwork& net) {
  std::ostringstream out;
  out << "digraph anteriority {\n";
  out << "  node [shape=circle];\n";
  emit_nodes(out, net);
  for (const auto& seq : schedule.sequences()) {
    for (std::size_t k = 0; k < seq.size(); ++k) {
      out << "  n" << seq[k] << " -> n" << seq[(k + 1) % seq.size()] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace banet
