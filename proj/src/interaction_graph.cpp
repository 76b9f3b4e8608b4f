#include "banet/interaction_graph.hpp"

#include <algorithm>

namespace banet {

std::optional<Rational> InteractionGraph::weight(Node i, Node j) const {
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair{i, j},
                                   [](const Arc& a, const std::pair<Node, Node>& key) {
                                     return std::pair{a.source, a.target} < key;
                                   });
  if (it == arcs.end() || it->source != i || it->target != j) return std::nullopt;
  return it->weight;
}

std::vector<std::vector<Node>> InteractionGraph::successors() const {
  std::vector<std::vector<Node>> out(node_count + 1);
  for (const Arc& a : arcs) out[a.source].push_back(a.target);
  return out;
}

InteractionGraph interaction_graph(const ThresholdNetwork& net) {
  InteractionGraph g;
  g.node_count = net.size();
  for (Node i = 1; i <= net.size(); ++i) {
    for (Node j = 1; j <= net.size(); ++j) {
      const Rational& w = net.weight(j, i);
      if (!w.is_zero()) g.arcs.push_back({i, j, w});
    }
  }
  return g;
}

namespace {

// Enumerates cycles whose minimal node is `start` by DFS restricted to nodes
// greater than `start`.
class CycleSearch {
 public:
  CycleSearch(const InteractionGraph& g, std::vector<SignedCycle>& out)
      : graph_(g), adjacency_(g.successors()), on_path_(g.node_count + 1, false), out_(out) {}

  void run(Node start) {
    start_ = start;
    path_.assign(1, start);
    on_path_[start] = true;
    extend(start, 0);
    on_path_[start] = false;
  }

 private:
  void extend(Node v, int negatives) {
    for (const Node w : adjacency_[v]) {
      const int neg = negatives + (graph_.weight(v, w)->sign() < 0 ? 1 : 0);
      if (w == start_) {
        out_.push_back({path_, neg % 2 == 0 ? CycleSign::positive : CycleSign::negative});
      } else if (w > start_ && !on_path_[w]) {
        on_path_[w] = true;
        path_.push_back(w);
        extend(w, neg);
        path_.pop_back();
        on_path_[w] = false;
      }
    }
  }

  const InteractionGraph& graph_;
  std::vector<std::vector<Node>> adjacency_;
  std::vector<bool> on_path_;
  std::vector<Node> path_;
  Node start_ = 0;
  std::vector<SignedCycle>& out_;
};

}  // namespace

std::vector<SignedCycle> cycle_signs(const InteractionGraph& graph) {
  std::vector<SignedCycle> out;
  CycleSearch search(graph, out);
  for (Node s = 1; s <= graph.node_count; ++s) search.run(s);
  std::sort(out.begin(), out.end(), [](const SignedCycle& a, const SignedCycle& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  });
  return out;
}

std::optional<SignedCycle> find_positive_cycle(const InteractionGraph& graph) {
  for (auto& c : cycle_signs(graph)) {
    if (c.sign == CycleSign::positive) return c;
  }
  return std::nullopt;
}

bool is_acyclic(const InteractionGraph& graph) {
  // Kahn's algorithm; self-loops keep their node's in-degree positive.
  std::vector<std::size_t> indegree(graph.node_count + 1, 0);
  for (const Arc& a : graph.arcs) ++indegree[a.target];
  const auto adjacency = graph.successors();
  std::vector<Node> ready;
  for (Node v = 1; v <= graph.node_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Node v = ready.back();
    ready.pop_back();
    ++removed;
    for (const Node w : adjacency[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == graph.node_count;
}

}  // namespace banet
