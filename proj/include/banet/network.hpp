#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "banet/configuration.hpp"
#include "banet/rational.hpp"

namespace banet {

using Matrix = std::vector<std::vector<Rational>>;

// Heaviside step: 0 if s < 0, 1 otherwise (so H(0) = 1).
bool heaviside(const Rational& s);

// A threshold Boolean network f(x) = H(W x - Theta).
//
// weight(i, j) is the influence of node j on node i. Nodes are 1-based.
// Alongside the rational data the network keeps, for each row, an integer
// copy scaled by the row's common denominator; local evaluation runs on
// those integers and is exact.
class ThresholdNetwork {
 public:
  ThresholdNetwork(Matrix weights, std::vector<Rational> thresholds,
                   std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  const Matrix& weights() const { return weights_; }
  const std::vector<Rational>& thresholds() const { return thresholds_; }
  const Rational& weight(Node i, Node j) const { return weights_.at(i - 1).at(j - 1); }
  const Rational& threshold(Node i) const { return thresholds_.at(i - 1); }

  // Empty when the network has no node labels.
  const std::vector<std::string>& names() const { return names_; }
  // Label of node i, or its decimal index when unnamed.
  std::string label(Node i) const;
  // Index of the node called `name` (or whose decimal index is `name`).
  std::optional<Node> find(std::string_view name) const;

  // f_i(x) without bounds checking; i must be in 1..n.
  bool evaluate(Node i, std::uint64_t code) const;

  friend bool operator==(const ThresholdNetwork& a, const ThresholdNetwork& b) {
    return a.weights_ == b.weights_ && a.thresholds_ == b.thresholds_ && a.names_ == b.names_;
  }

 private:
  struct ScaledRow {
    std::vector<std::int64_t> weights;  // indexed by bit position (node n first)
    std::int64_t threshold = 0;
  };

  std::size_t n_;
  Matrix weights_;
  std::vector<Rational> thresholds_;
  std::vector<std::string> names_;
  std::vector<ScaledRow> scaled_;
};

// f_i(x) = H(sum_j w_ij x_j - theta_i).
bool local_step(const ThresholdNetwork& net, const Configuration& x, Node i);

// F_B(x): every node of `block` takes f_i(x), all evaluated on the same x;
// every other node keeps its state.
Configuration block_update(const ThresholdNetwork& net, const Configuration& x,
                           std::span<const Node> block);

// f(x) = F_V(x).
Configuration parallel_update(const ThresholdNetwork& net, const Configuration& x);

}  // namespace banet
