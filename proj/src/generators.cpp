#include "banet/generators.hpp"

#include <numeric>

namespace banet {

std::vector<Node> Generator::permutation(std::size_t n) {
  std::vector<Node> nodes(n);
  std::iota(nodes.begin(), nodes.end(), Node{1});
  for (std::size_t k = n; k > 1; --k) std::swap(nodes[k - 1], nodes[below(k)]);
  return nodes;
}

Rational Generator::threshold() {
  static const Rational kChoices[] = {Rational(-3, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)};
  return kChoices[below(4)];
}

ThresholdNetwork Generator::network(std::size_t n) {
  Matrix w(n, std::vector<Rational>(n));
  std::vector<Rational> theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(between(-2, 2));
    theta[i] = threshold();
  }
  return ThresholdNetwork(std::move(w), std::move(theta));
}

ThresholdNetwork Generator::acyclic_network(std::size_t n) {
  const auto order = permutation(n);
  Matrix w(n, std::vector<Rational>(n));
  std::vector<Rational> theta(n);
  for (std::size_t a = 0; a < n; ++a) {
    // order[a] may only be influenced by nodes placed before it.
    for (std::size_t b = 0; b < a; ++b) w[order[a] - 1][order[b] - 1] = Rational(between(-2, 2));
  }
  for (auto& t : theta) t = threshold();
  return ThresholdNetwork(std::move(w), std::move(theta));
}

BlockSequentialSchedule Generator::block_sequential(std::size_t n) {
  const auto nodes = permutation(n);
  std::vector<Block> parts(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && below(2) == 0) parts.emplace_back();
    parts.back().push_back(nodes[k]);
  }
  return BlockSequentialSchedule(n, std::move(parts));
}

BlockParallelSchedule Generator::block_parallel(std::size_t n) {
  const auto nodes = permutation(n);
  std::vector<std::vector<Node>> sequences(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && below(2) == 0) sequences.emplace_back();
    sequences.back().push_back(nodes[k]);
  }
  return BlockParallelSchedule(n, std::move(sequences));
}

PeriodicSchedule Generator::fair_periodic(std::size_t n, std::size_t max_period) {
  const std::size_t p = 1 + below(max_period);
  std::vector<std::vector<bool>> member(p, std::vector<bool>(n + 1, false));
  for (auto& block : member) {
    for (Node i = 1; i <= n; ++i) block[i] = below(3) == 0;
  }
  // Every node in at least one block, every block nonempty.
  for (Node i = 1; i <= n; ++i) member[below(p)][i] = true;
  for (auto& block : member) block[1 + below(n)] = true;
  std::vector<Block> blocks(p);
  for (std::size_t k = 0; k < p; ++k) {
    for (Node i = 1; i <= n; ++i) {
      if (member[k][i]) blocks[k].push_back(i);
    }
  }
  return PeriodicSchedule(n, std::move(blocks));
}

PeriodicSchedule Generator::fair_schedule(std::size_t n) {
  switch (below(3)) {
    case 0:
      return as_periodic(block_sequential(n));
    case 1:
      return expand(block_parallel(n));
    default:
      return fair_periodic(n, 6);
  }
}

}  // namespace banet
