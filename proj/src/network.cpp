#include "banet/network.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "banet/error.hpp"

namespace banet {

bool heaviside(const Rational& s) { return s.sign() >= 0; }

ThresholdNetwork::ThresholdNetwork(Matrix weights, std::vector<Rational> thresholds,
                                   std::vector<std::string> names)
    : n_(weights.size()),
      weights_(std::move(weights)),
      thresholds_(std::move(thresholds)),
      names_(std::move(names)) {
  if (n_ == 0) throw Error("network must have at least one node");
  if (n_ > kMaxNodes) throw BoundExceeded("network of " + std::to_string(n_) + " nodes exceeds limit of " + std::to_string(kMaxNodes));
  for (std::size_t i = 0; i < n_; ++i) {
    if (weights_[i].size() != n_) {
      throw Error("interaction matrix row " + std::to_string(i + 1) + " has " +
                  std::to_string(weights_[i].size()) + " entries, expected " + std::to_string(n_));
    }
  }
  if (thresholds_.size() != n_) {
    throw Error("threshold vector has " + std::to_string(thresholds_.size()) + " entries, expected " + std::to_string(n_));
  }
  if (!names_.empty()) {
    if (names_.size() != n_) throw Error("expected " + std::to_string(n_) + " node names");
    std::set<std::string> seen;
    for (const auto& name : names_) {
      if (!seen.insert(name).second) throw Error("duplicate node name '" + name + "'");
    }
  }

  scaled_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t scale = thresholds_[i].denominator();
    for (const auto& w : weights_[i]) scale = checked_lcm(scale, w.denominator());
    ScaledRow& row = scaled_[i];
    row.weights.assign(n_, 0);
    Rational magnitude = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational scaled = weights_[i][j] * Rational(scale);
      row.weights[n_ - 1 - j] = scaled.numerator();
      magnitude += scaled.sign() < 0 ? -scaled : scaled;
    }
    const Rational theta = thresholds_[i] * Rational(scale);
    row.threshold = theta.numerator();
    // Bounds every partial sum in evaluate(); the checked addition throws
    // OverflowError for rows whose sums would not fit.
    magnitude += theta.sign() < 0 ? -theta : theta;
  }
}

std::string ThresholdNetwork::label(Node i) const {
  if (!names_.empty()) return names_.at(i - 1);
  return std::to_string(i);
}

std::optional<Node> ThresholdNetwork::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k + 1;
  }
  Node value = 0;
  if (name.empty() || name.size() > 6) return std::nullopt;
  for (const char c : name) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<Node>(c - '0');
  }
  if (value < 1 || value > n_) return std::nullopt;
  return value;
}

bool ThresholdNetwork::evaluate(Node i, std::uint64_t code) const {
  const ScaledRow& row = scaled_[i - 1];
  std::int64_t sum = 0;
  for (std::uint64_t bits = code; bits != 0; bits &= bits - 1) {
    sum += row.weights[static_cast<std::size_t>(__builtin_ctzll(bits))];
  }
  return sum >= row.threshold;
}

bool local_step(const ThresholdNetwork& net, const Configuration& x, Node i) {
  if (x.size() != net.size()) throw IndexError("configuration size does not match network size");
  if (i < 1 || i > net.size()) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(net.size()));
  return net.evaluate(i, x.code());
}

Configuration block_update(const ThresholdNetwork& net, const Configuration& x,
                           std::span<const Node> block) {
  if (block.empty()) throw ScheduleError("empty block");
  if (x.size() != net.size()) throw IndexError("configuration size does not match network size");
  const std::size_t n = net.size();
  std::uint64_t out = x.code();
  for (const Node i : block) {
    if (i < 1 || i > n) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    const std::uint64_t bit = node_bit(n, i);
    out = net.evaluate(i, x.code()) ? (out | bit) : (out & ~bit);
  }
  return Configuration(n, out);
}

Configuration parallel_update(const ThresholdNetwork& net, const Configuration& x) {
  std::vector<Node> all(net.size());
  for (Node i = 1; i <= net.size(); ++i) all[i - 1] = i;
  return block_update(net, x, all);
}

}  // namespace banet
