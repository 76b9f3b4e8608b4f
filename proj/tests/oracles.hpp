#pragma once

// Test-only reference implementations. They deliberately avoid the library's
// evaluation paths: states are plain bit vectors, sums are taken in Rational
// arithmetic directly from the matrix, and enumerations are brute force.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "banet/interaction_graph.hpp"
#include "banet/network.hpp"
#include "banet/schedule.hpp"

namespace oracle {

using Bits = std::vector<int>;  // Bits[i - 1] = x_i

inline Bits bits(const std::string& s) {
  Bits out;
  for (const char c : s) {
    if (c == '0' || c == '1') out.push_back(c - '0');
  }
  return out;
}

inline std::string str(const Bits& b) {
  std::string out;
  for (const int v : b) out += static_cast<char>('0' + v);
  return out;
}

inline Bits from_code(std::size_t n, std::uint64_t code) {
  Bits out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<int>((code >> (n - 1 - k)) & 1U);
  return out;
}

inline int local(const banet::ThresholdNetwork& net, const Bits& x, std::size_t i) {
  banet::Rational sum = 0;
  for (std::size_t j = 1; j <= net.size(); ++j) {
    if (x[j - 1]) sum += net.weight(i, j);
  }
  sum -= net.threshold(i);
  return sum < banet::Rational(0) ? 0 : 1;
}

inline Bits apply_block(const banet::ThresholdNetwork& net, const Bits& x, const std::vector<std::size_t>& block) {
  Bits y = x;
  for (const auto i : block) y[i - 1] = local(net, x, i);
  return y;
}

inline Bits apply_schedule(const banet::ThresholdNetwork& net, Bits x,
                           const std::vector<std::vector<std::size_t>>& blocks) {
  for (const auto& b : blocks) x = apply_block(net, x, b);
  return x;
}

// Every micro-state from x0 until a phase-0 state repeats, closing state
// included.
inline std::vector<std::string> complete_walk(const banet::ThresholdNetwork& net, const Bits& x0,
                                              const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::string> out{str(x0)};
  std::set<std::string> macro{str(x0)};
  Bits x = x0;
  for (;;) {
    for (const auto& b : blocks) {
      x = apply_block(net, x, b);
      out.push_back(str(x));
    }
    if (!macro.insert(str(x)).second) return out;
  }
}

// All elementary cycles by brute force over ordered node subsets, as
// (sequence from minimal node, positive?).
inline std::vector<std::pair<std::vector<std::size_t>, bool>> cycles(const banet::ThresholdNetwork& net) {
  const std::size_t n = net.size();
  std::vector<std::pair<std::vector<std::size_t>, bool>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i <= n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) members.push_back(i);
    }
    // members is sorted; fix the first (minimal) node, permute the rest.
    std::vector<std::size_t> rest(members.begin() + 1, members.end());
    do {
      std::vector<std::size_t> seq{members.front()};
      seq.insert(seq.end(), rest.begin(), rest.end());
      bool ok = true;
      int negatives = 0;
      for (std::size_t k = 0; k < seq.size() && ok; ++k) {
        const auto from = seq[k];
        const auto to = seq[(k + 1) % seq.size()];
        const auto& w = net.weight(to, from);
        if (w.is_zero()) ok = false;
        if (w.sign() < 0) ++negatives;
      }
      if (ok) out.emplace_back(seq, negatives % 2 == 0);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

// Every block-parallel schedule over {1..n}: all set partitions, each part
// in every order.
inline std::vector<std::vector<std::vector<std::size_t>>> all_block_parallel(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  // Restricted growth strings enumerate set partitions.
  std::vector<std::size_t> rgs(n, 0);
  for (;;) {
    const std::size_t parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::size_t>> groups(parts);
    for (std::size_t i = 0; i < n; ++i) groups[rgs[i]].push_back(i + 1);
    // Cartesian product of permutations of each group.
    std::vector<std::vector<std::vector<std::size_t>>> perms(parts);
    for (std::size_t g = 0; g < parts; ++g) {
      auto v = groups[g];
      do perms[g].push_back(v);
      while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<std::size_t> pick(parts, 0);
    for (;;) {
      std::vector<std::vector<std::size_t>> seqs;
      for (std::size_t g = 0; g < parts; ++g) seqs.push_back(perms[g][pick[g]]);
      out.push_back(seqs);
      std::size_t g = 0;
      while (g < parts && ++pick[g] == perms[g].size()) pick[g++] = 0;
      if (g == parts) break;
    }
    // Next restricted growth string.
    std::size_t k = n;
    bool advanced = false;
    while (k > 1) {
      --k;
      const std::size_t max_prefix = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(k));
      if (rgs[k] <= max_prefix) {
        ++rgs[k];
        std::fill(rgs.begin() + static_cast<long>(k) + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

// The block list obtained by letting every sequence cycle through its
// members, written out independently of banet::expand.
inline std::vector<std::set<std::size_t>> unroll(const std::vector<std::vector<std::size_t>>& seqs) {
  std::size_t p = 1;
  for (const auto& s : seqs) p = std::lcm(p, s.size());
  std::vector<std::set<std::size_t>> out(p);
  for (const auto& s : seqs) {
    for (std::size_t t = 0; t < p; ++t) out[t].insert(s[t % s.size()]);
  }
  return out;
}

}  // namespace oracle
