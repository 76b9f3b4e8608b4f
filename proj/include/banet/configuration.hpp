#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace banet {

// 1-based node index, matching V = {1, ..., n}.
using Node = std::size_t;

// Largest network size a Configuration can hold.
inline constexpr std::size_t kMaxNodes = 62;

// A Boolean vector (x_1, ..., x_n). The integer code is sum x_i * 2^(n-i), so
// node 1 is the most significant bit and codes enumerate 0 .. 2^n - 1.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::size_t n, std::uint64_t code);

  static Configuration zeros(std::size_t n) { return Configuration(n, 0); }

  // Parses a bit string "x_1...x_n". Spaces are ignored ("100 10").
  static Configuration parse(std::string_view bits);

  std::size_t size() const { return n_; }
  std::uint64_t code() const { return code_; }

  bool operator[](Node i) const { return (code_ >> (n_ - i)) & 1U; }
  bool at(Node i) const;
  Configuration with(Node i, bool value) const;

  // Bit string with node 1 leftmost.
  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t code_ = 0;
};

inline std::uint64_t node_bit(std::size_t n, Node i) { return std::uint64_t{1} << (n - i); }

}  // namespace banet
