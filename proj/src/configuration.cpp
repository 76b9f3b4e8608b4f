#include "banet/configuration.hpp"

#include "banet/error.hpp"

namespace banet {

Configuration::Configuration(std::size_t n, std::uint64_t code) : n_(n), code_(code) {
  if (n > kMaxNodes) throw BoundExceeded("configuration over " + std::to_string(n) + " nodes exceeds limit of " + std::to_string(kMaxNodes));
  if (n < 64 && (code >> n) != 0) throw IndexError("configuration code out of range for " + std::to_string(n) + " nodes");
}

Configuration Configuration::parse(std::string_view bits) {
  std::size_t n = 0;
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const char c = bits[k];
    if (c == ' ') continue;
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid character '") + c + "' in configuration '" + std::string(bits) + "'", 0, 0);
    }
    if (++n > kMaxNodes) throw ParseError("configuration longer than " + std::to_string(kMaxNodes) + " bits", 0, 0);
    code = (code << 1) | static_cast<std::uint64_t>(c - '0');
  }
  if (n == 0) throw ParseError("empty configuration", 0, 0);
  return Configuration(n, code);
}

bool Configuration::at(Node i) const {
  if (i < 1 || i > n_) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
  return (*this)[i];
}

Configuration Configuration::with(Node i, bool value) const {
  if (i < 1 || i > n_) throw IndexError("node " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
  const std::uint64_t bit = node_bit(n_, i);
  return Configuration(n_, value ? (code_ | bit) : (code_ & ~bit));
}

std::string Configuration::to_string() const {
  std::string out(n_, '0');
  for (Node i = 1; i <= n_; ++i) {
    if ((*this)[i]) out[i - 1] = '1';
  }
  return out;
}

}  // namespace banet
