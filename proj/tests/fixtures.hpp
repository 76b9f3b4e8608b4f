#pragma once

#include <initializer_list>

#include "banet/models.hpp"
#include "banet/network.hpp"
#include "banet/io.hpp"

namespace fixtures {

inline banet::ThresholdNetwork make_net(std::initializer_list<std::initializer_list<int>> w,
                                        std::initializer_list<banet::Rational> theta) {
  banet::Matrix m;
  for (const auto& row : w) {
    std::vector<banet::Rational> r;
    for (const int v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return banet::ThresholdNetwork(std::move(m), std::vector<banet::Rational>(theta));
}

inline const banet::Rational eps{1, 2};

inline banet::ThresholdNetwork cycle3() { return banet::load_network("cycle3"); }
inline banet::ThresholdNetwork plant() { return banet::load_network("plant"); }
inline banet::ThresholdNetwork cardio() { return banet::load_network("cardio"); }
inline banet::ThresholdNetwork cardio_w44_1() { return banet::load_network("cardio_w44_1"); }

inline banet::Configuration cfg(const char* bits) { return banet::Configuration::parse(bits); }

inline banet::PeriodicSchedule bs(std::size_t n, std::vector<banet::Block> parts) {
  return banet::as_periodic(banet::BlockSequentialSchedule(n, std::move(parts)));
}

}  // namespace fixtures
