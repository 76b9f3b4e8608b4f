#include <doctest.h>

#include "banet/error.hpp"
#include "banet/generators.hpp"
#include "banet/interaction_graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace banet;
using fixtures::cfg;
using fixtures::eps;

TEST_CASE("heaviside") {
  CHECK(heaviside(Rational(-1)) == false);
  CHECK(heaviside(Rational(0)) == true);
  CHECK(heaviside(Rational(1, 2)) == true);
}

TEST_CASE("configuration encoding puts node 1 first") {
  const auto x = cfg("100 10");
  CHECK(x.size() == 5);
  CHECK(x.code() == 0b10010);
  CHECK(x[1]);
  CHECK_FALSE(x[2]);
  CHECK(x[4]);
  CHECK(x.to_string() == "10010");
  CHECK(x.with(2, true).to_string() == "11010");
  CHECK_THROWS_AS(x.at(6), IndexError);
  CHECK_THROWS_AS(Configuration::parse("10a"), ParseError);
  CHECK_THROWS_AS(Configuration::parse(""), ParseError);
  for (std::uint64_t code = 0; code < 32; ++code) {
    CHECK(Configuration::parse(Configuration(5, code).to_string()).code() == code);
  }
}

TEST_CASE("local_step") {
  CHECK(local_step(fixtures::cycle3(), cfg("001"), 1) == true);
  // 1 - 2 + eps < 0
  CHECK(local_step(fixtures::plant(), cfg("10010"), 1) == false);

  const auto net = fixtures::make_net({{0, 0}, {1, 0}}, {-eps, eps});
  for (const char* x : {"00", "01", "10", "11"}) CHECK(local_step(net, cfg(x), 1) == true);

  CHECK_THROWS_AS(local_step(net, cfg("00"), 0), IndexError);
  CHECK_THROWS_AS(local_step(net, cfg("00"), 3), IndexError);
  CHECK_THROWS_AS(local_step(net, cfg("000"), 1), IndexError);
}

TEST_CASE("local_step agrees with a rational-sum oracle") {
  Generator gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = gen.network(1 + gen.below(6));
    const std::size_t n = net.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const auto bits = oracle::from_code(n, code);
      for (Node i = 1; i <= n; ++i) {
        REQUIRE(local_step(net, Configuration(n, code), i) == (oracle::local(net, bits, i) == 1));
      }
    }
  }
}

TEST_CASE("fractional weights evaluate exactly") {
  // 1/3 + 1/3 + 1/3 - 1 = 0, so H = 1; floating point would give a tiny negative.
  const ThresholdNetwork net({{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                              {Rational(0), Rational(0), Rational(0)},
                              {Rational(0), Rational(0), Rational(0)}},
                             {Rational(1), eps, eps});
  CHECK(local_step(net, cfg("111"), 1) == true);
  CHECK(local_step(net, cfg("110"), 1) == false);
}

TEST_CASE("block_update") {
  const std::vector<Node> b145{1, 4, 5};
  CHECK(block_update(fixtures::plant(), cfg("10010"), b145) == cfg("00011"));
  const std::vector<Node> b124{1, 2, 4};
  CHECK(block_update(fixtures::cardio(), cfg("0000"), b124) == cfg("0100"));

  // Non-effective update: f_1(111) = x_1 on the positive cycle.
  const std::vector<Node> one{1};
  CHECK(block_update(fixtures::cycle3(), cfg("111"), one) == cfg("111"));

  const std::vector<Node> empty;
  CHECK_THROWS_AS(block_update(fixtures::cycle3(), cfg("111"), empty), ScheduleError);
  const std::vector<Node> bad{4};
  CHECK_THROWS_AS(block_update(fixtures::cycle3(), cfg("111"), bad), IndexError);
}

TEST_CASE("updating all nodes at once is the parallel map") {
  for (const auto& net : {fixtures::cycle3(), fixtures::plant(), fixtures::cardio()}) {
    const std::size_t n = net.size();
    std::vector<Node> all(n);
    std::iota(all.begin(), all.end(), Node{1});
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const auto x = Configuration(n, code);
      const auto expected = oracle::apply_block(net, oracle::from_code(n, code), all);
      CHECK(block_update(net, x, all).to_string() == oracle::str(expected));
      CHECK(parallel_update(net, x) == block_update(net, x, all));
    }
  }
}

TEST_CASE("joint and composed block updates differ on the positive cycle") {
  const auto net = fixtures::cycle3();
  const std::vector<Node> b1{1}, b2{2}, both{1, 2};
  bool differs = false;
  for (std::uint64_t code = 0; code < 8; ++code) {
    const Configuration x(3, code);
    const auto joint = block_update(net, x, both);
    const auto composed = block_update(net, block_update(net, x, b1), b2);
    // The joint update agrees with f on both nodes.
    CHECK(joint[1] == local_step(net, x, 1));
    CHECK(joint[2] == local_step(net, x, 2));
    differs = differs || joint != composed;
  }
  CHECK(differs);
}

TEST_CASE("bundled models are insensitive to the choice of eps") {
  for (const auto& m : bundled_models()) {
    const auto net = parse_network(m.document);
    Matrix w = net.weights();
    std::vector<Rational> theta = net.thresholds();
    for (auto& t : theta) {
      if (t == Rational(1, 2)) t = Rational(1, 4);
      if (t == Rational(-1, 2)) t = Rational(-1, 4);
    }
    const ThresholdNetwork quarter(w, theta, net.names());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << net.size()); ++code) {
      for (Node i = 1; i <= net.size(); ++i) {
        CHECK(local_step(net, Configuration(net.size(), code), i) ==
              local_step(quarter, Configuration(net.size(), code), i));
      }
    }
  }
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(ThresholdNetwork({{Rational(1)}, {Rational(1)}}, {eps, eps}), Error);
  CHECK_THROWS_AS(ThresholdNetwork({{Rational(1)}}, {eps, eps}), Error);
  CHECK_THROWS_AS(ThresholdNetwork({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, {eps, eps}, {"a", "a"}),
                  Error);
  const auto net = fixtures::plant();
  CHECK(net.find("CCA") == Node{4});
  CHECK(net.find("5") == Node{5});
  CHECK_FALSE(net.find("6").has_value());
  CHECK_FALSE(net.find("XYZ").has_value());
  CHECK(net.label(1) == "AUXa");
}

TEST_CASE("interaction graph") {
  const auto g = interaction_graph(fixtures::cycle3());
  REQUIRE(g.arcs.size() == 3);
  CHECK(g.arcs[0] == Arc{1, 2, Rational(1)});
  CHECK(g.arcs[1] == Arc{2, 3, Rational(1)});
  CHECK(g.arcs[2] == Arc{3, 1, Rational(1)});

  const auto empty = interaction_graph(fixtures::make_net({{0, 0}, {0, 0}}, {eps, eps}));
  CHECK(empty.arcs.empty());

  // Nonzero entries of the cardio matrix: 2 + 3 + 2 + 3.
  const auto cardio = interaction_graph(fixtures::cardio());
  CHECK(cardio.arcs.size() == 10);
  CHECK(cardio.weight(2, 2) == Rational(1));
  CHECK(cardio.weight(4, 4) == Rational(2));
  CHECK(cardio.weight(2, 3) == Rational(-1));
  CHECK(cardio.weight(3, 2) == Rational(1));
  CHECK_FALSE(cardio.weight(1, 1).has_value());
}

TEST_CASE("cycle signs") {
  const auto c3 = cycle_signs(interaction_graph(fixtures::cycle3()));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].nodes == std::vector<Node>{1, 2, 3});
  CHECK(c3[0].sign == CycleSign::positive);

  const auto chain = fixtures::make_net({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {eps, eps, eps});
  CHECK(cycle_signs(interaction_graph(chain)).empty());
  CHECK(is_acyclic(interaction_graph(chain)));
  CHECK_FALSE(is_acyclic(interaction_graph(fixtures::cycle3())));

  const auto cardio = cycle_signs(interaction_graph(fixtures::cardio()));
  auto has = [&](std::vector<Node> nodes, CycleSign sign) {
    return std::find(cardio.begin(), cardio.end(), SignedCycle{nodes, sign}) != cardio.end();
  };
  CHECK(has({4}, CycleSign::positive));
  CHECK(has({2}, CycleSign::positive));
  CHECK(has({2, 3}, CycleSign::negative));
  // Ordered by length first.
  for (std::size_t k = 1; k < cardio.size(); ++k) CHECK(cardio[k - 1].nodes.size() <= cardio[k].nodes.size());
}

TEST_CASE("cycle signs match brute-force enumeration") {
  Generator gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto net = gen.network(1 + gen.below(6));
    const auto found = cycle_signs(interaction_graph(net));
    const auto expected = oracle::cycles(net);
    REQUIRE(found.size() == expected.size());
    for (std::size_t k = 0; k < found.size(); ++k) {
      CHECK(found[k].nodes == expected[k].first);
      CHECK((found[k].sign == CycleSign::positive) == expected[k].second);
    }
  }
}
