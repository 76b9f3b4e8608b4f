#include <doctest.h>

#include <set>

#include "banet/error.hpp"
#include "banet/generators.hpp"
#include "banet/schedule.hpp"
#include "oracles.hpp"

using namespace banet;

namespace {

std::vector<Block> blocks(std::initializer_list<std::initializer_list<Node>> lists) {
  std::vector<Block> out;
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

TEST_CASE("expand block-parallel schedules") {
  CHECK(expand(BlockParallelSchedule(6, {{1}, {2, 3}, {4, 5, 6}})).blocks() ==
        blocks({{1, 2, 4}, {1, 3, 5}, {1, 2, 6}, {1, 3, 4}, {1, 2, 5}, {1, 3, 6}}));
  CHECK(expand(BlockParallelSchedule(5, {{1, 2, 3}, {4}, {5}})).blocks() ==
        blocks({{1, 4, 5}, {2, 4, 5}, {3, 4, 5}}));
  CHECK(expand(BlockParallelSchedule(4, {{1}, {2}, {4, 3}})).blocks() == blocks({{1, 2, 4}, {1, 2, 3}}));
}

TEST_CASE("block-sequential schedules embed unchanged") {
  CHECK(as_periodic(BlockSequentialSchedule(3, {{1, 2}, {3}})).blocks() == blocks({{1, 2}, {3}}));
  CHECK(as_periodic(BlockSequentialSchedule::parallel(3)).blocks() == blocks({{1, 2, 3}}));
  CHECK(as_periodic(BlockSequentialSchedule::sequential(3)).blocks() == blocks({{1}, {2}, {3}}));
}

TEST_CASE("period") {
  CHECK(period(BlockParallelSchedule(6, {{1}, {2, 3}, {4, 5, 6}})) == 6);
  CHECK(period(BlockSequentialSchedule::parallel(4)) == 1);
  CHECK(period(BlockParallelSchedule(4, {{1}, {2}, {4, 3}})) == 2);
  CHECK(period(PeriodicSchedule(2, {{1}, {2}, {1, 2}})) == 3);
}

TEST_CASE("classify") {
  SUBCASE("fair but neither block-sequential nor block-parallel") {
    // Labels shifted from {0,1,2} to {1,2,3}.
    const PeriodicSchedule ps(3, blocks({{1, 2}, {2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2}, {2, 3}}));
    const auto c = classify(ps);
    CHECK(c.fair);
    CHECK(c.strongly_ergodic);
    CHECK_FALSE(c.block_sequential);
    CHECK_FALSE(c.block_parallel);
  }
  SUBCASE("block-parallel, reconstructed") {
    const auto c = classify(PeriodicSchedule(5, blocks({{1, 4, 5}, {2, 4, 5}, {3, 4, 5}})));
    CHECK(c.fair);
    CHECK_FALSE(c.block_sequential);
    REQUIRE(c.block_parallel);
    CHECK(*c.as_block_parallel == BlockParallelSchedule(5, {{1, 2, 3}, {4}, {5}}));
  }
  SUBCASE("equal-cardinality ordered partition is in both families") {
    const auto c = classify(PeriodicSchedule(4, blocks({{1, 2}, {3, 4}})));
    CHECK(c.fair);
    CHECK(c.block_sequential);
    CHECK(c.block_parallel);
    CHECK(expand(*c.as_block_parallel).blocks() == blocks({{1, 2}, {3, 4}}));
  }
  SUBCASE("ordered partition with unequal parts is not block-parallel") {
    const auto c = classify(PeriodicSchedule(3, blocks({{1, 2}, {3}})));
    CHECK(c.block_sequential);
    CHECK_FALSE(c.block_parallel);
  }
  SUBCASE("unfair") {
    const auto c = classify(PeriodicSchedule(3, blocks({{1}, {2}})));
    CHECK_FALSE(c.fair);
    CHECK_FALSE(c.strongly_ergodic);
    CHECK_FALSE(c.block_sequential);
    CHECK_FALSE(c.block_parallel);
  }
  SUBCASE("repeating a block-parallel expansion changes the period") {
    CHECK_FALSE(classify(PeriodicSchedule(2, blocks({{1, 2}, {1, 2}}))).block_parallel);
  }
}

TEST_CASE("expand output structure") {
  Generator gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen.below(8);
    const auto bp = gen.block_parallel(n);
    const auto ps = expand(bp);
    CHECK(ps.is_fair());
    CHECK(ps.period() == bp.period());
    for (const auto& seq : bp.sequences()) {
      for (std::size_t pos = 0; pos < seq.size(); ++pos) {
        std::vector<std::size_t> times;
        for (std::size_t k = 0; k < ps.period(); ++k) {
          if (std::binary_search(ps.blocks()[k].begin(), ps.blocks()[k].end(), seq[pos])) times.push_back(k);
        }
        REQUIRE(times.size() == ps.period() / seq.size());
        for (std::size_t m = 0; m < times.size(); ++m) CHECK(times[m] == pos + m * seq.size());
      }
    }
  }
}

TEST_CASE("every expansion classifies as block-parallel") {
  Generator gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen.below(8);
    const auto bp = gen.block_parallel(n);
    const auto c = classify(expand(bp));
    REQUIRE(c.block_parallel);
    CHECK(expand(*c.as_block_parallel) == expand(bp));
  }
}

TEST_CASE("degenerate block-parallel schedules") {
  // All singleton sequences: the parallel schedule.
  CHECK(expand(BlockParallelSchedule(4, {{1}, {2}, {3}, {4}})) == as_periodic(BlockSequentialSchedule::parallel(4)));
  // One sequence holding every node: a sequential schedule.
  CHECK(expand(BlockParallelSchedule(3, {{2, 3, 1}})).blocks() == blocks({{2}, {3}, {1}}));
}

TEST_CASE("expand matches an independent unrolling, and classify matches brute-force membership") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<std::set<std::size_t>>> family;
    for (const auto& seqs : oracle::all_block_parallel(n)) {
      const auto unrolled = oracle::unroll(seqs);
      const auto ps = expand(BlockParallelSchedule(n, seqs));
      REQUIRE(ps.period() == unrolled.size());
      for (std::size_t k = 0; k < unrolled.size(); ++k) {
        CHECK(std::set<std::size_t>(ps.blocks()[k].begin(), ps.blocks()[k].end()) == unrolled[k]);
      }
      family.insert(unrolled);
    }
    for (const auto& member : family) {
      std::vector<Block> bl;
      for (const auto& s : member) bl.emplace_back(s.begin(), s.end());
      CHECK(classify(PeriodicSchedule(n, bl)).block_parallel);
    }
  }

  // Exhaustive over short periodic lists for n = 3 (p <= 6) and n = 4 (p <= 4).
  for (const auto [n, max_p] : {std::pair<std::size_t, std::size_t>{3, 6}, {4, 4}}) {
    std::set<std::vector<std::set<std::size_t>>> family;
    for (const auto& seqs : oracle::all_block_parallel(n)) family.insert(oracle::unroll(seqs));
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    std::size_t members = 0;
    for (std::size_t p = 1; p <= max_p; ++p) {
      std::vector<std::size_t> digits(p, 0);
      for (;;) {
        std::vector<std::set<std::size_t>> list;
        std::vector<Block> bl;
        for (const auto d : digits) {
          std::set<std::size_t> s;
          for (std::size_t i = 1; i <= n; ++i) {
            if ((d + 1) & (std::size_t{1} << (i - 1))) s.insert(i);
          }
          list.push_back(s);
          bl.emplace_back(s.begin(), s.end());
        }
        const bool expected = family.contains(list);
        members += expected ? 1 : 0;
        REQUIRE(classify(PeriodicSchedule(n, bl)).block_parallel == expected);
        std::size_t k = 0;
        while (k < p && ++digits[k] == subsets) digits[k++] = 0;
        if (k == p) break;
      }
    }
    CHECK(members == family.size());
  }
}

TEST_CASE("ordered partitions") {
  CHECK(ordered_partitions(1).size() == 1);
  CHECK(ordered_partitions(3).size() == 13);
  CHECK(ordered_partitions(4).size() == 75);
  const auto parts = ordered_partitions(3);
  std::set<std::string> distinct;
  for (const auto& p : parts) distinct.insert(to_string(p));
  CHECK(distinct.size() == 13);
  CHECK_THROWS_AS(ordered_partitions(8), BoundExceeded);
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(BlockSequentialSchedule(3, {{1, 2}, {1, 3}}), ScheduleError);
  CHECK_THROWS_AS(BlockSequentialSchedule(3, {{1, 2}}), ScheduleError);
  CHECK_THROWS_AS(BlockSequentialSchedule(3, {{1, 2}, {}}), ScheduleError);
  CHECK_THROWS_AS(BlockSequentialSchedule(3, {{1, 2}, {4}}), IndexError);
  CHECK_THROWS_AS(BlockParallelSchedule(3, {{1, 2}, {2, 3}}), ScheduleError);
  CHECK_THROWS_AS(BlockParallelSchedule(3, {{1, 2}}), ScheduleError);
  CHECK_THROWS_AS(BlockParallelSchedule(3, {{1, 2, 3}, {}}), ScheduleError);
  CHECK_THROWS_AS(PeriodicSchedule(3, {}), ScheduleError);
  CHECK_THROWS_AS(PeriodicSchedule(3, {{1}, {}}), ScheduleError);
  CHECK_THROWS_AS(PeriodicSchedule(3, {{1, 1}}), ScheduleError);
}

TEST_CASE("block-parallel canonical form sorts sequences by minimal node") {
  const BlockParallelSchedule a(6, {{4, 5, 6}, {3, 2}, {1}});
  const BlockParallelSchedule b(6, {{1}, {3, 2}, {4, 5, 6}});
  CHECK(a == b);
  CHECK(to_string(a) == "{(1),(3,2),(4,5,6)}");
}

TEST_CASE("text forms") {
  CHECK(to_string(BlockSequentialSchedule(3, {{1, 2}, {3}})) == "({1,2},{3})");
  CHECK(to_string(PeriodicSchedule(3, {{2, 1}, {3}})) == "[{1,2},{3}]");
}
