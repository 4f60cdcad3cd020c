#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "threehat/epistemic.hpp"
#include "threehat/threehat.hpp"

using namespace threehat;
using testutil::cfg;

TEST_CASE("end_turn on base configurations") {
  REQUIRE(end_turn(cfg(2, 1, 1)) == Outcome{1, Seat::A, 2});
  REQUIRE(end_turn(cfg(1, 2, 1)) == Outcome{2, Seat::B, 2});
  REQUIRE(end_turn(cfg(1, 1, 2)) == Outcome{3, Seat::C, 2});
}

TEST_CASE("end_turn on longer chains") {
  REQUIRE(end_turn(cfg(50, 20, 30)) == Outcome{4, Seat::A, 50});
  REQUIRE(end_turn(cfg(3, 10, 7)) == Outcome{8, Seat::B, 10});
  REQUIRE(end_turn(cfg(60, 36, 24)) == Outcome{7, Seat::A, 60});
  REQUIRE(end_turn(cfg(44, 16, 60)) == Outcome{9, Seat::C, 60});
}

TEST_CASE("ending turns accumulate along the chain") {
  // each link adds between one and three turns
  std::int64_t violations = 0;
  for_each_configuration(200, [&](const Configuration& s) {
    const ConfigurationChain chain = build_chain(s);
    std::int64_t prev = 0;
    for (const Configuration& link : chain) {
      const std::int64_t t = end_turn(link).turn;
      const std::int64_t gap = t - prev;
      if (gap < 1 || gap > 3) ++violations;
      prev = t;
    }
  });
  REQUIRE(violations == 0);
}

TEST_CASE("ending turn is congruent to the declarer's seat index") {
  std::int64_t violations = 0;
  for_each_configuration(200, [&](const Configuration& s) {
    const Outcome o = end_turn(s);
    if ((o.turn - seat_index(o.declarer)) % 3 != 0) ++violations;
    if (o.turn < seat_index(o.declarer)) ++violations;
  });
  REQUIRE(violations == 0);
}

TEST_CASE("both engines agree configuration by configuration") {
  std::int64_t violations = 0;
  for_each_configuration(150, [&](const Configuration& s) {
    if (!(end_turn(s) == outcome_of(simulate(s)))) ++violations;
  });
  REQUIRE(violations == 0);
}

TEST_CASE("check_equivalence at the smallest bound") {
  const EquivalenceReport report = check_equivalence(2);
  REQUIRE(report.bound == 2);
  REQUIRE(report.configurations_checked == 3);
  REQUIRE(report.mismatches.empty());
  REQUIRE(report.agree());
}

TEST_CASE("check_equivalence at bound 60") {
  const EquivalenceReport report = check_equivalence(60);
  // 3 orderings of each unordered pair {x, y} with x + y <= 60
  REQUIRE(report.configurations_checked == 5310);
  REQUIRE(report.agree());
}

TEST_CASE("check_equivalence rejects bounds below 2") {
  REQUIRE_THROWS_AS(check_equivalence(1), std::invalid_argument);
  REQUIRE_THROWS_AS(check_equivalence(0), std::invalid_argument);
}
