#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "threehat/aux_puzzles.hpp"

using namespace threehat;

TEST_CASE("two hat: construction") {
  REQUIRE_NOTHROW(TwoHatInstance(2, 1));
  REQUIRE_NOTHROW(TwoHatInstance(1, 2));
  REQUIRE_THROWS_AS(TwoHatInstance(3, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(TwoHatInstance(4, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(TwoHatInstance(0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(TwoHatInstance(1, 0), std::invalid_argument);
}

TEST_CASE("two hat: examples") {
  SECTION("first player holds 2, sees 1, declares at once") {
    const TwoHatOutcome o = two_hat_simulate(TwoHatInstance(2, 1));
    REQUIRE(o.turn == 1);
    REQUIRE(o.declarer == TwoHatPlayer::p1);
    REQUIRE(o.value == 2);
  }
  SECTION("second player holds 2, sees 1, declares on turn two") {
    const TwoHatOutcome o = two_hat_simulate(TwoHatInstance(1, 2));
    REQUIRE(o.turn == 2);
    REQUIRE(o.declarer == TwoHatPlayer::p2);
    REQUIRE(o.value == 2);
  }
  SECTION("holder of 5 sees 4 and declares on turn seven") {
    const TwoHatOutcome o = two_hat_simulate(TwoHatInstance(5, 4));
    REQUIRE(o.turn == 7);
    REQUIRE(o.declarer == TwoHatPlayer::p1);
    REQUIRE(o.value == 5);
  }
}

TEST_CASE("two hat: the move order matters only for the turn number") {
  const TwoHatInstance inst(4, 5);
  const TwoHatOutcome first = two_hat_simulate(inst, TwoHatPlayer::p2);
  REQUIRE(first.declarer == TwoHatPlayer::p2);
  REQUIRE(first.value == 5);
  REQUIRE(first.turn == 7);
  const TwoHatOutcome second = two_hat_simulate(inst, TwoHatPlayer::p1);
  REQUIRE(second.declarer == TwoHatPlayer::p2);
  REQUIRE(second.value == 5);
  REQUIRE(second.turn == 8);
}

TEST_CASE("two hat: closed form for every consecutive pair up to 500") {
  // the holder of the larger number m declares m on their (m-1)-th own turn
  for (std::int64_t m = 2; m <= 500; ++m) {
    for (const bool larger_first : {true, false}) {
      const TwoHatInstance inst = larger_first ? TwoHatInstance(m, m - 1)
                                               : TwoHatInstance(m - 1, m);
      const TwoHatPlayer holder =
          larger_first ? TwoHatPlayer::p1 : TwoHatPlayer::p2;
      for (const TwoHatPlayer opener : {TwoHatPlayer::p1, TwoHatPlayer::p2}) {
        const TwoHatOutcome o = two_hat_simulate(inst, opener);
        REQUIRE(o.declarer == holder);
        REQUIRE(o.value == m);
        const std::int64_t expected =
            opener == holder ? 2 * (m - 1) - 1 : 2 * (m - 1);
        REQUIRE(o.turn == expected);
      }
    }
  }
}

TEST_CASE("color hat: construction") {
  REQUIRE_NOTHROW(ColorHatInstance({HatColor::red}));
  REQUIRE_THROWS_AS(ColorHatInstance({}), std::invalid_argument);
  REQUIRE_THROWS_AS(ColorHatInstance({HatColor::blue, HatColor::blue}),
                    std::invalid_argument);
}

TEST_CASE("color hat: examples") {
  SECTION("a single red hat is declared in round one") {
    const ColorHatResult r = color_hat_simulate(
        ColorHatInstance({HatColor::red, HatColor::blue, HatColor::blue}));
    REQUIRE(r.ending_round == 1);
    REQUIRE(r.declarers == std::vector<std::size_t>{1});
  }
  SECTION("three red hats are declared together in round three") {
    const ColorHatResult r = color_hat_simulate(
        ColorHatInstance({HatColor::red, HatColor::red, HatColor::red}));
    REQUIRE(r.ending_round == 3);
    REQUIRE(r.declarers == std::vector<std::size_t>{1, 2, 3});
  }
  SECTION("declared color is always red") {
    const ColorHatResult r = color_hat_simulate(
        ColorHatInstance({HatColor::blue, HatColor::red, HatColor::blue,
                          HatColor::red}));
    REQUIRE(r.declared_color == HatColor::red);
    REQUIRE(r.ending_round == 2);
    REQUIRE(r.declarers == std::vector<std::size_t>{2, 4});
  }
}

TEST_CASE("color hat: exhaustive over all assignments of up to 12 players") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<HatColor> hats(n, HatColor::blue);
      std::vector<std::size_t> reds;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          hats[i] = HatColor::red;
          reds.push_back(i + 1);
        }
      }
      const ColorHatResult r = color_hat_simulate(ColorHatInstance(hats));
      REQUIRE(r.ending_round == static_cast<std::int64_t>(reds.size()));
      REQUIRE(r.declarers == reds);
      REQUIRE(r.declared_color == HatColor::red);
    }
  }
}
