#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "threehat/threehat.hpp"

// Test-side oracles. Everything here is deliberately written from the
// game rules directly, independent of the engine's shared-chain
// bookkeeping, so the two can disagree when one is wrong.

namespace testutil {

inline threehat::Configuration cfg(std::int64_t a, std::int64_t b, std::int64_t c) {
  return threehat::Configuration(a, b, c);
}

/// Brute-force enumeration of valid configurations: scans the whole
/// [1,bound]^3 cube and keeps triples where exactly one entry is the sum
/// of the other two. Quadratically slower than the library's enumerator,
/// usable for small bounds.
template <class Fn>
void enumerate_cube(std::int64_t bound, Fn&& fn) {
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 1; b <= bound; ++b) {
      for (std::int64_t c = 1; c <= bound; ++c) {
        const int sums = (a == b + c ? 1 : 0) + (b == a + c ? 1 : 0) +
                         (c == a + b ? 1 : 0);
        if (sums == 1) fn(threehat::Configuration(a, b, c));
      }
    }
  }
}

/// Reference playthrough keeping three full chains, one per player, and
/// crossing the shared head from all of them whenever its cue holder
/// passes. Also records whether the chains stayed coherent: equal heads
/// every turn, and no player more than one configuration beyond the
/// longest common prefix.
struct ReferenceGame {
  threehat::Transcript transcript;
  bool heads_always_equal = true;
  bool tails_at_most_one = true;
};

inline ReferenceGame reference_simulate(const threehat::Configuration& s) {
  using namespace threehat;
  std::array<ConfigurationChain, 3> chains;
  for (Seat q : all_seats) {
    chains[static_cast<int>(q)] = build_chain(working_configuration(s, q));
  }

  ReferenceGame game;
  for (std::int64_t t = 1;; ++t) {
    const Seat actor = seat_of_turn(t);
    ConfigurationChain& own = chains[static_cast<int>(actor)];

    if (!(chains[0].front() == chains[1].front()) ||
        !(chains[0].front() == chains[2].front())) {
      game.heads_always_equal = false;
    }
    std::size_t common = 0;
    const std::size_t shortest =
        std::min({chains[0].size(), chains[1].size(), chains[2].size()});
    while (common < shortest && chains[0][common] == chains[1][common] &&
           chains[0][common] == chains[2][common]) {
      ++common;
    }
    for (const ConfigurationChain& chain : chains) {
      if (chain.size() > common + 1) game.tails_at_most_one = false;
    }

    if (own.size() == 1) {
      const auto [x, y] = other_seats(actor);
      game.transcript.events.push_back({t, actor, Action::declare, s[x] + s[y]});
      return game;
    }
    game.transcript.events.push_back({t, actor, Action::pass, 0});
    if (own.front().sum_seat() == actor) {
      for (ConfigurationChain& chain : chains) chain.erase(chain.begin());
    }
  }
}

/// Ending turn of the naive protocol, from the schedule formula alone:
/// seat q with larger visible number n declares on global turn
/// 3(n-1) + index(q); the game ends at the earliest such turn.
inline std::int64_t naive_end_turn_formula(const threehat::Configuration& s) {
  using namespace threehat;
  std::int64_t best = 0;
  for (Seat q : all_seats) {
    const auto [x, y] = other_seats(q);
    const std::int64_t n = std::max(s[x], s[y]);
    const std::int64_t t = 3 * (n - 1) + seat_index(q);
    if (best == 0 || t < best) best = t;
  }
  return best;
}

}  // namespace testutil
