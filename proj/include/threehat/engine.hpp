#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "threehat/chain.hpp"
#include "threehat/configuration.hpp"
#include "threehat/outcome.hpp"
#include "threehat/seat.hpp"

namespace threehat {

enum class Action : std::uint8_t { pass, declare };

struct TurnEvent {
  std::int64_t turn = 0;
  Seat seat = Seat::A;
  Action action = Action::pass;
  std::int64_t value = 0;  // declared number; meaningful only when declaring
  friend bool operator==(const TurnEvent&, const TurnEvent&) = default;
};

/// Full record of one game: consecutive turns 1, 2, 3, ... with exactly
/// one declaration, which is last.
struct Transcript {
  std::vector<TurnEvent> events;

  std::int64_t turns() const { return static_cast<std::int64_t>(events.size()); }
  const TurnEvent& final_event() const { return events.back(); }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

inline Outcome outcome_of(const Transcript& t) {
  const TurnEvent& last = t.final_event();
  return {last.turn, last.seat, last.value};
}

/// One row of a game trace: the acting player's view at the start of their
/// turn, whether they held the cue of the shared head configuration, and
/// whether the head was crossed out once the turn resolved.
struct TraceRow {
  std::int64_t turn = 0;
  Seat seat = Seat::A;
  ConfigurationChain remaining;  // the acting player's chain, head first
  bool has_cue = false;
  bool crossed_after = false;
  TurnEvent event;
};

struct GameTrace {
  std::vector<TraceRow> rows;
};

inline Transcript transcript_of(const GameTrace& trace) {
  Transcript t;
  t.events.reserve(trace.rows.size());
  for (const TraceRow& row : trace.rows) t.events.push_back(row.event);
  return t;
}

namespace detail {

// Chain Reduction Strategy, one game.
//
// Every player's chain is the chain of their working configuration. The
// cue holder's chain is exactly build_chain(s); the other two chains
// extend it by one private final element. The simulation therefore keeps
// a single shared chain plus per-seat tails, with a cursor over crossed
// heads; a player's remaining chain is shared[crossed..] plus their tail.
//
// Per turn: a player whose remaining chain holds a single configuration
// declares the sum of the two numbers they see, ending the game; anyone
// else passes. When the player holding the cue of the current head
// passes, the head is crossed out for everyone. Heads are never crossed
// on a declaration turn.
//
// The observer sees every turn before it is committed to the transcript.
struct SimulationStep {
  std::int64_t turn;
  Seat actor;
  const ConfigurationChain& shared;
  const std::array<std::optional<Configuration>, 3>& tails;
  std::size_t crossed;   // heads removed so far
  bool actor_has_cue;    // actor holds the cue of shared[crossed]
  bool crossed_after;    // this turn crosses the head out
  const TurnEvent& event;
};

template <class Observer>
Transcript run_chain_reduction(const Configuration& s, Observer&& observe) {
  const Seat holder = s.sum_seat();
  const ConfigurationChain shared = build_chain(s);
  std::array<std::optional<Configuration>, 3> tails;
  for (Seat q : all_seats) {
    if (q != holder) {
      tails[static_cast<int>(q)] = working_configuration(s, q);
    }
  }

  Transcript out;
  std::size_t crossed = 0;
  for (std::int64_t t = 1;; ++t) {
    const Seat actor = seat_of_turn(t);
    const bool has_tail = tails[static_cast<int>(actor)].has_value();
    const std::size_t remaining = shared.size() - crossed + (has_tail ? 1 : 0);
    const bool cue = shared[crossed].sum_seat() == actor;

    if (remaining == 1) {
      const auto [x, y] = other_seats(actor);
      const TurnEvent ev{t, actor, Action::declare, s[x] + s[y]};
      observe(SimulationStep{t, actor, shared, tails, crossed, cue, false, ev});
      out.events.push_back(ev);
      return out;
    }

    const TurnEvent ev{t, actor, Action::pass, 0};
    observe(SimulationStep{t, actor, shared, tails, crossed, cue, cue, ev});
    out.events.push_back(ev);
    if (cue) ++crossed;
  }
}

}  // namespace detail

/// Play one game under the Chain Reduction Strategy.
inline Transcript simulate(const Configuration& s) {
  return detail::run_chain_reduction(s, [](const detail::SimulationStep&) {});
}

/// Number of turns the Chain Reduction Strategy needs, declaration included.
inline std::int64_t turn_count(const Configuration& s) {
  return simulate(s).turns();
}

/// Same game as simulate(), with a per-turn snapshot of the acting
/// player's remaining chain and cue status.
inline GameTrace full_trace(const Configuration& s) {
  GameTrace trace;
  detail::run_chain_reduction(s, [&](const detail::SimulationStep& step) {
    TraceRow row;
    row.turn = step.turn;
    row.seat = step.actor;
    row.remaining.assign(step.shared.begin() + static_cast<std::ptrdiff_t>(step.crossed),
                         step.shared.end());
    if (const auto& tail = step.tails[static_cast<int>(step.actor)]) {
      row.remaining.push_back(*tail);
    }
    row.has_cue = step.actor_has_cue;
    row.crossed_after = step.crossed_after;
    row.event = step.event;
    trace.rows.push_back(std::move(row));
  });
  return trace;
}

/// The slow fallback protocol: each player notes the larger of the two
/// numbers they see, passes on their first n-1 turns, and declares the sum
/// of the two visible numbers on their n-th turn. The game ends at the
/// first declaration.
inline Transcript simulate_naive(const Configuration& s) {
  std::int64_t end_turn = 0;
  Seat declarer = Seat::A;
  for (Seat q : all_seats) {
    const auto [x, y] = other_seats(q);
    const std::int64_t n = s[x] > s[y] ? s[x] : s[y];
    const std::int64_t t = 3 * (n - 1) + seat_index(q);  // q's n-th own turn
    if (end_turn == 0 || t < end_turn) {
      end_turn = t;
      declarer = q;
    }
  }

  Transcript out;
  out.events.reserve(static_cast<std::size_t>(end_turn));
  for (std::int64_t t = 1; t < end_turn; ++t) {
    out.events.push_back({t, seat_of_turn(t), Action::pass, 0});
  }
  const auto [x, y] = other_seats(declarer);
  out.events.push_back({end_turn, declarer, Action::declare, s[x] + s[y]});
  return out;
}

}  // namespace threehat
