#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "threehat/aux_puzzles.hpp"
#include "threehat/chain.hpp"
#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/inverse.hpp"
#include "threehat/verify.hpp"

// Plain-text rendering for the CLI. All output here is deterministic:
// identical inputs produce byte-identical text.

namespace threehat {

inline std::string to_string(const ConfigurationChain& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) os << ' ';
    os << to_string(chain[i]);
  }
  return os.str();
}

namespace detail {

inline int digits(std::int64_t n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

inline std::string padded_number(std::int64_t n, int width) {
  std::ostringstream os;
  for (int i = digits(n); i < width; ++i) os << ' ';
  os << n;
  return os.str();
}

inline std::string action_text(const TurnEvent& e) {
  if (e.action == Action::pass) return "pass";
  std::ostringstream os;
  os << "declares " << e.value;
  return os.str();
}

}  // namespace detail

/// One line per turn: "turn 4  A  declares 50".
inline std::string render_transcript(const Transcript& t) {
  const int width = detail::digits(t.final_event().turn);
  std::ostringstream os;
  for (const TurnEvent& e : t.events) {
    os << "turn " << detail::padded_number(e.turn, width) << "  "
       << seat_letter(e.seat) << "  " << detail::action_text(e) << '\n';
  }
  return os.str();
}

/// The game table: per turn the acting player (cue holders marked with
/// a '*'), their action, and their remaining chain.
inline std::string render_trace(const GameTrace& trace) {
  const int turn_width = detail::digits(trace.rows.back().turn);
  std::size_t action_width = 0;
  for (const TraceRow& row : trace.rows) {
    action_width = std::max(action_width, detail::action_text(row.event).size());
  }

  std::ostringstream os;
  for (const TraceRow& row : trace.rows) {
    std::string action = detail::action_text(row.event);
    action.append(action_width - action.size(), ' ');
    os << "turn " << detail::padded_number(row.turn, turn_width) << "  "
       << seat_letter(row.seat) << (row.has_cue ? '*' : ' ') << "  " << action
       << "  " << to_string(row.remaining) << '\n';
  }
  return os.str();
}

/// One line per configuration, entries space-separated: "50 20 30".
inline std::string render_solutions(const SolutionSet& solutions) {
  std::ostringstream os;
  for (const Configuration& c : solutions.configurations) {
    os << c.entry(Seat::A) << ' ' << c.entry(Seat::B) << ' ' << c.entry(Seat::C)
       << '\n';
  }
  return os.str();
}

inline std::string render_two_hat(const TwoHatOutcome& outcome) {
  std::ostringstream os;
  os << (outcome.declarer == TwoHatPlayer::p1 ? "P1" : "P2") << " declares "
     << outcome.value << " on turn " << outcome.turn << '\n';
  return os.str();
}

inline std::string render_color_hat(const ColorHatResult& result) {
  std::ostringstream os;
  os << "round " << result.ending_round << ": "
     << (result.declarers.size() == 1 ? "player" : "players");
  for (std::size_t i = 0; i < result.declarers.size(); ++i) {
    os << (i ? ", " : " ") << result.declarers[i];
  }
  os << (result.declarers.size() == 1 ? " declares red" : " declare red") << '\n';
  return os.str();
}

inline std::string render_verify(const VerifyReport& report) {
  std::size_t name_width = 0;
  for (const CheckResult& c : report.checks) {
    name_width = std::max(name_width, c.name.size());
  }
  std::ostringstream os;
  for (const CheckResult& c : report.checks) {
    std::string name = c.name;
    name.append(name_width - name.size(), ' ');
    os << name << "  " << (c.passed() ? "pass" : "FAIL") << "  cases="
       << c.cases << " violations=" << c.violations;
    if (!c.passed()) os << "  first: " << c.first_violation;
    os << '\n';
  }
  os << (report.all_passed() ? "verification passed" : "verification FAILED")
     << " (max entry " << report.max_entry << ")\n";
  return os.str();
}

}  // namespace threehat
