#pragma once

#include <string>

#include <json.hpp>

#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/inverse.hpp"
#include "threehat/verify.hpp"

// Machine-readable output. The schemas are documented in the README;
// parsing an emitted object reconstructs the same values (tested).

namespace threehat {

inline nlohmann::json config_json(const Configuration& c) {
  return nlohmann::json::array(
      {c.entry(Seat::A), c.entry(Seat::B), c.entry(Seat::C)});
}

inline Configuration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("configuration JSON must be a 3-element array");
  }
  return Configuration(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                       j[2].get<std::int64_t>());
}

inline nlohmann::json event_json(const TurnEvent& e) {
  nlohmann::json j{{"turn", e.turn},
                   {"seat", std::string(1, seat_letter(e.seat))},
                   {"action", e.action == Action::pass ? "pass" : "declare"}};
  if (e.action == Action::declare) j["value"] = e.value;
  return j;
}

inline TurnEvent event_from_json(const nlohmann::json& j) {
  TurnEvent e;
  e.turn = j.at("turn").get<std::int64_t>();
  const std::string seat = j.at("seat").get<std::string>();
  const auto parsed = seat.size() == 1 ? seat_from_letter(seat[0]) : std::nullopt;
  if (!parsed) throw std::invalid_argument("bad seat in event JSON: " + seat);
  e.seat = *parsed;
  const std::string action = j.at("action").get<std::string>();
  if (action == "pass") {
    e.action = Action::pass;
  } else if (action == "declare") {
    e.action = Action::declare;
    e.value = j.at("value").get<std::int64_t>();
  } else {
    throw std::invalid_argument("bad action in event JSON: " + action);
  }
  return e;
}

/// {"input": [a,b,c], "events": [...], "declarer": "B", "turn": 8, "value": 10}
inline nlohmann::json transcript_json(const Configuration& input,
                                      const Transcript& t) {
  nlohmann::json events = nlohmann::json::array();
  for (const TurnEvent& e : t.events) events.push_back(event_json(e));
  const TurnEvent& last = t.final_event();
  return nlohmann::json{{"input", config_json(input)},
                        {"events", std::move(events)},
                        {"declarer", std::string(1, seat_letter(last.seat))},
                        {"turn", last.turn},
                        {"value", last.value}};
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
  Transcript t;
  for (const nlohmann::json& e : j.at("events")) {
    t.events.push_back(event_from_json(e));
  }
  return t;
}

/// transcript_json() plus a "trace" array with one row per turn.
inline nlohmann::json trace_json(const Configuration& input,
                                 const GameTrace& trace) {
  nlohmann::json j = transcript_json(input, transcript_of(trace));
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& row : trace.rows) {
    nlohmann::json remaining = nlohmann::json::array();
    for (const Configuration& c : row.remaining) remaining.push_back(config_json(c));
    nlohmann::json r{{"turn", row.turn},
                     {"seat", std::string(1, seat_letter(row.seat))},
                     {"cue", row.has_cue},
                     {"crossed", row.crossed_after},
                     {"action", row.event.action == Action::pass ? "pass" : "declare"},
                     {"remaining", std::move(remaining)}};
    if (row.event.action == Action::declare) r["value"] = row.event.value;
    rows.push_back(std::move(r));
  }
  j["trace"] = std::move(rows);
  return j;
}

/// A solution set is a plain array of 3-element integer arrays.
inline nlohmann::json solutions_json(const SolutionSet& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const Configuration& c : s.configurations) j.push_back(config_json(c));
  return j;
}

inline nlohmann::json verify_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json j{{"name", c.name},
                     {"passed", c.passed()},
                     {"cases", c.cases},
                     {"violations", c.violations}};
    if (!c.passed()) j["first_violation"] = c.first_violation;
    checks.push_back(std::move(j));
  }
  return nlohmann::json{{"max_entry", report.max_entry},
                        {"passed", report.all_passed()},
                        {"checks", std::move(checks)}};
}

}  // namespace threehat
