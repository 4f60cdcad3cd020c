#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/seat.hpp"

namespace threehat {

/// The inverse problem: who declared, on which turn, and optionally what
/// number. When the number is not given, max_sum bounds the search and is
/// required.
struct PuzzleQuery {
  Seat declarer = Seat::A;
  std::int64_t turns = 1;
  std::optional<std::int64_t> value;
  std::optional<std::int64_t> max_sum;
};

/// All configurations reproducing a query, sorted lexicographically by
/// entries. An empty set is a valid answer, not an error.
struct SolutionSet {
  std::vector<Configuration> configurations;

  bool empty() const { return configurations.empty(); }
};

namespace detail {

// The declarer's seat gets the declared value; the two remaining seats
// get the split parts in seating order.
inline Configuration place_split(Seat declarer, std::int64_t value,
                                 std::int64_t x, std::int64_t y) {
  const auto [p, q] = other_seats(declarer);
  std::array<std::int64_t, 3> e{};
  e[static_cast<int>(declarer)] = value;
  e[static_cast<int>(p)] = x;
  e[static_cast<int>(q)] = y;
  return Configuration(e[0], e[1], e[2]);
}

}  // namespace detail

/// Enumerate the configurations whose simulated game matches the query.
///
/// A declared value v pins the declarer's entry (the declarer always
/// holds the sum), so only the v-1 splits x + y = v need checking. With
/// no value given, candidate values run from 2 to max_sum.
inline SolutionSet solve(const PuzzleQuery& q) {
  if (q.turns < 1) {
    throw std::invalid_argument("turn count must be at least 1");
  }
  if (q.value && *q.value < 2) {
    throw std::invalid_argument("declared value must be at least 2");
  }
  if (!q.value && !q.max_sum) {
    throw std::invalid_argument("a query without a declared value needs max_sum");
  }
  if (q.max_sum && *q.max_sum < 1) {
    throw std::invalid_argument("max_sum must be positive");
  }

  SolutionSet out;
  if (seat_of_turn(q.turns) != q.declarer) {
    return out;  // the final turn does not belong to the declarer
  }

  const auto try_value = [&](std::int64_t v) {
    for (std::int64_t x = 1; x < v; ++x) {
      const Configuration candidate = detail::place_split(q.declarer, v, x, v - x);
      const Outcome outcome = outcome_of(simulate(candidate));
      if (outcome.turn == q.turns && outcome.declarer == q.declarer &&
          (!q.value || outcome.value == *q.value)) {
        out.configurations.push_back(candidate);
      }
    }
  };

  if (q.value) {
    try_value(*q.value);
  } else {
    for (std::int64_t v = 2; v <= *q.max_sum; ++v) try_value(v);
  }

  std::sort(out.configurations.begin(), out.configurations.end());
  return out;
}

/// Parsed pass/declare pattern, e.g. "P,P,P,D=50": some passes followed
/// by exactly one declaration, whose value may be left out.
struct TranscriptPattern {
  std::int64_t turns = 1;               // total events; the declaration is last
  std::optional<std::int64_t> value;

  Seat declarer() const { return seat_of_turn(turns); }
};

/// Parse the transcript grammar:
///   transcript := event ("," event)* ;  event := "P" | "D" ["=" integer]
/// Whitespace around commas is ignored; integers are base-10, unsigned;
/// exactly one "D", in last position; a spelled-out value must be >= 2.
inline TranscriptPattern parse_transcript(std::string_view text) {
  constexpr std::string_view ws = " \t";
  const auto trim = [&](std::string_view v) {
    const auto b = v.find_first_not_of(ws);
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = v.find_last_not_of(ws);
    return v.substr(b, e - b + 1);
  };

  TranscriptPattern pattern;
  std::int64_t count = 0;
  bool saw_declare = false;

  std::string_view rest = text;
  bool more = !trim(rest).empty();
  if (!more) throw std::invalid_argument("empty transcript");
  while (more) {
    const auto comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    more = comma != std::string_view::npos;
    rest = more ? rest.substr(comma + 1) : std::string_view{};

    ++count;
    if (saw_declare) {
      if (!token.empty() && token.front() == 'D') {
        throw std::invalid_argument("more than one declaration");
      }
      throw std::invalid_argument("declaration must be the last event");
    }
    if (token == "P") {
      continue;
    }
    if (token.empty() || token.front() != 'D') {
      throw std::invalid_argument("unknown event '" + std::string(token) +
                                  "' (expected P or D[=value])");
    }
    saw_declare = true;
    if (token == "D") continue;
    if (token.size() < 2 || token[1] != '=') {
      throw std::invalid_argument("unknown event '" + std::string(token) +
                                  "' (expected P or D[=value])");
    }
    const std::string_view digits = token.substr(2);
    std::int64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || digits.front() == '-' || digits.front() == '+' ||
        ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("declared value is not an unsigned integer: '" +
                                  std::string(digits) + "'");
    }
    if (v < 2) {
      throw std::invalid_argument("declared value must be at least 2");
    }
    pattern.value = v;
  }

  if (!saw_declare) {
    throw std::invalid_argument("transcript has no declaration");
  }
  pattern.turns = count;
  return pattern;
}

/// Solve directly from a parsed transcript: the declarer is the seat of
/// the final turn and the turn count is the event count.
inline SolutionSet solve_transcript(const TranscriptPattern& pattern,
                                    std::optional<std::int64_t> max_sum = std::nullopt) {
  return solve({pattern.declarer(), pattern.turns, pattern.value, max_sum});
}

}  // namespace threehat
