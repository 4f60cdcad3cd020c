#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace threehat {

// Seating positions in speaking order. Turn t (1-based) belongs to seat
// ((t-1) mod 3): A, B, C, A, B, C, ...
enum class Seat : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Seat, 3> all_seats{Seat::A, Seat::B, Seat::C};

/// 1-based speaking index: A=1, B=2, C=3.
constexpr int seat_index(Seat s) { return static_cast<int>(s) + 1; }

constexpr char seat_letter(Seat s) {
  return static_cast<char>('A' + static_cast<int>(s));
}

constexpr std::optional<Seat> seat_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Seat::A;
    case 'B': case 'b': return Seat::B;
    case 'C': case 'c': return Seat::C;
    default: return std::nullopt;
  }
}

/// The two seats other than `s`, in seating order.
constexpr std::array<Seat, 2> other_seats(Seat s) {
  switch (s) {
    case Seat::A: return {Seat::B, Seat::C};
    case Seat::B: return {Seat::A, Seat::C};
    default: return {Seat::A, Seat::B};
  }
}

/// Seat acting on global turn `turn` (turn >= 1).
constexpr Seat seat_of_turn(std::int64_t turn) {
  return static_cast<Seat>((turn - 1) % 3);
}

/// Smallest turn strictly after `after` that belongs to seat `s`
/// (`after` may be 0, meaning the seat's first turn).
constexpr std::int64_t next_turn_of(Seat s, std::int64_t after) {
  for (std::int64_t t = after + 1;; ++t) {
    if (seat_of_turn(t) == s) return t;
  }
}

}  // namespace threehat
