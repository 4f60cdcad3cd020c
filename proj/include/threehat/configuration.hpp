#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "threehat/seat.hpp"

namespace threehat {

// Largest entry accepted at construction. Entries below this bound keep
// every derived quantity (working configurations, declared sums, pairwise
// sums) representable in int64 without wrapping; larger entries are
// rejected up front.
inline constexpr std::int64_t kMaxEntry = std::numeric_limits<std::int64_t>::max() / 4;

struct NormalizationResult;

/// Ordered triple of positive integers in which exactly one entry is the
/// sum of the other two. Position i belongs to the seat with speaking
/// index i, so [3,10,7] means A=3, B=10, C=7.
///
/// The constructor validates; a Configuration that exists is valid.
/// Derived configurations (sigma images, working configurations) may
/// carry one entry up to twice kMaxEntry; they are built internally and
/// stay representable as long as the original entries obey the cap.
class Configuration {
 public:
  Configuration(std::int64_t a, std::int64_t b, std::int64_t c)
      : Configuration(a, b, c, kMaxEntry) {}

  std::int64_t entry(Seat s) const { return entries_[static_cast<int>(s)]; }
  std::int64_t operator[](Seat s) const { return entry(s); }
  const std::array<std::int64_t, 3>& entries() const { return entries_; }

  /// Seat holding the cue, i.e. whose entry is the sum of the other two.
  Seat sum_seat() const { return sum_seat_; }

  /// The sum entry; also the strict maximum of the triple.
  std::int64_t sum_value() const { return entry(sum_seat_); }

  /// True iff two entries are identical (the fixed points of sigma).
  bool is_base() const {
    return entries_[0] == entries_[1] || entries_[0] == entries_[2] ||
           entries_[1] == entries_[2];
  }

  friend bool operator==(const Configuration& lhs, const Configuration& rhs) {
    return lhs.entries_ == rhs.entries_;
  }
  friend auto operator<=>(const Configuration& lhs, const Configuration& rhs) {
    return lhs.entries_ <=> rhs.entries_;
  }

 private:
  friend Configuration sigma(const Configuration& s);
  friend Configuration working_configuration(const Configuration& s, Seat seat);
  friend NormalizationResult normalize(const Configuration& s);

  Configuration(std::int64_t a, std::int64_t b, std::int64_t c,
                std::int64_t cap)
      : entries_{a, b, c} {
    for (std::int64_t e : entries_) {
      if (e < 1) {
        throw std::invalid_argument("entries must be positive: " + triple_text());
      }
      if (e > cap) {
        throw std::invalid_argument(
            cap == kMaxEntry
                ? "entry exceeds supported maximum (2^61): " + triple_text()
                : "derived entry is not representable: " + triple_text());
      }
    }
    int sum_positions = 0;
    for (Seat s : all_seats) {
      const auto [x, y] = other_seats(s);
      // subtraction form cannot overflow even at the derived bound
      if (entry(s) - entry(x) == entry(y)) {
        ++sum_positions;
        sum_seat_ = s;
      }
    }
    if (sum_positions == 0) {
      throw std::invalid_argument("no entry is the sum of the other two: " +
                                  triple_text());
    }
    if (sum_positions > 1) {
      // impossible for positive entries, checked regardless
      throw std::invalid_argument(
          "more than one entry equals the sum of the other two: " + triple_text());
    }
  }

  static Configuration derived(std::int64_t a, std::int64_t b, std::int64_t c) {
    return Configuration(a, b, c, 2 * kMaxEntry);
  }

  std::string triple_text() const {
    std::ostringstream os;
    os << '[' << entries_[0] << ',' << entries_[1] << ',' << entries_[2] << ']';
    return os.str();
  }

  std::array<std::int64_t, 3> entries_;
  Seat sum_seat_ = Seat::A;
};

inline std::string to_string(const Configuration& c) {
  std::ostringstream os;
  os << '[' << c.entry(Seat::A) << ',' << c.entry(Seat::B) << ','
     << c.entry(Seat::C) << ']';
  return os.str();
}

/// One reduction step: the sum entry (the strict maximum) is replaced by
/// the absolute difference of the other two entries. Base configurations
/// map to themselves.
inline Configuration sigma(const Configuration& s) {
  if (s.is_base()) return s;
  const Seat p = s.sum_seat();
  const auto [x, y] = other_seats(p);
  const std::int64_t d = s[x] > s[y] ? s[x] - s[y] : s[y] - s[x];
  std::array<std::int64_t, 3> e = s.entries();
  e[static_cast<int>(p)] = d;
  return Configuration::derived(e[0], e[1], e[2]);
}

/// What the triple looks like from `seat`'s perspective if their own number
/// were the sum of the two they see: the seat's entry is replaced by that sum.
/// When `seat` already holds the cue, this is `s` itself.
inline Configuration working_configuration(const Configuration& s, Seat seat) {
  const auto [x, y] = other_seats(seat);
  std::array<std::int64_t, 3> e = s.entries();
  e[static_cast<int>(seat)] = s[x] + s[y];
  return Configuration::derived(e[0], e[1], e[2]);
}

/// Visit every valid configuration with max entry <= bound, in a fixed
/// deterministic order: for each pair (x, y) ascending, the three seat
/// placements of the triple {x, y, x+y}.
template <class Fn>
void for_each_configuration(std::int64_t bound, Fn&& fn) {
  for (std::int64_t x = 1; x < bound; ++x) {
    for (std::int64_t y = 1; x + y <= bound; ++y) {
      fn(Configuration(x + y, x, y));
      fn(Configuration(x, x + y, y));
      fn(Configuration(x, y, x + y));
    }
  }
}

}  // namespace threehat
