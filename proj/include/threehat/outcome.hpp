#pragma once

#include <cstdint>

#include "threehat/seat.hpp"

namespace threehat {

/// How a game ended: on which turn, by whom, declaring what.
struct Outcome {
  std::int64_t turn = 0;
  Seat declarer = Seat::A;
  std::int64_t value = 0;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

}  // namespace threehat
