#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace threehat {

// ---------------------------------------------------------------------------
// Two hats, consecutive positive integers, alternating turns.
// ---------------------------------------------------------------------------

enum class TwoHatPlayer : std::uint8_t { p1, p2 };

constexpr TwoHatPlayer two_hat_other(TwoHatPlayer p) {
  return p == TwoHatPlayer::p1 ? TwoHatPlayer::p2 : TwoHatPlayer::p1;
}

class TwoHatInstance {
 public:
  TwoHatInstance(std::int64_t p1, std::int64_t p2) : p1_(p1), p2_(p2) {
    if (p1 < 1 || p2 < 1) {
      throw std::invalid_argument("two-hat numbers must be positive");
    }
    if (p1 - p2 != 1 && p2 - p1 != 1) {
      throw std::invalid_argument("two-hat numbers must be consecutive");
    }
  }

  std::int64_t p1() const { return p1_; }
  std::int64_t p2() const { return p2_; }
  std::int64_t number_of(TwoHatPlayer p) const {
    return p == TwoHatPlayer::p1 ? p1_ : p2_;
  }

 private:
  std::int64_t p1_, p2_;
};

struct TwoHatOutcome {
  std::int64_t turn = 0;  // global turn, 1-based
  TwoHatPlayer declarer = TwoHatPlayer::p1;
  std::int64_t value = 0;
  friend bool operator==(const TwoHatOutcome&, const TwoHatOutcome&) = default;
};

/// Each player sees the other's number n and declares n+1 on their own n-th
/// turn; the game ends at the first declaration. The turn order is not
/// forced by the rules, so the first mover is a parameter.
inline TwoHatOutcome two_hat_simulate(const TwoHatInstance& inst,
                                      TwoHatPlayer first = TwoHatPlayer::p1) {
  for (std::int64_t t = 1;; ++t) {
    const bool odd = (t % 2) == 1;
    const TwoHatPlayer actor = odd ? first : two_hat_other(first);
    const std::int64_t own_turn = odd ? (t + 1) / 2 : t / 2;
    const std::int64_t seen = inst.number_of(two_hat_other(actor));
    if (own_turn == seen) {
      return {t, actor, seen + 1};
    }
  }
}

// ---------------------------------------------------------------------------
// Colored hats, simultaneous rounds, at least one red.
// ---------------------------------------------------------------------------

enum class HatColor : std::uint8_t { red, blue };

class ColorHatInstance {
 public:
  explicit ColorHatInstance(std::vector<HatColor> hats) : hats_(std::move(hats)) {
    if (hats_.empty()) {
      throw std::invalid_argument("color-hat game needs at least one player");
    }
    for (HatColor h : hats_) {
      if (h == HatColor::red) ++reds_;
    }
    if (reds_ == 0) {
      throw std::invalid_argument("at least one hat must be red");
    }
  }

  const std::vector<HatColor>& hats() const { return hats_; }
  std::int64_t red_count() const { return reds_; }

 private:
  std::vector<HatColor> hats_;
  std::int64_t reds_ = 0;
};

struct ColorHatResult {
  std::int64_t ending_round = 0;
  std::vector<std::size_t> declarers;  // 1-based player numbers, ascending
  HatColor declared_color = HatColor::red;
  friend bool operator==(const ColorHatResult&, const ColorHatResult&) = default;
};

/// Rounds are simultaneous: a player seeing n red hats passes in rounds
/// 1..n and declares red in round n+1. The game stops at the first round
/// with any declaration.
inline ColorHatResult color_hat_simulate(const ColorHatInstance& inst) {
  const std::int64_t total_reds = inst.red_count();
  for (std::int64_t round = 1;; ++round) {
    std::vector<std::size_t> declaring;
    for (std::size_t i = 0; i < inst.hats().size(); ++i) {
      const std::int64_t seen =
          total_reds - (inst.hats()[i] == HatColor::red ? 1 : 0);
      if (round == seen + 1) declaring.push_back(i + 1);
    }
    if (!declaring.empty()) {
      return {round, std::move(declaring), HatColor::red};
    }
  }
}

}  // namespace threehat
