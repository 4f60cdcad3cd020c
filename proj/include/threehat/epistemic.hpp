#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "threehat/chain.hpp"
#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/outcome.hpp"

namespace threehat {

/// Ending turn computed by reasoning alone, with no game state: walking
/// the chain from its base, each configuration can only be ruled out by
/// its cue holder, on their first turn strictly after the previous link was
/// settled. The final link's cue holder declares on that turn.
///
/// Independent of simulate(); the two are cross-checked against each
/// other, never derived from one another.
inline Outcome end_turn(const Configuration& s) {
  std::int64_t t = 0;
  for (const Configuration& link : build_chain(s)) {
    t = next_turn_of(link.sum_seat(), t);
  }
  return {t, s.sum_seat(), s.sum_value()};
}

struct EngineMismatch {
  Configuration config;
  Outcome simulated;  // from simulate()
  Outcome reasoned;   // from end_turn()
};

struct EquivalenceReport {
  std::int64_t bound = 0;
  std::int64_t configurations_checked = 0;
  std::vector<EngineMismatch> mismatches;

  bool agree() const { return mismatches.empty(); }
};

/// Compare the two engines on every valid configuration with max entry
/// <= bound.
inline EquivalenceReport check_equivalence(std::int64_t bound) {
  if (bound < 2) {
    throw std::invalid_argument("equivalence bound must be at least 2");
  }
  EquivalenceReport report;
  report.bound = bound;
  for_each_configuration(bound, [&](const Configuration& c) {
    ++report.configurations_checked;
    const Outcome simulated = outcome_of(simulate(c));
    const Outcome reasoned = end_turn(c);
    if (!(simulated == reasoned)) {
      report.mismatches.push_back({c, simulated, reasoned});
    }
  });
  return report;
}

}  // namespace threehat
