#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "threehat/chain.hpp"
#include "threehat/configuration.hpp"
#include "threehat/engine.hpp"
#include "threehat/epistemic.hpp"

namespace threehat {

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::string first_violation;  // describes the first offending case, if any

  bool passed() const { return violations == 0; }
};

struct VerifyReport {
  std::int64_t max_entry = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

namespace detail {

inline void record_violation(CheckResult& check, const std::string& description) {
  ++check.violations;
  if (check.first_violation.empty()) check.first_violation = description;
}

}  // namespace detail

/// Exhaustive checks over every valid configuration with max entry
/// <= max_entry: sigma closure, the declarer identity, scaling
/// invariance of the outcome, the turn-count recurrence, agreement of
/// the two engines, and viability plus slowness of the naive protocol.
inline VerifyReport run_verification(std::int64_t max_entry = 300) {
  VerifyReport report;
  report.max_entry = max_entry;

  {
    CheckResult check{"sigma_closure"};
    for_each_configuration(max_entry, [&](const Configuration& s) {
      ++check.cases;
      try {
        const Configuration next = sigma(s);
        if (s.is_base() && !(next == s)) {
          detail::record_violation(check, to_string(s) + ": base not fixed by sigma");
        } else if (!s.is_base() &&
                   (next == s || next.sum_value() >= s.sum_value())) {
          detail::record_violation(check, to_string(s) + ": sigma did not descend");
        }
      } catch (const std::exception& e) {
        detail::record_violation(check, to_string(s) + ": " + e.what());
      }
    });
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"declarer_holds_sum"};
    for_each_configuration(max_entry, [&](const Configuration& s) {
      ++check.cases;
      const Outcome got = outcome_of(simulate(s));
      if (got.declarer != s.sum_seat() || got.value != s.sum_value() ||
          seat_of_turn(got.turn) != got.declarer) {
        detail::record_violation(check, to_string(s) + ": wrong declarer or value");
      }
    });
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"scaling_invariance"};
    const std::int64_t bound = max_entry < 100 ? max_entry : 100;
    for_each_configuration(bound, [&](const Configuration& s) {
      const Outcome base = outcome_of(simulate(s));
      for (std::int64_t k = 2; k <= 5; ++k) {
        ++check.cases;
        const auto& e = s.entries();
        const Configuration scaled(k * e[0], k * e[1], k * e[2]);
        const Outcome got = outcome_of(simulate(scaled));
        if (got.turn != base.turn || got.declarer != base.declarer) {
          std::ostringstream os;
          os << to_string(s) << " scaled by " << k << ": outcome changed";
          detail::record_violation(check, os.str());
        }
      }
    });
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"recurrence"};
    for_each_configuration(max_entry, [&](const Configuration& s) {
      ++check.cases;
      const std::int64_t got = turn_count(s);
      const std::int64_t expected =
          s.is_base() ? seat_index(s.sum_seat())
                      : next_turn_of(s.sum_seat(), turn_count(sigma(s)));
      if (got != expected) {
        std::ostringstream os;
        os << to_string(s) << ": turn " << got << ", recurrence gives " << expected;
        detail::record_violation(check, os.str());
      }
    });
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"engine_equivalence"};
    const EquivalenceReport eq = check_equivalence(max_entry);
    check.cases = eq.configurations_checked;
    check.violations = static_cast<std::int64_t>(eq.mismatches.size());
    if (!eq.mismatches.empty()) {
      const EngineMismatch& m = eq.mismatches.front();
      std::ostringstream os;
      os << to_string(m.config) << ": simulated turn " << m.simulated.turn
         << ", reasoned turn " << m.reasoned.turn;
      check.first_violation = os.str();
    }
    report.checks.push_back(std::move(check));
  }

  {
    CheckResult check{"naive_baseline"};
    for_each_configuration(max_entry, [&](const Configuration& s) {
      ++check.cases;
      const Transcript naive = simulate_naive(s);
      const Outcome got = outcome_of(naive);
      if (got.declarer != s.sum_seat() || got.value != s.sum_value()) {
        detail::record_violation(check, to_string(s) + ": naive declaration wrong");
      } else if (naive.turns() < turn_count(s)) {
        detail::record_violation(check,
                                 to_string(s) + ": naive beat chain reduction");
      }
    });
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace threehat
