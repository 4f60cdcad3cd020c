#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "threehat/configuration.hpp"

namespace threehat {

// Sigma-iteration sequence of a configuration, reversed so the base
// configuration comes first and the configuration itself is last.
// Exactly the first element is a base configuration, and sigma maps each
// element to its predecessor.
using ConfigurationChain = std::vector<Configuration>;

inline ConfigurationChain build_chain(const Configuration& s) {
  ConfigurationChain chain{s};
  while (!chain.back().is_base()) chain.push_back(sigma(chain.back()));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

struct NormalizationResult {
  Configuration reduced;
  std::int64_t factor;  // the gcd divided out; factor * reduced == original
};

/// Divide the entries by their greatest common divisor. The entries of
/// the result are pairwise coprime (any pairwise gcd already divides the
/// third entry, so the three-way gcd equals each pairwise one).
inline NormalizationResult normalize(const Configuration& s) {
  const auto& e = s.entries();
  const std::int64_t g = std::gcd(std::gcd(e[0], e[1]), e[2]);
  return {Configuration::derived(e[0] / g, e[1] / g, e[2] / g), g};
}

}  // namespace threehat
