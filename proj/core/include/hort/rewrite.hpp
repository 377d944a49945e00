// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_REWRITE_HPP
#define HORT_REWRITE_HPP

#include <vector>

#include "hort/match.hpp"
#include "hort/system.hpp"

namespace hort {

/// A redex: rule instance at a position (argument-index path from the root).
struct Redex {
  std::vector<int> position;
  std::string rule;
  Assignment assignment;
};

struct Step {
  Redex redex;
  Term result;
};

/// Exactly the one-step reducts of t: the (Rule) axiom applied at every
/// position reachable through the (Fun) congruence. Finite for a finite rule
/// set. Order is deterministic: outside-in, left-to-right, rules in
/// declaration order.
std::vector<Step> one_step_reducts(const ComputationSystem& cs, const Term& t);

/// Restricted variant used by the labelling machinery: only rules from
/// `ruleNames` fire.
std::vector<Step> one_step_reducts(const ComputationSystem& cs, const Term& t,
                                   const std::vector<std::string>& ruleNames);

struct NormalizeOutcome {
  Term term;
  int steps = 0;
  bool budget_exhausted = false;
};

/// Repeated contraction of the leftmost-outermost redex, up to `fuel` steps.
NormalizeOutcome normalize(const ComputationSystem& cs, const Term& t, int fuel);

}  // namespace hort

#endif  // HORT_REWRITE_HPP
