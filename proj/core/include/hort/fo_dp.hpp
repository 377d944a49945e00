// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_FO_DP_HPP
#define HORT_FO_DP_HPP

#include "hort/weights.hpp"

namespace hort {

/// Dependency-pair termination proof for a first-order rule set.
///
/// Pipeline: dependency pairs with marked heads, dependency graph through
/// the CAP/REN unification approximation, SCC decomposition, and per SCC a
/// search for reduction pairs among linear interpretations with halfed
/// rational coefficients (all rules weakly oriented, every SCC pair weakly,
/// at least one strictly; strict pairs are removed and the SCC reanalyzed).
struct FoDpResult {
  bool proven = false;
  std::string evidence;  // one line per solved SCC with its interpretation
};

/// Requires every rule first-order (no binders, metavariables nullary).
Result<FoDpResult> prove_sn_fo_dp(const ComputationSystem& cs);

}  // namespace hort

#endif  // HORT_FO_DP_HPP
