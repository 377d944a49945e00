// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_ORACLE_HPP
#define HORT_ORACLE_HPP

#include <vector>

#include "hort/rewrite.hpp"

namespace hort {

/// Result of brute-force reduction-space exploration.
///
/// A NonSN witness replays: consecutive trace entries are one-step reducts,
/// and the final term contains the entry at loop_start as a subterm (equal
/// terms form a cycle, proper containment a growing self-embedding; both
/// prove non-termination).
struct OracleResult {
  enum class Status { SN, NonSN, Unknown };
  Status status = Status::Unknown;
  int max_depth_reached = 0;
  long long nodes_explored = 0;
  bool budget_exhausted = false;
  std::vector<Term> witness;
  int loop_start = -1;
};

/// Exhaustively explores every reduction sequence from each seed, up to the
/// depth budget (path length) and width budget (total nodes).
OracleResult sn_oracle(const ComputationSystem& cs, const std::vector<Term>& seeds,
                       int depthBudget, long long widthBudget);

/// Enumerates ground instances of the rule lhss (metavariable images built
/// from constructors and binder variables up to `imageDepth`) and searches
/// for a loop. maxSeedsPerRule caps the instantiation deterministically.
struct LoopSearchResult {
  bool found = false;
  OracleResult witness;
};
LoopSearchResult find_loop(const ComputationSystem& cs, int imageDepth, int stepBudget,
                           int maxSeedsPerRule = 200);

/// Ground instances of every lhs, images drawn from constructor terms (and
/// binder variables) of depth <= imageDepth. Deterministic order.
std::vector<Term> lhs_ground_instances(const ComputationSystem& cs, int imageDepth,
                                       int maxSeedsPerRule = 200);

/// All constructor-built ground terms of the given type up to `depth`,
/// extended with the supplied environment variables.
std::vector<Term> enumerate_terms(const Signature& sig, const MolType& type, int depth,
                                  const std::vector<std::pair<std::string, MolType>>& env,
                                  bool constructorsOnly = true);

}  // namespace hort

#endif  // HORT_ORACLE_HPP
