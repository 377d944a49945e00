// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_CHECKER_HPP
#define HORT_CHECKER_HPP

#include "hort/manifest.hpp"
#include "hort/report.hpp"

namespace hort {

enum class Strategy { Auto, Gs, Modular, Oracle, Loop };
enum class SplitSelect { Default, Auto, Manifest };

/// CLI-level options; unset fields fall back to the manifest's options.
struct CheckConfig {
  Strategy strategy = Strategy::Auto;
  std::optional<SubtermVariant> subterm;
  std::optional<Clause5Ext> clause5;
  std::optional<int> weights_bound;
  std::optional<int> oracle_depth;
  std::optional<long long> oracle_width;
  SplitSelect split = SplitSelect::Default;
  std::string external_fo;
};

/// Strategy composition: auto tries the General Schema, then the modular
/// theorem (auto FO split, or the manifest split when given), then the loop
/// finder for a NO; anything left is MAYBE with the accumulated reasons.
ProofReport run_check(const Manifest& m, const CheckConfig& cfg, const std::string& systemName);

/// Loop witnesses replay: every consecutive pair must be a one-step reduct.
bool replay_witness(const ComputationSystem& cs, const std::vector<Term>& witness);

/// In-memory variant keeping the witness terms for replay.
struct CheckOutcome {
  ProofReport report;
  std::vector<Term> witness_terms;
};
CheckOutcome run_check_full(const Manifest& m, const CheckConfig& cfg,
                            const std::string& systemName);

}  // namespace hort

#endif  // HORT_CHECKER_HPP
