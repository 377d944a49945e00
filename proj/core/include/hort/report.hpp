// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_REPORT_HPP
#define HORT_REPORT_HPP

#include "hort/modular.hpp"
#include "hort/verdict.hpp"

namespace hort {

enum class Method { GS, MODULAR, LOOP, ORACLE, NONE };

std::string method_str(Method m);

/// Final result of a termination check. YES carries replayable evidence per
/// obligation; NO carries a loop witness whose steps replay under
/// one_step_reducts.
struct ProofReport {
  std::string system;
  Verdict verdict = Verdict::Maybe;
  Method method = Method::NONE;
  std::vector<Obligation> obligations;
  std::vector<std::string> witness;  // printed trace terms
  int witness_loop_start = -1;
  double seconds = 0.0;  // human output only; machine format is byte-stable

  int exit_code() const {
    switch (verdict) {
      case Verdict::Yes: return 0;
      case Verdict::No: return 1;
      case Verdict::Maybe: return 2;
    }
    return 2;
  }
};

enum class ReportFormat { Human, Machine };

/// Human: indented obligation tree with timings. Machine: line-oriented
/// key<TAB>value records, byte-identical across runs for fixed inputs.
std::string emit_report(const ProofReport& r, ReportFormat fmt);

/// Parses the machine format back (round-trip checked in tests).
Result<ProofReport> parse_report(const std::string& text);

}  // namespace hort

#endif  // HORT_REPORT_HPP
