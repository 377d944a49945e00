// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_FO_FORMAT_HPP
#define HORT_FO_FORMAT_HPP

#include "hort/system.hpp"
#include "hort/verdict.hpp"

namespace hort {

/// Untyped first-order rule as read back from the text format.
struct FoRule {
  MetaTerm lhs, rhs;  // nullary meta-applications are the variables
};

/// Emits the first-order rules in the classic plain-text TRS format:
///   (VAR x y)
///   (RULES
///     minus(x,0) -> x
///     ...
///   )
/// Error NotFirstOrder if any rule has binders or applied metavariables.
Result<std::string> emit_fo_trs(const ComputationSystem& cs);

/// Parses the same format back (round-trip check and external-hook tests).
Result<std::vector<FoRule>> parse_fo_trs(const std::string& text);

/// Untyped first-order view of a rule (variables as nullary metavariables,
/// types erased) for structural comparison with parse_fo_trs output.
Result<FoRule> fo_view(const Rule& r);

/// Writes the document to a temporary file, runs `command <file>`, and reads
/// the first line of output as YES/NO/MAYBE.
Result<Verdict> run_external_fo_checker(const std::string& command,
                                        const std::string& document);

}  // namespace hort

#endif  // HORT_FO_FORMAT_HPP
