// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_TYPECHECK_HPP
#define HORT_TYPECHECK_HPP

#include <vector>

#include "hort/system.hpp"

namespace hort {

/// Variable environment for typing judgements Z |> Gamma |- t : b.
using VarEnv = std::vector<std::pair<std::string, MolType>>;

/// Syntax-directed type synthesis for meta-terms. Deterministic; errors are
/// UnboundVariable, UnboundMetavariable, ArityMismatch, TypeMismatch and
/// name the offending subterm.
Result<MolType> typecheck(const Signature& sig, const MetaContext& ctx, const VarEnv& env,
                          const MetaTerm& t);

/// Type of a closed, label-free term (variables read their stored type).
Result<MolType> term_type(const Signature& sig, const MetaTerm& t);

}  // namespace hort

#endif  // HORT_TYPECHECK_HPP
