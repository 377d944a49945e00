// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_MATCH_HPP
#define HORT_MATCH_HPP

#include <optional>

#include "hort/system.hpp"

namespace hort {

/// Decidable matching for the second-order pattern fragment.
///
/// Returns the unique most-general assignment theta with
/// substitute_metavars(theta, pattern) alpha-equal to subject, or nullopt.
/// At a leaf M[x1,...,xn] matched against s the image is x1...xn.s; the match
/// fails if s mentions a pattern-bound variable outside {x1,...,xn}. Free
/// variables of the subject itself behave like constants and may appear in
/// images.
///
/// Precondition (NotAPattern): pattern is a second-order pattern.
Result<std::optional<Assignment>> match_second_order(const MetaTerm& pattern,
                                                     const MetaTerm& subject,
                                                     const MetaContext& context);

/// Same, threading the caller's name supply (subject may contain variables
/// opened by the caller).
Result<std::optional<Assignment>> match_second_order(const MetaTerm& pattern,
                                                     const MetaTerm& subject,
                                                     const MetaContext& context,
                                                     NameSupply& supply);

}  // namespace hort

#endif  // HORT_MATCH_HPP
