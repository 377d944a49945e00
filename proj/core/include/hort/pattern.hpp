// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_PATTERN_HPP
#define HORT_PATTERN_HPP

#include "hort/term.hpp"

namespace hort {

/// Miller second-order pattern check: every meta-application is M[x1,...,xn]
/// with pairwise-distinct variables, each bound above the occurrence.
bool is_second_order_pattern(const MetaTerm& t);

/// Relaxed check used by the layer condition: meta-application arguments
/// must be bound variables, but repetitions are allowed.
bool is_relaxed_pattern(const MetaTerm& t);

}  // namespace hort

#endif  // HORT_PATTERN_HPP
