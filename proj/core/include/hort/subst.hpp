// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_SUBST_HPP
#define HORT_SUBST_HPP

#include <map>

#include "hort/system.hpp"

namespace hort {

/// Capture-avoiding simultaneous substitution of terms for free variables.
/// Bound variables are nameless, so no renaming is ever needed; binder name
/// hints are freshened at print time instead.
MetaTerm substitute_vars(const MetaTerm& t, const std::map<std::string, MetaTerm>& sub);

/// Substitution of terms for metavariables (the three-clause definition):
/// variables map to themselves, function terms are homomorphic, and a
/// meta-application M[t1,...,tn] becomes the image body with its binders
/// replaced by the substituted arguments.
/// Errors: MissingBinding, ArityMismatch.
Result<MetaTerm> substitute_metavars(const Assignment& theta, const MetaTerm& t);

/// Validates image arities/types against the context.
std::optional<Error> check_assignment(const Signature& sig, const MetaContext& ctx,
                                      const Assignment& theta);

}  // namespace hort

#endif  // HORT_SUBST_HPP
