// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/system.hpp"

#include <algorithm>

#include "hort/pattern.hpp"
#include "hort/typecheck.hpp"

namespace hort {

void ComputationSystem::assign_roles() {
  std::set<std::string> defined;
  for (const auto& r : rules)
    if (r.lhs.is_fun()) defined.insert(r.lhs.name());
  for (const auto& s : signature.symbols())
    signature.set_role(s, defined.count(s) ? SymbolRole::Defined : SymbolRole::Constructor);
}

std::optional<Error> ComputationSystem::validate() const {
  for (const auto& r : rules) {
    if (!r.lhs.is_fun())
      return Error{"InvalidRule", "(" + r.name + ") lhs is not a function term"};
    if (!is_second_order_pattern(r.lhs))
      return Error{"InvalidRule", "(" + r.name + ") lhs is not a second-order pattern"};
    if (!free_vars(r.lhs).empty() || !free_vars(r.rhs).empty())
      return Error{"InvalidRule", "(" + r.name + ") sides must be closed"};
    auto lm = metavars(r.lhs);
    for (const auto& m : metavars(r.rhs))
      if (!lm.count(m))
        return Error{"InvalidRule",
                     "(" + r.name + ") metavariable " + m + " occurs only in the rhs"};
    for (const auto& s : fun_symbols(r.lhs))
      if (!signature.declared(s))
        return Error{"UnknownSymbol", "(" + r.name + ") uses undeclared symbol " + s};
    for (const auto& s : fun_symbols(r.rhs))
      if (!signature.declared(s))
        return Error{"UnknownSymbol", "(" + r.name + ") uses undeclared symbol " + s};
    Result<MolType> lt = typecheck(signature, r.context, {}, r.lhs);
    if (!lt) return Error{lt.error().code, "(" + r.name + ") lhs: " + lt.error().message};
    Result<MolType> rt = typecheck(signature, r.context, {}, r.rhs);
    if (!rt) return Error{rt.error().code, "(" + r.name + ") rhs: " + rt.error().message};
    if (*lt != r.rule_type || *rt != r.rule_type)
      return Error{"TypeMismatch", "(" + r.name + ") sides do not both check at " +
                                       r.rule_type.str()};
  }
  return std::nullopt;
}

}  // namespace hort
