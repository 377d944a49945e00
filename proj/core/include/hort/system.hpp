// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_SYSTEM_HPP
#define HORT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hort/term.hpp"
#include "hort/types.hpp"

namespace hort {

/// Metavariable declaration M : (a1,...,an) -> b.
struct MetaDecl {
  std::string name;
  std::vector<MolType> arg_types;
  MolType result;
};

/// Ordered metavariable context with distinct names.
class MetaContext {
 public:
  bool declare(MetaDecl d) {
    if (lookup(d.name)) return false;
    decls_.push_back(std::move(d));
    return true;
  }
  const MetaDecl* lookup(const std::string& name) const {
    for (const auto& d : decls_)
      if (d.name == name) return &d;
    return nullptr;
  }
  const std::vector<MetaDecl>& decls() const { return decls_; }
  bool empty() const { return decls_.empty(); }

 private:
  std::vector<MetaDecl> decls_;
};

/// Typed rewrite rule: lhs is a function term and a second-order pattern,
/// all rhs metavariables occur in the lhs, both sides are closed and check
/// at ruleType under the context.
struct Rule {
  std::string name;
  MetaContext context;
  MetaTerm lhs;
  MetaTerm rhs;
  MolType rule_type;

  const std::string& head() const { return lhs.name(); }
};

struct ComputationSystem {
  Signature signature;
  std::vector<Rule> rules;

  const Rule* rule(const std::string& name) const {
    for (const auto& r : rules)
      if (r.name == name) return &r;
    return nullptr;
  }

  /// Recomputes defined/constructor roles from the rule set.
  void assign_roles();

  /// Checks every Rule invariant and the signature coverage; returns the
  /// first violation.
  std::optional<Error> validate() const;
};

/// Metavariable assignment: each image is an Abs node whose binder types
/// match the metavariable's declared argument types.
using Assignment = std::map<std::string, MetaTerm>;

}  // namespace hort

#endif  // HORT_SYSTEM_HPP
