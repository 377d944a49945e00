// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_SCHEMA_HPP
#define HORT_SCHEMA_HPP

#include <optional>

#include "hort/orders.hpp"
#include "hort/verdict.hpp"

namespace hort {

/// Argument comparison for equal-precedence calls.
enum class SubtermVariant { Stable, Structural };
enum class Clause5Ext { Lex, Multiset };

/// Metavariables accessible in t: M with M[x...] (distinct bound variables)
/// in the least set closed under (a1) the term itself, (a2) descending under
/// abstraction, (a3) descending into argument i of f : t1,...,tn -> b when
/// every binder type of t_i is strictly below b and t_i's body type is at
/// most b.
std::set<std::string> accessible_metavars(const MetaTerm& t, const Signature& sig,
                                          const TypeOrder& ord);

/// Same computed by naive fixpoint iteration (oracle for the property test
/// that the recursive computation yields the least set).
std::set<std::string> accessible_metavars_fixpoint(const MetaTerm& t, const Signature& sig,
                                                   const TypeOrder& ord);

/// Strict sub-meta-term comparison s < t.
/// Stable: s occurs properly in t and mentions no binder crossed on the way
/// down (so its free variables all occur free in t).
/// Structural: binders may be crossed; crossed variables are retained by
/// allowing a consistent variable-for-variable renaming onto s's variables.
bool strictly_smaller(const MetaTerm& s, const MetaTerm& t, SubtermVariant variant);

/// Computable-closure derivation, replayable clause by clause.
struct CCDeriv {
  enum class Clause { MetaAcc, Var, Abs, FunGt, FunEq };
  Clause clause;
  MetaTerm subject;
  std::vector<std::string> opened;  // Abs: names used to open the body
  std::string g;                    // FunGt/FunEq: callee
  int lex_position = -1;            // FunEq with Lex: strict position
  std::vector<CCDeriv> children;

  std::string clause_str() const;
};

struct CCResult {
  bool ok = false;
  std::optional<CCDeriv> derivation;
  std::string failure_clause;  // e.g. "(fun =)"
  std::string failure_detail;
};

struct GsConfig {
  SubtermVariant variant = SubtermVariant::Stable;
  Clause5Ext clause5 = Clause5Ext::Lex;
};

/// Membership of `candidate` in the computable closure of f(lhsArgs).
CCResult in_computable_closure(const std::string& f, const std::vector<MetaTerm>& lhsArgs,
                               const MetaTerm& candidate, const Signature& sig,
                               const TypeOrder& ord, const SymbolPrecedence& prec,
                               const GsConfig& cfg);

/// Re-validates a derivation clause by clause against the definition.
bool replay_cc_derivation(const CCDeriv& d, const std::string& f,
                          const std::vector<MetaTerm>& lhsArgs, const Signature& sig,
                          const TypeOrder& ord, const SymbolPrecedence& prec,
                          const GsConfig& cfg);

struct GsRuleResult {
  std::string rule;
  CCResult cc;
};

struct PrecedenceConflict {
  std::string rule_fg;  // rule needing f > g
  std::string rule_gf;  // rule needing g > f
  std::string f, g;
};

struct GsReport {
  Verdict verdict = Verdict::Maybe;
  std::vector<GsRuleResult> rules;
  std::vector<PrecedenceConflict> conflicts;
  std::string precedence;
  std::string first_failure_rule;
  std::string first_failure_clause;
};

/// The General Schema criterion: YES iff the rhs of every rule lies in the
/// computable closure of its lhs; otherwise MAYBE with the failing rule and
/// clause (plus precedence-conflict diagnostics for mutually recursive
/// symbols whose rules fail).
GsReport check_general_schema(const ComputationSystem& cs, const TypeOrder& ord,
                              const SymbolPrecedence& prec, const GsConfig& cfg);

}  // namespace hort

#endif  // HORT_SCHEMA_HPP
