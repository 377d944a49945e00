// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_LABELLING_HPP
#define HORT_LABELLING_HPP

#include "hort/modular.hpp"

namespace hort {

/// Desk-scale executable model of the trace-labelling construction.
/// Labels are plain terms attached to A-part function symbols; the labelled
/// rule family is never materialized, only its one-step relation.
class LabContext {
 public:
  static Result<LabContext> make(const ComputationSystem& cs, const SplitSpec& split);

  const ComputationSystem& system() const { return cs_; }
  const ComputationSystem& system_with_proj() const { return with_proj_; }
  const SplitSpec& split() const { return split_; }
  const std::map<MolType, std::pair<std::string, std::string>>& proj() const { return registry_; }
  const std::vector<std::string>& rx_rules() const { return rx_rules_; }

  long long trace_budget = 20000;
  int decl_depth = 16;
  long long decl_budget = 20000;
  long long rx_search_budget = 20000;

 private:
  ComputationSystem cs_;         // R = A + B
  ComputationSystem with_proj_;  // R + Proj (projection symbols declared)
  SplitSpec split_;
  std::map<MolType, std::pair<std::string, std::string>> registry_;
  std::vector<std::string> rx_rules_;  // A + Proj rule names
};

enum class LabStatus { Ok, Undefined, BudgetExhausted };

struct LabResult {
  LabStatus status = LabStatus::Ok;
  Term term;
};

/// tuple_b over a finite set: <t1,<t2,...,<tn,bot>...>> under the fixed
/// lexicographic order on printed forms; the empty set gives bot_b.
Result<Term> tuple_of_set(const LabContext& ctx, const std::vector<Term>& terms,
                          const MolType& b);

/// The trace map: identity on variables, homomorphic on non-B heads, and on
/// a B-headed term the tuple of the traces of all its proper reducts
/// (Undefined on terms that are not strongly normalizing, BudgetExhausted
/// when exploration overruns).
LabResult trace(const LabContext& ctx, const Term& t);

/// Trace labelling: each A-symbol node gets the trace of itself (with traced
/// argument bodies) as its label; other nodes stay unlabelled.
LabResult trace_label(const LabContext& ctx, const Term& t);

struct LabelledRule {
  std::string name;
  MetaTerm lhs, rhs;
};

/// Term labelling lab_phi: metavariables and non-A symbols pass through;
/// every A-symbol node gets the label aext_phi(node), the phi-instantiation
/// of the node itself. phi must assign B-free terms; the rule must satisfy
/// the layer condition (LayerViolation otherwise).
Result<LabelledRule> label_rule(const LabContext& ctx, const Rule& rule, const Assignment& phi);

/// Decides v (->_{A+Proj} U strict-subterm)+ w by bounded search.
Result<bool> decl_label_reachable(const LabContext& ctx, const Term& v, const Term& w);

/// Decreasing step between two labelled terms differing in exactly one
/// label.
Result<bool> decl_step(const LabContext& ctx, const Term& labelled_t, const Term& labelled_u);

/// One-step relation of the labelled system (rule instances through the
/// labelled substitution, decreasing steps, congruence closure). Bounded by
/// the context budgets; intended for desk-scale terms.
Result<std::vector<Term>> labelled_one_step(const LabContext& ctx, const Term& s);

struct SimulationResult {
  bool ok = false;
  int labelled_steps = 0;   // >= 1 on success
  bool key_equation = false;  // labelled-substitution equation held at the redex
  bool plab_mon = false;      // trace(s) ->>_{A+Proj} trace(t)
  std::string detail;
};

/// Checks both simulation lemmas on one reduction step s -> t:
/// trace_label(s) reaches trace_label(t) in >= 1 labelled steps (soundness)
/// and trace(s) reaches trace(t) by A+Proj steps in >= 0 steps
/// (monotonicity).
Result<SimulationResult> simulation_check(const LabContext& ctx, const Term& s, const Term& t);

}  // namespace hort

#endif  // HORT_LABELLING_HPP
