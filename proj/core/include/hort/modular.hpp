// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_MODULAR_HPP
#define HORT_MODULAR_HPP

#include <optional>

#include "hort/schema.hpp"
#include "hort/weights.hpp"

namespace hort {

/// Hierarchical split with shared constructors: rulesA mention only
/// sigmaA + theta symbols, rulesB may mention sigmaA symbols, sigmaA/sigmaB
/// are the defined symbols of the respective parts.
struct SplitSpec {
  std::set<std::string> sigmaA, sigmaB, theta;
  std::vector<std::string> rulesA, rulesB;  // rule names (order preserved)
};

/// Builds and validates a split from an explicit A-part listing.
Result<SplitSpec> make_split(const ComputationSystem& cs,
                             const std::vector<std::string>& aRuleNames);

/// FO/HO auto split: the maximal set of rules whose defined symbols are
/// first-order and which mention no B-defined symbol, computed as a
/// symbol-wise fixpoint (a defined symbol's rules move together so the
/// partition stays disjoint). A may come out empty.
SplitSpec split_fo_ho(const ComputationSystem& cs);

struct LayerCheck {
  bool ok = true;
  std::string offending;  // subterm that violates the condition
};

/// Sigma_A-layer condition on one rule (both sides): every sigmaA-headed
/// sub-meta-term uses only sigmaA + theta symbols and has pattern arguments
/// (meta-application arguments must be bound variables; repetitions allowed,
/// see is_relaxed_pattern).
LayerCheck check_A_layer(const Rule& rule, const std::set<std::string>& sigmaA,
                         const std::set<std::string>& theta);

/// Projection extension: for each mol type b fresh constructors
/// pair_b : b,b -> b and bot_b : b, plus the two projection rules.
struct ProjBuild {
  std::vector<std::pair<std::string, FunType>> symbols;
  std::vector<Rule> rules;
  std::map<MolType, std::pair<std::string, std::string>> registry;  // type -> (pair, bot)
};
Result<ProjBuild> build_projection_rules(const Signature& sig, const std::set<MolType>& types);

/// Extends a copy of cs with the projection symbols and rules.
Result<ComputationSystem> extend_with_projections(const ComputationSystem& cs,
                                                  const std::set<MolType>& types,
                                                  ProjBuild* outBuild = nullptr);

struct AccessibilityCheck {
  bool ok = true;
  std::string failing_rule;
  std::string failing_metavar;
};

/// Thm. obligation (i): every metavariable of each A-rule's rhs is
/// accessible in some lhs argument.
AccessibilityCheck check_A_accessible(const ComputationSystem& cs,
                                      const std::vector<std::string>& aRules,
                                      const TypeOrder& ord);

struct Obligation {
  std::string name;
  bool discharged = false;
  std::string evidence;
};

struct ModularConfig {
  TypeOrder type_order;
  GsConfig gs;
  int coeff_bound = 2;
  int const_bound = 2;
  std::string external_fo_command;  // empty: internal backend only
};

struct ModularReport {
  Verdict verdict = Verdict::Maybe;
  std::vector<Obligation> obligations;
  std::string precedence;  // justification metadata for YES
  GsReport b_gs;
  std::optional<WeightMap> a_weights;
};

/// The modular termination check: (0) split/partition and layer condition,
/// (i) A accessible, (ii) A + projections SN through the staged internal
/// backend (linear weights, then the lexicographic weight-size refinement,
/// then dependency pairs for first-order parts, then the external hook when
/// configured), (iii) B SN by the General Schema with the synthesized
/// precedence. YES iff every obligation is discharged.
Result<ModularReport> check_modular_sn(const ComputationSystem& cs, const SplitSpec& split,
                                       const ModularConfig& cfg);

}  // namespace hort

#endif  // HORT_MODULAR_HPP
