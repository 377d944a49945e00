// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_WEIGHTS_HPP
#define HORT_WEIGHTS_HPP

#include <map>
#include <optional>

#include "hort/rational.hpp"
#include "hort/system.hpp"

namespace hort {

/// Linear interpretation of one symbol: c0 + sum ci * den(arg_i).
/// Positions whose argument type can host a redex must get ci >= 1 so a
/// strict decrease survives the surrounding context.
struct LinearWeight {
  std::vector<Rat> coeff;
  Rat constant;

  std::string str() const;
};

using WeightMap = std::map<std::string, LinearWeight>;

/// Linear polynomial over metavariable weight indeterminates.
struct WeightPoly {
  std::map<std::string, Rat> coeff;
  Rat constant;

  bool operator==(const WeightPoly& o) const { return coeff == o.coeff && constant == o.constant; }
  /// Coefficient-wise lhs >= rhs with strictly greater constant.
  static bool strictly_dominates(const WeightPoly& l, const WeightPoly& r, const Rat& margin);
  /// Coefficient-wise lhs >= rhs with constant >=.
  static bool weakly_dominates(const WeightPoly& l, const WeightPoly& r);
  std::string str() const;
};

/// den(x) = 0 for variables, den(M[ts]) = w_M + sum den(t_i),
/// den(f(xs.ss)) = c0 + sum ci * den(s_i); abstraction is transparent.
/// Error: MissingWeight.
Result<WeightPoly> interpret_weight(const WeightMap& w, const MetaTerm& t);

struct RuleWeightCheck {
  std::string rule;
  WeightPoly lhs, rhs;
  bool decreasing = false;
};

struct VerifyWeightsResult {
  bool all = false;
  std::vector<RuleWeightCheck> per_rule;
};

/// Checks the per-rule strict polynomial decrease (sufficient for a strict
/// decrease under every natural valuation).
Result<VerifyWeightsResult> verify_weights(const ComputationSystem& cs, const WeightMap& w);

/// Types reachable inside a term of type b (via argument body types).
std::set<MolType> reachable_types(const Signature& sig, const MolType& b);

/// True iff a term at an argument position of body type `b` can contain a
/// redex of some rule (rule types are preserved by instantiation).
bool position_hosts_redex(const Signature& sig, const std::set<MolType>& ruleTypes,
                          const MolType& b);

/// Exhaustive deterministic search over natural coefficients/constants up to
/// the bounds, honoring the redex-hosting invariant; returns an assignment
/// passing verify_weights if one exists in the grid.
std::optional<WeightMap> find_linear_weights(const ComputationSystem& cs, int coeffBound,
                                             int constBound);

/// Lexicographic (weight, size) refinement: all rules must weakly decrease,
/// and each rule must decrease strictly in the weight or strictly in size;
/// coefficients must be >= 1 only where non-size-decreasing rules can fire.
/// The size comparison is exact for rules whose meta-applications carry only
/// variable arguments; other rules must decrease strictly in the weight.
struct LexWeightProof {
  WeightMap weights;
  std::vector<std::string> weight_strict_rules;
  std::vector<std::string> size_strict_rules;
};
std::optional<LexWeightProof> find_lex_weights(const ComputationSystem& cs, int coeffBound,
                                               int constBound);

/// Size polynomial with every symbol counted 1 (exact when meta-application
/// arguments are variables: substituting variables for variables preserves
/// node counts).
WeightPoly size_poly(const MetaTerm& t);
bool size_linear(const MetaTerm& t);

}  // namespace hort

#endif  // HORT_WEIGHTS_HPP
