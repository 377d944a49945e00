// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_ORDERS_HPP
#define HORT_ORDERS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hort/system.hpp"

namespace hort {

/// Well-founded preorder on mol types. The default order places every
/// argument type of a constructor application strictly below it (closed
/// under the subtree relation); the identity order relates equal types only.
/// The syntactic type size is the well-foundedness rank in both cases.
struct TypeOrder {
  enum class Mode { Subtree, Identity };
  Mode mode = Mode::Subtree;

  bool lt(const MolType& a, const MolType& b) const {
    return mode == Mode::Subtree && b.properly_contains(a);
  }
  bool eq(const MolType& a, const MolType& b) const { return a == b; }
  bool leq(const MolType& a, const MolType& b) const { return eq(a, b) || lt(a, b); }
  int rank(const MolType& a) const { return a.size(); }
};

TypeOrder default_type_order();
TypeOrder identity_type_order();

/// Well-founded preorder on symbols: equivalence classes with a strict DAG
/// order between them. Constructors sit below all defined symbols and are
/// mutually incomparable.
class SymbolPrecedence {
 public:
  bool gt(const std::string& f, const std::string& g) const;
  bool eq(const std::string& f, const std::string& g) const;
  bool geq(const std::string& f, const std::string& g) const { return eq(f, g) || gt(f, g); }

  /// Well-foundedness certificate: the class order is acyclic.
  bool well_founded() const;

  std::string describe() const;

  /// Call-graph synthesis: f -> g when g occurs in the rhs of an f-rule;
  /// SCCs become equivalence classes, the condensation the strict order.
  static SymbolPrecedence synthesize(const ComputationSystem& cs);

  /// Explicit order from (f > g) and (f = g) facts (manifest override).
  static Result<SymbolPrecedence> from_facts(
      const ComputationSystem& cs, const std::vector<std::pair<std::string, std::string>>& gtFacts,
      const std::vector<std::pair<std::string, std::string>>& eqFacts);

 private:
  std::map<std::string, int> class_of_;       // defined symbols only
  std::vector<std::set<int>> class_above_;    // strict: class -> classes below it
  std::set<std::string> defined_;

  friend struct PrecedenceBuilder;
};

SymbolPrecedence synthesize_precedence(const ComputationSystem& cs);

}  // namespace hort

#endif  // HORT_ORDERS_HPP
