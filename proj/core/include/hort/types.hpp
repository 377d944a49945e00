// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_TYPES_HPP
#define HORT_TYPES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hort/util.hpp"

namespace hort {

/// Molecular type: an atomic type or a type-constructor application.
/// Structural equality is the only notion of type equality used anywhere.
class MolType {
 public:
  MolType() = default;
  explicit MolType(std::string atomic) : head_(std::move(atomic)) {}
  MolType(std::string ctor, std::vector<MolType> args)
      : head_(std::move(ctor)), args_(std::move(args)) {}

  const std::string& head() const { return head_; }
  const std::vector<MolType>& args() const { return args_; }
  bool atomic() const { return args_.empty(); }

  bool operator==(const MolType& o) const { return head_ == o.head_ && args_ == o.args_; }
  bool operator!=(const MolType& o) const { return !(*this == o); }
  bool operator<(const MolType& o) const {
    if (head_ != o.head_) return head_ < o.head_;
    return args_ < o.args_;
  }

  /// Number of nodes in the type tree.
  int size() const;
  /// True iff `sub` occurs as a proper subtree.
  bool properly_contains(const MolType& sub) const;
  /// All subtrees, including this one.
  void collect(std::set<MolType>& out) const;

  std::string str() const;

 private:
  std::string head_;
  std::vector<MolType> args_;
};

/// One argument position of a function symbol: (a1,...,ak -> b).
/// An empty binder list is a first-order position.
struct ArgType {
  std::vector<MolType> binders;
  MolType body;

  bool operator==(const ArgType& o) const { return binders == o.binders && body == o.body; }
  std::string str() const;
};

/// Second-order function type (t1,...,tn) -> c with molecular pieces only.
struct FunType {
  std::vector<ArgType> args;
  MolType result;

  bool operator==(const FunType& o) const { return args == o.args && result == o.result; }
  bool first_order() const {
    for (const auto& a : args)
      if (!a.binders.empty()) return false;
    return true;
  }
  std::string str() const;
};

enum class SymbolRole { Defined, Constructor };

/// Signature: function symbols with their types. Roles are derived from the
/// rule set (a symbol is defined iff it heads some lhs) by
/// ComputationSystem validation.
class Signature {
 public:
  bool declare(const std::string& name, FunType type) {
    if (types_.count(name)) return false;
    order_.push_back(name);
    types_.emplace(name, std::move(type));
    return true;
  }

  bool declared(const std::string& name) const { return types_.count(name) != 0; }
  const FunType* lookup(const std::string& name) const {
    auto it = types_.find(name);
    return it == types_.end() ? nullptr : &it->second;
  }

  const std::vector<std::string>& symbols() const { return order_; }

  void set_role(const std::string& name, SymbolRole r) { roles_[name] = r; }
  SymbolRole role(const std::string& name) const {
    auto it = roles_.find(name);
    return it == roles_.end() ? SymbolRole::Constructor : it->second;
  }
  bool defined(const std::string& name) const { return role(name) == SymbolRole::Defined; }

  std::set<std::string> defined_symbols() const {
    std::set<std::string> out;
    for (const auto& s : order_)
      if (defined(s)) out.insert(s);
    return out;
  }
  std::set<std::string> constructor_symbols() const {
    std::set<std::string> out;
    for (const auto& s : order_)
      if (!defined(s)) out.insert(s);
    return out;
  }

  /// Every mol type mentioned by a declaration, closed under subtrees.
  std::set<MolType> mentioned_types() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, FunType> types_;
  std::map<std::string, SymbolRole> roles_;
};

}  // namespace hort

#endif  // HORT_TYPES_HPP
