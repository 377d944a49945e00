// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_TERM_HPP
#define HORT_TERM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hort/supply.hpp"
#include "hort/types.hpp"
#include "hort/util.hpp"

namespace hort {

/// Meta-terms with binders in a locally nameless discipline: bound variables
/// are (level, slot) indices into enclosing abstraction binder lists, free
/// variables are named. Alpha-equivalence is therefore plain structural
/// equality (binder name hints are kept for printing only).
///
/// Invariants:
///  - Abs nodes appear only as direct arguments of Fun nodes; a zero-length
///    binder list is the identity wrapper around first-order arguments.
///  - A Term is a MetaTerm without MetaApp nodes (isTerm()).
///  - Fun nodes may carry a label term (used by the labelling subsystem);
///    plain systems never set it.
class MetaTerm {
 public:
  enum class Kind { BVar, FVar, Abs, Fun, MetaApp };

  MetaTerm() = default;

  Kind kind() const { return n_->kind; }
  bool is_bvar() const { return kind() == Kind::BVar; }
  bool is_fvar() const { return kind() == Kind::FVar; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_fun() const { return kind() == Kind::Fun; }
  bool is_meta() const { return kind() == Kind::MetaApp; }

  // BVar
  int level() const { return n_->level; }
  int slot() const { return n_->slot; }
  // BVar / FVar
  const MolType& var_type() const { return n_->type; }
  // FVar / Fun symbol / MetaApp metavariable
  const std::string& name() const { return n_->name; }
  // Abs
  const std::vector<MolType>& binders() const { return n_->binders; }
  const std::vector<std::string>& hints() const { return n_->hints; }
  const MetaTerm& body() const { return n_->args[0]; }
  // Fun / MetaApp
  const std::vector<MetaTerm>& args() const { return n_->args; }
  // Fun label (may be null)
  const std::shared_ptr<const MetaTerm>& label() const { return n_->label; }

  bool has_meta() const { return n_->has_meta; }
  bool is_term() const { return !has_meta(); }
  std::size_t hash() const { return n_->hash; }

  bool operator==(const MetaTerm& o) const;
  bool operator!=(const MetaTerm& o) const { return !(*this == o); }
  bool operator<(const MetaTerm& o) const;  // arbitrary total order (printing-free)

  /// Node count (abstractions are transparent).
  int size() const;
  /// Tree height (abstractions are transparent, leaves count 1).
  int depth() const;

  std::string str() const;

  // --- constructors ---
  static MetaTerm bvar(int level, int slot, MolType type);
  static MetaTerm fvar(std::string name, MolType type);
  static MetaTerm abs(std::vector<MolType> binders, std::vector<std::string> hints, MetaTerm body);
  static MetaTerm fun(std::string symbol, std::vector<MetaTerm> absArgs);
  static MetaTerm fun_labelled(std::string symbol, std::vector<MetaTerm> absArgs, MetaTerm label);
  static MetaTerm meta(std::string name, std::vector<MetaTerm> args);

  /// Wraps a term that is not an Abs into the identity abstraction.
  static MetaTerm wrap(MetaTerm t) {
    if (t.is_abs()) return t;
    return abs({}, {}, std::move(t));
  }
  /// Unwraps zero-binder abstractions.
  static MetaTerm unwrap(const MetaTerm& t) {
    if (t.is_abs() && t.binders().empty()) return t.body();
    return t;
  }

  struct Node {
    Kind kind;
    int level = 0, slot = 0;
    std::string name;
    MolType type;
    std::vector<MolType> binders;
    std::vector<std::string> hints;
    std::vector<MetaTerm> args;
    std::shared_ptr<const MetaTerm> label;
    std::size_t hash = 0;
    bool has_meta = false;
  };

 private:
  static MetaTerm make(Node n);
  std::shared_ptr<const Node> n_;
};

using Term = MetaTerm;

/// Replaces level-0 bound variables of `abs`'s body with the given free
/// variable names (one per binder slot). Deeper levels shift down by one.
MetaTerm open_abs(const MetaTerm& abs, const std::vector<std::string>& names);

/// Opens with supply-generated names based on the binder hints; the chosen
/// names are appended to `names`.
MetaTerm open_abs_fresh(const MetaTerm& abs, NameSupply& supply, std::vector<std::string>& names);

/// Abstracts the named free variables out of `t` (inverse of open_abs).
MetaTerm close_over(const MetaTerm& t, const std::vector<std::string>& names,
                    const std::vector<MolType>& types, const std::vector<std::string>& hints);

/// Free (named) variables with their types.
std::map<std::string, MolType> free_vars(const MetaTerm& t);

/// Function symbols occurring in t (metavariables and variables are not
/// function symbols).
std::set<std::string> fun_symbols(const MetaTerm& t);

/// Metavariable names occurring in t.
std::set<std::string> metavars(const MetaTerm& t);

/// True iff some Fun node of t carries a label.
bool has_labels(const MetaTerm& t);

/// Deletes all labels.
MetaTerm forget_labels(const MetaTerm& t);

/// Reserves every free variable of t in the supply.
void reserve_free_vars(const MetaTerm& t, NameSupply& supply);

/// A subterm together with the binder variables crossed to reach it.
struct SubtermOccurrence {
  MetaTerm term;                    // opened form
  std::vector<std::string> crossed; // names introduced while descending
  bool proper;                      // false only for the root itself
};

/// Enumerates all subterm occurrences of t in a deterministic preorder,
/// opening binders with the supplied name source. Zero-binder abstractions
/// are transparent; non-trivial Abs nodes occur both as nodes and via their
/// bodies.
std::vector<SubtermOccurrence> subterm_occurrences(const MetaTerm& t, NameSupply& supply,
                                                   bool includeRoot = true);

}  // namespace hort

#endif  // HORT_TERM_HPP
