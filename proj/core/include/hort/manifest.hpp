// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_MANIFEST_HPP
#define HORT_MANIFEST_HPP

#include "hort/schema.hpp"
#include "hort/system.hpp"

namespace hort {

/// Manifest grammar (line oriented, # comments):
///   type T/2
///   atomic N
///   f : (N -> F(N)), N -> F(N)
///   f : -> N                      (nullary constant; "f : N" also works)
///   (name) lhs -> rhs             (binders x.t, meta-applications M[t,...],
///                                  infix sugar t@s for app and t+s for plus)
///   split auto-fo | split A r1 r2 ...
///   option subterm stable|structural
///   option clause5 lex|multiset
///   option weights-bound N | option oracle-depth N | option oracle-width N
///   option type-order default|identity
///   precedence f > g | precedence f = g
struct ManifestOptions {
  SubtermVariant subterm = SubtermVariant::Stable;
  bool subterm_set = false;
  Clause5Ext clause5 = Clause5Ext::Lex;
  int weights_bound = 2;
  int oracle_depth = 8;
  long long oracle_width = 10000;
  bool identity_type_order = false;
};

enum class SplitMode { None, AutoFo, Explicit };

struct Manifest {
  std::vector<std::pair<std::string, int>> type_ctors;
  std::vector<std::string> atomics;
  ComputationSystem system;
  SplitMode split_mode = SplitMode::None;
  std::vector<std::string> split_a;
  ManifestOptions options;
  std::vector<std::pair<std::string, std::string>> prec_gt, prec_eq;

  bool structurally_equal(const Manifest& o) const;
};

/// Deterministic parser with line/column diagnostics; the result has been
/// validated (every rule invariant holds).
Result<Manifest> parse_manifest(const std::string& text);

/// Prints a manifest back into the grammar; parse(print(m)) equals m.
std::string print_manifest(const Manifest& m);

/// Parses a closed term against the manifest's signature (CLI --term).
Result<MetaTerm> parse_term(const Manifest& m, const std::string& text);

}  // namespace hort

#endif  // HORT_MANIFEST_HPP
