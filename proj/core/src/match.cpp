// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/match.hpp"

#include <algorithm>
#include <set>

#include "hort/pattern.hpp"

namespace hort {

namespace {

struct Matcher {
  NameSupply& supply;
  std::set<std::string> pattern_bound;
  Assignment theta;

  bool go(const MetaTerm& p, const MetaTerm& s) {
    switch (p.kind()) {
      case MetaTerm::Kind::FVar:
        return s.is_fvar() && s.name() == p.name();
      case MetaTerm::Kind::BVar:
        return false;  // binders are opened before descending
      case MetaTerm::Kind::Abs: {
        if (!s.is_abs() || s.binders() != p.binders()) return false;
        std::vector<std::string> names;
        MetaTerm pb = open_abs_fresh(p, supply, names);
        MetaTerm sb = open_abs(s, names);
        for (const auto& n : names) pattern_bound.insert(n);
        return go(pb, sb);
      }
      case MetaTerm::Kind::Fun: {
        if (!s.is_fun() || s.name() != p.name() || s.args().size() != p.args().size())
          return false;
        for (size_t i = 0; i < p.args().size(); ++i)
          if (!go(p.args()[i], s.args()[i])) return false;
        return true;
      }
      case MetaTerm::Kind::MetaApp: {
        // M[x1..xn] against s: abstract the xs out of s.
        std::vector<std::string> names;
        std::vector<MolType> types;
        std::vector<std::string> hints;
        for (const auto& a : p.args()) {
          names.push_back(a.name());
          types.push_back(a.var_type());
          hints.push_back(a.name());
        }
        for (const auto& [v, ty] : free_vars(s)) {
          if (pattern_bound.count(v) &&
              std::find(names.begin(), names.end(), v) == names.end())
            return false;  // escaped pattern binder
        }
        MetaTerm image = close_over(s, names, types, hints);
        auto it = theta.find(p.name());
        if (it != theta.end()) return it->second == image;
        theta.emplace(p.name(), image);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

Result<std::optional<Assignment>> match_second_order(const MetaTerm& pattern,
                                                     const MetaTerm& subject,
                                                     const MetaContext& context,
                                                     NameSupply& supply) {
  if (!is_second_order_pattern(pattern))
    return Error{"NotAPattern", pattern.str() + " is not a second-order pattern"};
  Matcher m{supply, {}, {}};
  if (!m.go(pattern, subject)) return std::optional<Assignment>{};
  // Metavariables absent from the pattern (if any in context) stay unbound;
  // rule validation guarantees the lhs covers everything the rhs needs.
  (void)context;
  return std::optional<Assignment>{std::move(m.theta)};
}

Result<std::optional<Assignment>> match_second_order(const MetaTerm& pattern,
                                                     const MetaTerm& subject,
                                                     const MetaContext& context) {
  NameSupply supply;
  reserve_free_vars(subject, supply);
  reserve_free_vars(pattern, supply);
  return match_second_order(pattern, subject, context, supply);
}

}  // namespace hort
