// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/pattern.hpp"

namespace hort {

namespace {

// A variable that was bound in the surrounding meta-term still counts as a
// bound variable when a sub-meta-term is inspected on its own, so both BVar
// and FVar argument forms qualify.
bool check(const MetaTerm& t, bool distinct) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      return true;
    case MetaTerm::Kind::Abs:
      return check(t.body(), distinct);
    case MetaTerm::Kind::Fun:
      for (const auto& a : t.args())
        if (!check(a, distinct)) return false;
      return true;
    case MetaTerm::Kind::MetaApp: {
      for (const auto& a : t.args())
        if (!a.is_bvar() && !a.is_fvar()) return false;
      if (distinct) {
        for (size_t i = 0; i < t.args().size(); ++i)
          for (size_t j = i + 1; j < t.args().size(); ++j)
            if (t.args()[i] == t.args()[j]) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_second_order_pattern(const MetaTerm& t) { return check(t, true); }
bool is_relaxed_pattern(const MetaTerm& t) { return check(t, false); }

}  // namespace hort
