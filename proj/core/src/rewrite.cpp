// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/rewrite.hpp"

#include <functional>

#include "hort/subst.hpp"

namespace hort {

namespace {

struct ReductsWalker {
  const ComputationSystem& cs;
  const std::vector<std::string>* filter;
  NameSupply& supply;
  std::vector<Step> out;

  bool enabled(const Rule& r) const {
    if (!filter) return true;
    for (const auto& n : *filter)
      if (n == r.name) return true;
    return false;
  }

  // Visits the opened subterm u at `pos`; `rebuild` plugs a replacement for u
  // back into the whole term.
  void visit(const MetaTerm& u, std::vector<int>& pos,
             const std::function<MetaTerm(const MetaTerm&)>& rebuild) {
    for (const auto& r : cs.rules) {
      if (!enabled(r)) continue;
      auto m = match_second_order(r.lhs, u, r.context, supply);
      if (m.ok() && m->has_value()) {
        Result<MetaTerm> contractum = substitute_metavars(**m, r.rhs);
        if (contractum.ok()) out.push_back({Redex{pos, r.name, **m}, rebuild(*contractum)});
      }
    }
    if (u.is_fun()) {
      for (size_t i = 0; i < u.args().size(); ++i) {
        const MetaTerm& arg = u.args()[i];
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(arg, supply, names);
        pos.push_back(static_cast<int>(i));
        visit(body, pos, [&](const MetaTerm& repl) {
          MetaTerm newArg = close_over(repl, names, arg.binders(), arg.hints());
          std::vector<MetaTerm> as = u.args();
          as[i] = newArg;
          MetaTerm newU = u.label()
                              ? MetaTerm::fun_labelled(u.name(), std::move(as), *u.label())
                              : MetaTerm::fun(u.name(), std::move(as));
          return rebuild(newU);
        });
        pos.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Step> one_step_reducts(const ComputationSystem& cs, const Term& t,
                                   const std::vector<std::string>& ruleNames) {
  NameSupply supply;
  reserve_free_vars(t, supply);
  ReductsWalker w{cs, &ruleNames, supply, {}};
  std::vector<int> pos;
  w.visit(t, pos, [](const MetaTerm& r) { return r; });
  return w.out;
}

std::vector<Step> one_step_reducts(const ComputationSystem& cs, const Term& t) {
  NameSupply supply;
  reserve_free_vars(t, supply);
  ReductsWalker w{cs, nullptr, supply, {}};
  std::vector<int> pos;
  w.visit(t, pos, [](const MetaTerm& r) { return r; });
  return w.out;
}

namespace {

// Contracts the leftmost-outermost redex; returns nullopt on normal forms.
std::optional<MetaTerm> contract_one(const ComputationSystem& cs, const MetaTerm& u,
                                     NameSupply& supply) {
  for (const auto& r : cs.rules) {
    auto m = match_second_order(r.lhs, u, r.context, supply);
    if (m.ok() && m->has_value()) {
      Result<MetaTerm> contractum = substitute_metavars(**m, r.rhs);
      if (contractum.ok()) return *contractum;
    }
  }
  if (u.is_fun()) {
    for (size_t i = 0; i < u.args().size(); ++i) {
      const MetaTerm& arg = u.args()[i];
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(arg, supply, names);
      if (auto repl = contract_one(cs, body, supply)) {
        std::vector<MetaTerm> as = u.args();
        as[i] = close_over(*repl, names, arg.binders(), arg.hints());
        return u.label() ? MetaTerm::fun_labelled(u.name(), std::move(as), *u.label())
                         : MetaTerm::fun(u.name(), std::move(as));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizeOutcome normalize(const ComputationSystem& cs, const Term& t, int fuel) {
  NormalizeOutcome out{t, 0, false};
  while (true) {
    if (out.steps >= fuel) {
      NameSupply probe;
      reserve_free_vars(out.term, probe);
      if (contract_one(cs, out.term, probe)) out.budget_exhausted = true;
      return out;
    }
    NameSupply supply;
    reserve_free_vars(out.term, supply);
    auto next = contract_one(cs, out.term, supply);
    if (!next) return out;
    out.term = *next;
    ++out.steps;
  }
}

}  // namespace hort
