// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/oracle.hpp"

#include <unordered_set>

#include "hort/subst.hpp"

namespace hort {

namespace {

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

bool contains_subterm(const Term& t, const Term& needle) {
  if (t == needle) return true;
  switch (t.kind()) {
    case MetaTerm::Kind::Abs:
      return contains_subterm(t.body(), needle);
    case MetaTerm::Kind::Fun:
    case MetaTerm::Kind::MetaApp:
      for (const auto& a : t.args())
        if (contains_subterm(a, needle)) return true;
      return false;
    default:
      return false;
  }
}

struct Explorer {
  const ComputationSystem& cs;
  int depth_budget;
  long long width_budget;
  OracleResult res;
  std::vector<Term> path;
  std::unordered_set<Term, TermHash> proven_sn;

  // Returns true when fully explored (t is SN below budgets), false when a
  // budget was hit or a loop surfaced (res records which).
  bool dfs(const Term& t) {
    if (res.status == OracleResult::Status::NonSN) return false;
    if (proven_sn.count(t)) return true;
    for (size_t i = 0; i < path.size(); ++i) {
      if (contains_subterm(t, path[i])) {
        res.status = OracleResult::Status::NonSN;
        res.witness = path;
        res.witness.push_back(t);
        res.loop_start = static_cast<int>(i);
        return false;
      }
    }
    if (static_cast<int>(path.size()) >= depth_budget) {
      res.budget_exhausted = true;
      return false;
    }
    if (++res.nodes_explored > width_budget) {
      res.budget_exhausted = true;
      return false;
    }
    res.max_depth_reached = std::max(res.max_depth_reached, static_cast<int>(path.size()));
    bool complete = true;
    path.push_back(t);
    for (const auto& step : one_step_reducts(cs, t)) {
      if (!dfs(step.result)) complete = false;
      if (res.status == OracleResult::Status::NonSN) break;
    }
    path.pop_back();
    if (complete && res.status != OracleResult::Status::NonSN) proven_sn.insert(t);
    return complete;
  }
};

}  // namespace

OracleResult sn_oracle(const ComputationSystem& cs, const std::vector<Term>& seeds,
                       int depthBudget, long long widthBudget) {
  Explorer ex{cs, depthBudget, widthBudget, {}, {}, {}};
  bool complete = true;
  for (const auto& s : seeds) {
    if (!ex.dfs(s)) complete = false;
    if (ex.res.status == OracleResult::Status::NonSN) return ex.res;
  }
  ex.res.status = complete ? OracleResult::Status::SN : OracleResult::Status::Unknown;
  return ex.res;
}

std::vector<Term> enumerate_terms(const Signature& sig, const MolType& type, int depth,
                                  const std::vector<std::pair<std::string, MolType>>& env,
                                  bool constructorsOnly) {
  std::vector<Term> out;
  if (depth <= 0) return out;
  for (const auto& [n, ty] : env)
    if (ty == type) out.push_back(MetaTerm::fvar(n, ty));
  for (const auto& s : sig.symbols()) {
    if (constructorsOnly && sig.defined(s)) continue;
    const FunType& ft = *sig.lookup(s);
    if (ft.result != type) continue;
    if (depth == 1 && !ft.args.empty()) continue;
    // Argument candidates position by position; binder positions extend the
    // environment with canonical variables.
    std::vector<std::vector<Term>> cands;
    bool feasible = true;
    for (size_t i = 0; i < ft.args.size(); ++i) {
      const ArgType& at = ft.args[i];
      auto env2 = env;
      std::vector<std::string> names;
      std::vector<MolType> types = at.binders;
      std::vector<std::string> hints;
      for (size_t j = 0; j < at.binders.size(); ++j) {
        std::string vn = "b" + std::to_string(i) + "_" + std::to_string(j);
        names.push_back(vn);
        hints.push_back("x");
        env2.emplace_back(vn, at.binders[j]);
      }
      std::vector<Term> bodies = enumerate_terms(sig, at.body, depth - 1, env2, constructorsOnly);
      std::vector<Term> wrapped;
      for (const auto& b : bodies) wrapped.push_back(close_over(b, names, types, hints));
      if (wrapped.empty()) {
        feasible = false;
        break;
      }
      cands.push_back(std::move(wrapped));
    }
    if (!feasible) continue;
    // Cross product, deterministic order.
    std::vector<std::vector<Term>> tuples{{}};
    for (const auto& c : cands) {
      std::vector<std::vector<Term>> next;
      for (const auto& partial : tuples)
        for (const auto& x : c) {
          auto t2 = partial;
          t2.push_back(x);
          next.push_back(std::move(t2));
        }
      tuples = std::move(next);
    }
    for (auto& tup : tuples) out.push_back(MetaTerm::fun(s, std::move(tup)));
  }
  return out;
}

std::vector<Term> lhs_ground_instances(const ComputationSystem& cs, int imageDepth,
                                       int maxSeedsPerRule) {
  std::vector<Term> seeds;
  for (const auto& r : cs.rules) {
    // Candidate images per metavariable.
    std::vector<std::vector<MetaTerm>> images;
    bool feasible = true;
    for (const auto& d : r.context.decls()) {
      std::vector<std::pair<std::string, MolType>> env;
      std::vector<std::string> names;
      std::vector<std::string> hints;
      for (size_t j = 0; j < d.arg_types.size(); ++j) {
        std::string vn = "a" + std::to_string(j);
        names.push_back(vn);
        hints.push_back("x");
        env.emplace_back(vn, d.arg_types[j]);
      }
      std::vector<Term> bodies = enumerate_terms(cs.signature, d.result, imageDepth, env);
      std::vector<MetaTerm> abs;
      for (const auto& b : bodies) abs.push_back(close_over(b, names, d.arg_types, hints));
      if (abs.empty()) {
        feasible = false;
        break;
      }
      images.push_back(std::move(abs));
    }
    if (!feasible) {
      if (r.context.decls().empty()) seeds.push_back(r.lhs);
      continue;
    }
    std::vector<Assignment> thetas{{}};
    for (size_t k = 0; k < images.size(); ++k) {
      std::vector<Assignment> next;
      for (const auto& th : thetas) {
        for (const auto& img : images[k]) {
          if (static_cast<int>(next.size()) > maxSeedsPerRule) break;
          Assignment t2 = th;
          t2.emplace(r.context.decls()[k].name, img);
          next.push_back(std::move(t2));
        }
      }
      thetas = std::move(next);
      if (static_cast<int>(thetas.size()) > maxSeedsPerRule)
        thetas.resize(maxSeedsPerRule);
    }
    int added = 0;
    for (const auto& th : thetas) {
      if (added >= maxSeedsPerRule) break;
      Result<MetaTerm> inst = substitute_metavars(th, r.lhs);
      if (inst.ok()) {
        seeds.push_back(*inst);
        ++added;
      }
    }
  }
  return seeds;
}

LoopSearchResult find_loop(const ComputationSystem& cs, int imageDepth, int stepBudget,
                           int maxSeedsPerRule) {
  std::vector<Term> seeds = lhs_ground_instances(cs, imageDepth, maxSeedsPerRule);
  OracleResult r = sn_oracle(cs, seeds, stepBudget, 100000);
  if (r.status == OracleResult::Status::NonSN) return {true, std::move(r)};
  return {false, {}};
}

}  // namespace hort
