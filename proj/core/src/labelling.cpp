// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/labelling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "hort/oracle.hpp"
#include "hort/subst.hpp"
#include "hort/typecheck.hpp"

namespace hort {

Result<LabContext> LabContext::make(const ComputationSystem& cs, const SplitSpec& split) {
  LabContext ctx;
  ctx.cs_ = cs;
  ctx.split_ = split;
  ProjBuild pb;
  Result<ComputationSystem> wp = extend_with_projections(cs, cs.signature.mentioned_types(), &pb);
  if (!wp) return wp.error();
  ctx.with_proj_ = *wp;
  ctx.registry_ = pb.registry;
  ctx.rx_rules_ = split.rulesA;
  for (const auto& r : pb.rules) ctx.rx_rules_.push_back(r.name);
  return ctx;
}

Result<Term> tuple_of_set(const LabContext& ctx, const std::vector<Term>& terms,
                          const MolType& b) {
  auto it = ctx.proj().find(b);
  if (it == ctx.proj().end())
    return Error{"MissingProjection", "no projection symbols for type " + b.str()};
  const auto& [pairName, botName] = it->second;
  // Fixed total order: lexicographic on the canonical printed form.
  std::vector<Term> sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const Term& a, const Term& c) { return a.str() < c.str(); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Term acc = MetaTerm::fun(botName, {});
  for (auto rit = sorted.rbegin(); rit != sorted.rend(); ++rit)
    acc = MetaTerm::fun(pairName, {*rit, acc});
  return acc;
}

namespace {

struct Tracer {
  const LabContext& ctx;
  long long nodes = 0;
  std::map<Term, Term> memo;
  LabStatus status = LabStatus::Ok;

  bool in_b(const MetaTerm& t) const {
    return t.is_fun() && ctx.split().sigmaB.count(t.name()) != 0;
  }

  std::optional<Term> go(const Term& t) {
    if (status != LabStatus::Ok) return std::nullopt;
    auto mit = memo.find(t);
    if (mit != memo.end()) return mit->second;
    if (++nodes > ctx.trace_budget) {
      status = LabStatus::BudgetExhausted;
      return std::nullopt;
    }
    switch (t.kind()) {
      case MetaTerm::Kind::BVar:
      case MetaTerm::Kind::FVar:
        return t;
      case MetaTerm::Kind::Abs: {
        NameSupply supply;
        reserve_free_vars(t, supply);
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(t, supply, names);
        auto r = go(body);
        if (!r) return std::nullopt;
        Term closed = close_over(*r, names, t.binders(), t.hints());
        memo.emplace(t, closed);
        return closed;
      }
      case MetaTerm::Kind::Fun: {
        if (!in_b(t)) {
          std::vector<MetaTerm> as;
          for (const auto& a : t.args()) {
            auto r = go(a);
            if (!r) return std::nullopt;
            as.push_back(*r);
          }
          Term out = MetaTerm::fun(t.name(), std::move(as));
          memo.emplace(t, out);
          return out;
        }
        // B-headed: first make sure the reachable set is that of an SN term.
        OracleResult oc = sn_oracle(ctx.system(), {t}, 64, ctx.trace_budget);
        if (oc.status == OracleResult::Status::NonSN) {
          status = LabStatus::Undefined;
          return std::nullopt;
        }
        if (oc.status == OracleResult::Status::Unknown) {
          status = LabStatus::BudgetExhausted;
          return std::nullopt;
        }
        std::vector<Term> reach;
        std::deque<Term> queue{t};
        std::set<Term> seen{t};
        while (!queue.empty()) {
          Term u = queue.front();
          queue.pop_front();
          for (const auto& step : one_step_reducts(ctx.system(), u)) {
            if (seen.insert(step.result).second) {
              reach.push_back(step.result);
              queue.push_back(step.result);
              if (++nodes > ctx.trace_budget) {
                status = LabStatus::BudgetExhausted;
                return std::nullopt;
              }
            }
          }
        }
        std::vector<Term> traced;
        for (const auto& u : reach) {
          auto r = go(u);
          if (!r) return std::nullopt;
          traced.push_back(*r);
        }
        Result<MolType> ty = term_type(ctx.system().signature, t);
        if (!ty) {
          status = LabStatus::Undefined;
          return std::nullopt;
        }
        Result<Term> tup = tuple_of_set(ctx, traced, *ty);
        if (!tup) {
          status = LabStatus::Undefined;
          return std::nullopt;
        }
        memo.emplace(t, *tup);
        return *tup;
      }
      case MetaTerm::Kind::MetaApp:
        status = LabStatus::Undefined;  // trace is defined on terms only
        return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

LabResult trace(const LabContext& ctx, const Term& t) {
  Tracer tr{ctx};
  auto r = tr.go(t);
  if (!r) return {tr.status == LabStatus::Ok ? LabStatus::Undefined : tr.status, {}};
  return {LabStatus::Ok, *r};
}

namespace {

struct Labeller {
  const LabContext& ctx;
  Tracer tracer;
  NameSupply supply;

  explicit Labeller(const LabContext& c) : ctx(c), tracer{c} {}

  std::optional<Term> go(const Term& t) {
    switch (t.kind()) {
      case MetaTerm::Kind::BVar:
      case MetaTerm::Kind::FVar:
        return t;
      case MetaTerm::Kind::Abs: {
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(t, supply, names);
        auto b = go(body);
        if (!b) return std::nullopt;
        return close_over(*b, names, t.binders(), t.hints());
      }
      case MetaTerm::Kind::Fun: {
        std::vector<MetaTerm> as;
        for (const auto& a : t.args()) {
          auto r = go(a);
          if (!r) return std::nullopt;
          as.push_back(*r);
        }
        if (ctx.split().sigmaA.count(t.name())) {
          std::vector<MetaTerm> traced;
          for (const auto& a : t.args()) {
            auto r = tracer.go(a);
            if (!r) return std::nullopt;
            traced.push_back(*r);
          }
          Term label = MetaTerm::fun(t.name(), std::move(traced));
          return MetaTerm::fun_labelled(t.name(), std::move(as), label);
        }
        return MetaTerm::fun(t.name(), std::move(as));
      }
      case MetaTerm::Kind::MetaApp:
        return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

LabResult trace_label(const LabContext& ctx, const Term& t) {
  Labeller lab(ctx);
  reserve_free_vars(t, lab.supply);
  auto r = lab.go(t);
  if (!r)
    return {lab.tracer.status == LabStatus::Ok ? LabStatus::Undefined : lab.tracer.status, {}};
  return {LabStatus::Ok, *r};
}

Result<LabelledRule> label_rule(const LabContext& ctx, const Rule& rule, const Assignment& phi) {
  for (const auto& [m, img] : phi) {
    for (const auto& s : fun_symbols(img))
      if (ctx.split().sigmaB.count(s))
        return Error{"LayerViolation",
                     "assignment image for " + m + " mentions B-symbol " + s};
  }
  LayerCheck lc = check_A_layer(rule, ctx.split().sigmaA, ctx.split().theta);
  if (!lc.ok) return Error{"LayerViolation", "(" + rule.name + ") " + lc.offending};

  // Binders are opened on the way down so the label substitution only ever
  // sees locally closed meta-terms.
  NameSupply supply;
  for (const auto& [mv, img] : phi) reserve_free_vars(img, supply);
  std::function<Result<MetaTerm>(const MetaTerm&)> lab =
      [&](const MetaTerm& t) -> Result<MetaTerm> {
    switch (t.kind()) {
      case MetaTerm::Kind::BVar:
      case MetaTerm::Kind::FVar:
        return t;
      case MetaTerm::Kind::Abs: {
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(t, supply, names);
        Result<MetaTerm> b = lab(body);
        if (!b) return b;
        return close_over(*b, names, t.binders(), t.hints());
      }
      case MetaTerm::Kind::MetaApp: {
        std::vector<MetaTerm> as;
        for (const auto& a : t.args()) {
          Result<MetaTerm> r = lab(a);
          if (!r) return r;
          as.push_back(*r);
        }
        return MetaTerm::meta(t.name(), std::move(as));
      }
      case MetaTerm::Kind::Fun: {
        std::vector<MetaTerm> as;
        for (const auto& a : t.args()) {
          Result<MetaTerm> r = lab(a);
          if (!r) return r;
          as.push_back(*r);
        }
        if (ctx.split().sigmaA.count(t.name())) {
          Result<MetaTerm> label = substitute_metavars(phi, t);
          if (!label) return label;
          return MetaTerm::fun_labelled(t.name(), std::move(as), *label);
        }
        return MetaTerm::fun(t.name(), std::move(as));
      }
    }
    return t;
  };
  Result<MetaTerm> l = lab(rule.lhs);
  if (!l) return l.error();
  Result<MetaTerm> r = lab(rule.rhs);
  if (!r) return r.error();
  return LabelledRule{rule.name, *l, *r};
}

Result<bool> decl_label_reachable(const LabContext& ctx, const Term& v, const Term& w) {
  if (v == w) return false;  // the relation is irreflexive
  std::deque<std::pair<Term, int>> queue{{v, 0}};
  std::set<Term> seen{v};
  long long nodes = 0;
  while (!queue.empty()) {
    auto [u, d] = queue.front();
    queue.pop_front();
    if (d >= ctx.decl_depth) continue;
    std::vector<Term> succs;
    for (const auto& step : one_step_reducts(ctx.system_with_proj(), u, ctx.rx_rules()))
      succs.push_back(step.result);
    NameSupply supply;
    reserve_free_vars(u, supply);
    for (const auto& occ : subterm_occurrences(u, supply, /*includeRoot=*/false))
      succs.push_back(MetaTerm::unwrap(occ.term));
    for (const auto& s : succs) {
      if (s == w) return true;
      if (++nodes > ctx.decl_budget)
        return Error{"BudgetExhausted", "decreasing-step search overran its budget"};
      if (seen.insert(s).second) queue.push_back({s, d + 1});
    }
  }
  return false;
}

Result<bool> decl_step(const LabContext& ctx, const Term& lt, const Term& lu) {
  // Locate the unique differing label.
  std::optional<std::pair<Term, Term>> diff;
  std::function<bool(const MetaTerm&, const MetaTerm&)> cmp = [&](const MetaTerm& a,
                                                                  const MetaTerm& b) -> bool {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case MetaTerm::Kind::BVar:
        return a.level() == b.level() && a.slot() == b.slot();
      case MetaTerm::Kind::FVar:
        return a.name() == b.name();
      case MetaTerm::Kind::Abs:
        return a.binders() == b.binders() && cmp(a.body(), b.body());
      case MetaTerm::Kind::MetaApp: {
        if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
        for (size_t i = 0; i < a.args().size(); ++i)
          if (!cmp(a.args()[i], b.args()[i])) return false;
        return true;
      }
      case MetaTerm::Kind::Fun: {
        if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
        bool la = a.label() != nullptr, lb = b.label() != nullptr;
        if (la != lb) return false;
        if (la && !(*a.label() == *b.label())) {
          if (diff) return false;  // more than one differing label
          diff = {{*a.label(), *b.label()}};
        }
        for (size_t i = 0; i < a.args().size(); ++i)
          if (!cmp(a.args()[i], b.args()[i])) return false;
        return true;
      }
    }
    return false;
  };
  if (!cmp(lt, lu) || !diff)
    return Error{"NotDeclShaped", "terms do not differ in exactly one label"};
  return decl_label_reachable(ctx, diff->first, diff->second);
}

namespace {

// Label-aware pattern matching: labels of the subject are ignored on Fun
// nodes of the pattern, and meta leaves capture labelled subtrees.
struct LabMatcher {
  NameSupply& supply;
  std::set<std::string> pattern_bound;
  Assignment theta;  // labelled images

  bool go(const MetaTerm& p, const MetaTerm& s) {
    switch (p.kind()) {
      case MetaTerm::Kind::FVar:
        return s.is_fvar() && s.name() == p.name();
      case MetaTerm::Kind::BVar:
        return false;
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
        std::vector<std::string> names;
        std::vector<MolType> types;
        for (const auto& a : p.args()) {
          names.push_back(a.name());
          types.push_back(a.var_type());
        }
        for (const auto& [v, ty] : free_vars(s))
          if (pattern_bound.count(v) &&
              std::find(names.begin(), names.end(), v) == names.end())
            return false;
        MetaTerm image = close_over(s, names, types, names);
        auto it = theta.find(p.name());
        if (it != theta.end()) return it->second == image;
        theta.emplace(p.name(), image);
        return true;
      }
    }
    return false;
  }
};

struct LabelledStepper {
  const LabContext& ctx;
  bool failed_budget = false;

  // lext theta: homomorphic, with meta images relabelled after substitution.
  std::optional<Term> lext(const Assignment& thetaLab, const MetaTerm& t, NameSupply& supply) {
    switch (t.kind()) {
      case MetaTerm::Kind::BVar:
      case MetaTerm::Kind::FVar:
        return t;
      case MetaTerm::Kind::Abs: {
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(t, supply, names);
        auto b = lext(thetaLab, body, supply);
        if (!b) return std::nullopt;
        return close_over(*b, names, t.binders(), t.hints());
      }
      case MetaTerm::Kind::Fun: {
        std::vector<MetaTerm> as;
        for (const auto& a : t.args()) {
          auto r = lext(thetaLab, a, supply);
          if (!r) return std::nullopt;
          as.push_back(*r);
        }
        if (t.label()) return MetaTerm::fun_labelled(t.name(), std::move(as), *t.label());
        return MetaTerm::fun(t.name(), std::move(as));
      }
      case MetaTerm::Kind::MetaApp: {
        auto it = thetaLab.find(t.name());
        if (it == thetaLab.end()) return std::nullopt;
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(it->second, supply, names);
        std::map<std::string, MetaTerm> sub;
        for (size_t i = 0; i < t.args().size(); ++i) {
          auto a = lext(thetaLab, t.args()[i], supply);
          if (!a) return std::nullopt;
          sub.emplace(names[i], *a);
        }
        MetaTerm plugged = substitute_vars(body, sub);
        LabResult relab = trace_label(ctx, forget_labels(plugged));
        if (relab.status != LabStatus::Ok) {
          failed_budget = true;
          return std::nullopt;
        }
        return relab.term;
      }
    }
    return std::nullopt;
  }

  // Tries one labelled rule instance at the (opened) subterm u; returns the
  // labelled contractum on success.
  std::optional<Term> rule_step(const Rule& rule, const MetaTerm& u, NameSupply& supply) {
    // Forget-level match fixes the underlying assignment.
    auto mf = match_second_order(rule.lhs, forget_labels(u), rule.context, supply);
    if (!mf.ok() || !mf->has_value()) return std::nullopt;
    const Assignment& thetaF = **mf;
    // Labelled images, cut out of the labelled subject.
    LabMatcher lm{supply, {}, {}};
    if (!lm.go(rule.lhs, u)) return std::nullopt;
    Assignment thetaLab = lm.theta;
    // Meta images must be labelling-consistent (the labelled substitution
    // relabels images, so only such subjects are rule instances).
    for (const auto& [m, img] : thetaLab) {
      NameSupply s2;
      reserve_free_vars(img, s2);
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(img, s2, names);
      LabResult relab = trace_label(ctx, forget_labels(body));
      if (relab.status != LabStatus::Ok) {
        failed_budget = true;
        return std::nullopt;
      }
      if (!(relab.term == body)) return std::nullopt;
    }
    // phi: solved from the labels of A-headed lhs subterms; unconstrained
    // metavariables default to the trace of their forget-level image.
    Assignment phi;
    NameSupply supphi;
    std::function<bool(const MetaTerm&, const MetaTerm&)> solve =
        [&](const MetaTerm& p, const MetaTerm& s) -> bool {
      if (p.is_abs() && s.is_abs()) {
        std::vector<std::string> names;
        MetaTerm pb = open_abs_fresh(p, supphi, names);
        return solve(pb, open_abs(s, names));
      }
      if (p.is_fun()) {
        if (!s.is_fun() || s.name() != p.name()) return false;
        if (ctx.split().sigmaA.count(p.name())) {
          if (!s.label()) return false;
          auto m = match_second_order(p, *s.label(), rule.context, supphi);
          if (!m.ok() || !m->has_value()) return false;
          for (const auto& [k, img] : **m) {
            auto it = phi.find(k);
            if (it != phi.end()) {
              if (!(it->second == img)) return false;
            } else {
              phi.emplace(k, img);
            }
          }
        }
        for (size_t i = 0; i < p.args().size(); ++i)
          if (!solve(p.args()[i], s.args()[i])) return false;
        return true;
      }
      return true;  // metas and variables carry no labels
    };
    if (!solve(MetaTerm::wrap(rule.lhs), MetaTerm::wrap(u))) return std::nullopt;
    for (const auto& [m, img] : thetaF) {
      if (phi.count(m)) continue;
      NameSupply s3;
      reserve_free_vars(img, s3);
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(img, s3, names);
      LabResult tr = trace(ctx, body);
      if (tr.status != LabStatus::Ok) {
        failed_budget = true;
        return std::nullopt;
      }
      phi.emplace(m, close_over(tr.term, names, img.binders(), img.hints()));
    }
    Result<LabelledRule> lr = label_rule(ctx, rule, phi);
    if (!lr.ok()) return std::nullopt;
    return lext(thetaLab, lr->rhs, supply);
  }

  void steps_at(const MetaTerm& u, const std::function<Term(const Term&)>& rebuild,
                std::vector<Term>& out) {
    // Labelled rule steps.
    for (const auto& rule : ctx.system().rules) {
      NameSupply supply;
      reserve_free_vars(u, supply);
      if (auto r = rule_step(rule, u, supply)) out.push_back(rebuild(*r));
    }
    // Decreasing steps at a labelled node: enumerate the bounded closure of
    // reduction-plus-subterm from the label.
    if (u.is_fun() && u.label()) {
      std::deque<std::pair<Term, int>> queue{{*u.label(), 0}};
      std::set<Term> seen{*u.label()};
      long long nodes = 0;
      while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (d >= ctx.decl_depth) continue;
        std::vector<Term> succs;
        for (const auto& step : one_step_reducts(ctx.system_with_proj(), v, ctx.rx_rules()))
          succs.push_back(step.result);
        NameSupply supply;
        reserve_free_vars(v, supply);
        for (const auto& occ : subterm_occurrences(v, supply, false))
          succs.push_back(MetaTerm::unwrap(occ.term));
        for (const auto& w : succs) {
          if (++nodes > ctx.decl_budget) {
            failed_budget = true;
            return;
          }
          if (seen.insert(w).second) {
            out.push_back(rebuild(MetaTerm::fun_labelled(u.name(), u.args(), w)));
            queue.push_back({w, d + 1});
          }
        }
      }
    }
    // Congruence.
    if (u.is_fun()) {
      for (size_t i = 0; i < u.args().size(); ++i) {
        const MetaTerm& arg = u.args()[i];
        NameSupply supply;
        reserve_free_vars(u, supply);
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(arg, supply, names);
        steps_at(body,
                 [&](const Term& repl) {
                   std::vector<MetaTerm> as = u.args();
                   as[i] = close_over(repl, names, arg.binders(), arg.hints());
                   Term nu = u.label()
                                 ? MetaTerm::fun_labelled(u.name(), std::move(as), *u.label())
                                 : MetaTerm::fun(u.name(), std::move(as));
                   return rebuild(nu);
                 },
                 out);
      }
    }
  }
};

}  // namespace

Result<std::vector<Term>> labelled_one_step(const LabContext& ctx, const Term& s) {
  LabelledStepper st{ctx};
  std::vector<Term> out;
  st.steps_at(s, [](const Term& t) { return t; }, out);
  if (st.failed_budget) return Error{"BudgetExhausted", "labelled step enumeration overran"};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Result<bool> rx_reaches(const LabContext& ctx, const Term& from, const Term& to) {
  if (from == to) return true;
  std::deque<Term> queue{from};
  std::set<Term> seen{from};
  long long nodes = 0;
  while (!queue.empty()) {
    Term u = queue.front();
    queue.pop_front();
    for (const auto& step : one_step_reducts(ctx.system_with_proj(), u, ctx.rx_rules())) {
      if (step.result == to) return true;
      if (++nodes > ctx.rx_search_budget)
        return Error{"BudgetExhausted", "A+Proj reachability search overran"};
      if (seen.insert(step.result).second) queue.push_back(step.result);
    }
  }
  return false;
}

}  // namespace

Result<SimulationResult> simulation_check(const LabContext& ctx, const Term& s, const Term& t) {
  SimulationResult res;
  // Validate s -> t and recover the redex position.
  std::optional<Redex> redex;
  for (const auto& step : one_step_reducts(ctx.system(), s)) {
    if (step.result == t) {
      redex = step.redex;
      break;
    }
  }
  if (!redex) return Error{"NotAStep", "t is not a one-step reduct of s"};

  // Lemma about labelled simulation: walk down the redex path; each A-symbol
  // on the path must admit a decreasing step between its old and new label,
  // and the redex itself a labelled rule step.
  std::function<Result<int>(const Term&, const Term&, size_t)> sim =
      [&](const Term& su, const Term& tu, size_t depth) -> Result<int> {
    if (depth == redex->position.size()) {
      LabResult a = trace_label(ctx, su);
      LabResult b = trace_label(ctx, tu);
      if (a.status != LabStatus::Ok || b.status != LabStatus::Ok)
        return Error{"BudgetExhausted", "trace labelling at the redex"};
      // The labelled-substitution equation at the redex (both sides).
      const Rule* rule = ctx.system().rule(redex->rule);
      LabelledStepper st{ctx};
      NameSupply supply;
      reserve_free_vars(su, supply);
      auto viaRule = st.rule_step(*rule, a.term, supply);
      res.key_equation = viaRule.has_value() && *viaRule == b.term;
      if (!res.key_equation) {
        // Fall back to the enumerated relation.
        Result<std::vector<Term>> succ = labelled_one_step(ctx, a.term);
        if (!succ.ok()) return succ.error();
        if (std::find(succ->begin(), succ->end(), b.term) == succ->end())
          return Error{"SimulationFailed",
                       "labelled redex does not step to the labelled contractum"};
      }
      return 1;
    }
    int i = redex->position[depth];
    if (!su.is_fun() || !tu.is_fun() || su.name() != tu.name())
      return Error{"SimulationFailed", "mismatched context along the redex path"};
    const MetaTerm& sa = su.args()[i];
    const MetaTerm& ta = tu.args()[i];
    NameSupply supply;
    reserve_free_vars(su, supply);
    reserve_free_vars(tu, supply);
    std::vector<std::string> names;
    MetaTerm sb = open_abs_fresh(sa, supply, names);
    MetaTerm tb = open_abs(ta, names);
    Result<int> inner = sim(sb, tb, depth + 1);
    if (!inner.ok()) return inner;
    int steps = *inner;
    if (ctx.split().sigmaA.count(su.name())) {
      // Label moves from f(..trace(s_i)..) to f(..trace(t_i)..).
      std::vector<MetaTerm> tracedS, tracedT;
      for (size_t k = 0; k < su.args().size(); ++k) {
        LabResult trs = trace(ctx, su.args()[k]);
        LabResult trt = trace(ctx, tu.args()[k]);
        if (trs.status != LabStatus::Ok || trt.status != LabStatus::Ok)
          return Error{"BudgetExhausted", "trace under the redex context"};
        tracedS.push_back(trs.term);
        tracedT.push_back(trt.term);
      }
      Term v = MetaTerm::fun(su.name(), std::move(tracedS));
      Term w = MetaTerm::fun(tu.name(), std::move(tracedT));
      if (!(v == w)) {
        Result<bool> d = decl_label_reachable(ctx, v, w);
        if (!d.ok()) return d.error();
        if (!*d)
          return Error{"SimulationFailed", "label " + v.str() + " does not decrease to " +
                                               w.str()};
        ++steps;
      }
    }
    return steps;
  };

  Result<int> steps = sim(s, t, 0);
  if (!steps.ok()) {
    if (steps.error().code == "BudgetExhausted") return steps.error();
    res.ok = false;
    res.detail = steps.error().message;
    return res;
  }
  res.labelled_steps = *steps;

  LabResult ts = trace(ctx, s);
  LabResult tt = trace(ctx, t);
  if (ts.status != LabStatus::Ok || tt.status != LabStatus::Ok)
    return Error{"BudgetExhausted", "trace of the endpoints"};
  Result<bool> mon = rx_reaches(ctx, ts.term, tt.term);
  if (!mon.ok()) return mon.error();
  res.plab_mon = *mon;
  res.ok = res.labelled_steps >= 1 && res.plab_mon;
  if (!res.ok && res.detail.empty()) res.detail = "trace(s) does not reach trace(t) by A+Proj";
  return res;
}

}  // namespace hort
