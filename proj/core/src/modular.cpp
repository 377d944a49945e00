// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/modular.hpp"

#include <algorithm>
#include <sstream>

#include "hort/fo_dp.hpp"
#include "hort/fo_format.hpp"
#include "hort/pattern.hpp"

namespace hort {

namespace {

std::set<std::string> heads(const ComputationSystem& cs, const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& n : names) {
    const Rule* r = cs.rule(n);
    if (r) out.insert(r->head());
  }
  return out;
}

std::set<std::string> rule_symbols(const Rule& r) {
  auto out = fun_symbols(r.lhs);
  for (const auto& s : fun_symbols(r.rhs)) out.insert(s);
  return out;
}

}  // namespace

Result<SplitSpec> make_split(const ComputationSystem& cs,
                             const std::vector<std::string>& aRuleNames) {
  SplitSpec sp;
  for (const auto& n : aRuleNames) {
    if (!cs.rule(n)) return Error{"InvalidSplit", "unknown rule (" + n + ") in split"};
    sp.rulesA.push_back(n);
  }
  for (const auto& r : cs.rules)
    if (std::find(sp.rulesA.begin(), sp.rulesA.end(), r.name) == sp.rulesA.end())
      sp.rulesB.push_back(r.name);
  sp.sigmaA = heads(cs, sp.rulesA);
  sp.sigmaB = heads(cs, sp.rulesB);
  for (const auto& s : sp.sigmaA)
    if (sp.sigmaB.count(s))
      return Error{"InvalidSplit", "symbol " + s + " heads rules in both parts"};
  for (const auto& s : cs.signature.symbols())
    if (!sp.sigmaA.count(s) && !sp.sigmaB.count(s)) sp.theta.insert(s);
  for (const auto& n : sp.rulesA) {
    for (const auto& s : rule_symbols(*cs.rule(n)))
      if (sp.sigmaB.count(s))
        return Error{"InvalidSplit", "A-rule (" + n + ") mentions B-symbol " + s};
  }
  return sp;
}

SplitSpec split_fo_ho(const ComputationSystem& cs) {
  // Candidate A-symbols: first-order defined symbols; shrink until no A-rule
  // mentions a defined symbol outside the candidate set.
  std::set<std::string> cand;
  std::set<std::string> defined = cs.signature.defined_symbols();
  for (const auto& s : defined)
    if (cs.signature.lookup(s)->first_order()) cand.insert(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : cs.rules) {
      if (!cand.count(r.head())) continue;
      for (const auto& s : rule_symbols(r)) {
        if (defined.count(s) && !cand.count(s)) {
          cand.erase(r.head());
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<std::string> aNames;
  for (const auto& r : cs.rules)
    if (cand.count(r.head())) aNames.push_back(r.name);
  Result<SplitSpec> sp = make_split(cs, aNames);
  return sp.ok() ? *sp : SplitSpec{};
}

LayerCheck check_A_layer(const Rule& rule, const std::set<std::string>& sigmaA,
                         const std::set<std::string>& theta) {
  LayerCheck out;
  NameSupply supply;
  auto scan = [&](const MetaTerm& side) {
    for (const auto& occ : subterm_occurrences(side, supply)) {
      MetaTerm u = MetaTerm::unwrap(occ.term);
      if (!u.is_fun() || !sigmaA.count(u.name())) continue;
      for (const auto& s : fun_symbols(u)) {
        if (!sigmaA.count(s) && !theta.count(s)) {
          out.ok = false;
          out.offending = u.str() + " uses foreign symbol " + s;
          return;
        }
      }
      for (const auto& a : u.args()) {
        if (!is_relaxed_pattern(a)) {
          out.ok = false;
          out.offending = u.str() + " has a non-pattern argument " +
                          MetaTerm::unwrap(a).str();
          return;
        }
      }
    }
  };
  scan(rule.lhs);
  if (out.ok) scan(rule.rhs);
  return out;
}

namespace {

std::string type_suffix(const MolType& t) {
  std::string s = t.str();
  std::string out;
  for (char c : s) {
    if (c == '(' || c == ',') out += '_';
    else if (c == ')' || c == ' ') continue;
    else out += c;
  }
  return out;
}

}  // namespace

Result<ProjBuild> build_projection_rules(const Signature& sig, const std::set<MolType>& types) {
  ProjBuild out;
  std::set<std::string> used;
  for (const auto& s : sig.symbols()) used.insert(s);
  for (const auto& b : types) {
    std::string suffix = type_suffix(b);
    std::string pairName = "pair_" + suffix;
    std::string botName = "bot_" + suffix;
    int bump = 0;
    while (used.count(pairName) || used.count(botName)) {
      if (sig.declared(pairName) || sig.declared(botName))
        return Error{"NameClash", "projection symbol name " + pairName + " or " + botName +
                                      " collides with a declared symbol"};
      ++bump;
      pairName = "pair_" + suffix + std::to_string(bump);
      botName = "bot_" + suffix + std::to_string(bump);
    }
    used.insert(pairName);
    used.insert(botName);
    out.registry[b] = {pairName, botName};
    out.symbols.push_back({pairName, FunType{{ArgType{{}, b}, ArgType{{}, b}}, b}});
    out.symbols.push_back({botName, FunType{{}, b}});

    MetaContext ctx;
    ctx.declare({"M1", {}, b});
    ctx.declare({"M2", {}, b});
    MetaTerm lhs = MetaTerm::fun(pairName, {MetaTerm::meta("M1", {}), MetaTerm::meta("M2", {})});
    Rule r1{"proj1_" + suffix, ctx, lhs, MetaTerm::meta("M1", {}), b};
    Rule r2{"proj2_" + suffix, ctx, lhs, MetaTerm::meta("M2", {}), b};
    out.rules.push_back(r1);
    out.rules.push_back(r2);
  }
  return out;
}

Result<ComputationSystem> extend_with_projections(const ComputationSystem& cs,
                                                  const std::set<MolType>& types,
                                                  ProjBuild* outBuild) {
  Result<ProjBuild> pb = build_projection_rules(cs.signature, types);
  if (!pb) return pb.error();
  ComputationSystem out = cs;
  for (const auto& [n, t] : pb->symbols) out.signature.declare(n, t);
  for (const auto& r : pb->rules) out.rules.push_back(r);
  out.assign_roles();
  if (outBuild) *outBuild = *pb;
  return out;
}

AccessibilityCheck check_A_accessible(const ComputationSystem& cs,
                                      const std::vector<std::string>& aRules,
                                      const TypeOrder& ord) {
  AccessibilityCheck out;
  for (const auto& n : aRules) {
    const Rule* r = cs.rule(n);
    if (!r) continue;
    std::set<std::string> acc;
    for (const auto& a : r->lhs.args()) {
      auto s = accessible_metavars(a, cs.signature, ord);
      acc.insert(s.begin(), s.end());
    }
    for (const auto& m : metavars(r->rhs)) {
      if (!acc.count(m)) {
        out.ok = false;
        out.failing_rule = n;
        out.failing_metavar = m;
        return out;
      }
    }
  }
  return out;
}

namespace {

ComputationSystem subsystem(const ComputationSystem& cs, const std::vector<std::string>& names) {
  ComputationSystem out;
  out.signature = cs.signature;
  for (const auto& n : names) {
    const Rule* r = cs.rule(n);
    if (r) out.rules.push_back(*r);
  }
  out.assign_roles();
  return out;
}

bool first_order_system(const ComputationSystem& cs) {
  for (const auto& r : cs.rules) {
    std::set<std::string> dummy;
    for (const auto& t : {r.lhs, r.rhs}) {
      std::function<bool(const MetaTerm&)> fo = [&](const MetaTerm& u) -> bool {
        switch (u.kind()) {
          case MetaTerm::Kind::Abs:
            return u.binders().empty() && fo(u.body());
          case MetaTerm::Kind::Fun:
            return std::all_of(u.args().begin(), u.args().end(), fo);
          case MetaTerm::Kind::MetaApp:
            return u.args().empty();
          default:
            return false;
        }
      };
      if (!fo(t)) return false;
    }
  }
  return true;
}

}  // namespace

Result<ModularReport> check_modular_sn(const ComputationSystem& cs, const SplitSpec& split,
                                       const ModularConfig& cfg) {
  ModularReport rep;
  auto push = [&](std::string name, bool ok, std::string ev) {
    rep.obligations.push_back({std::move(name), ok, std::move(ev)});
    return ok;
  };

  bool all = true;

  // (0a) partition well-formedness.
  {
    bool disjoint = true;
    for (const auto& s : split.sigmaA)
      if (split.sigmaB.count(s)) disjoint = false;
    size_t covered = split.rulesA.size() + split.rulesB.size();
    bool ok = disjoint && covered == cs.rules.size();
    all &= push("assumption.partition", ok,
                "A = {" + join(split.rulesA, ",") + "}, B = {" + join(split.rulesB, ",") +
                    "}, shared constructors = " + std::to_string(split.theta.size()));
    if (!ok) {
      rep.verdict = Verdict::Maybe;
      return rep;
    }
  }

  // (0b) finite branching: finite rule set with decidable most-general
  // matching; holds by construction.
  all &= push("assumption.finitely-branching", true,
              "finite rule set, decidable second-order pattern matching");

  // (0c) layer condition on both sides of every rule.
  {
    bool ok = true;
    std::string ev = "all rules satisfy the layer condition";
    for (const auto& r : cs.rules) {
      LayerCheck lc = check_A_layer(r, split.sigmaA, split.theta);
      if (!lc.ok) {
        ok = false;
        ev = "(" + r.name + ") " + lc.offending;
        break;
      }
    }
    all &= push("assumption.layer-condition", ok, ev);
  }

  // (i) A accessible.
  {
    AccessibilityCheck ac = check_A_accessible(cs, split.rulesA, cfg.type_order);
    all &= push("accessibility.A", ac.ok,
                ac.ok ? "every rhs metavariable accessible in the lhs"
                      : "(" + ac.failing_rule + ") metavariable " + ac.failing_metavar +
                            " not accessible");
  }

  // (ii) A + Proj strongly normalizing, over the A-part signature
  // sigmaA + theta (B-defined symbols cannot occur in A-reducible terms'
  // rule instances, and keeping them would let B-typed contexts smuggle
  // redexes into parameter positions that the weight analysis relies on).
  {
    ComputationSystem aPart;
    for (const auto& s : cs.signature.symbols())
      if (!split.sigmaB.count(s)) aPart.signature.declare(s, *cs.signature.lookup(s));
    for (const auto& n : split.rulesA) {
      const Rule* r = cs.rule(n);
      if (r) aPart.rules.push_back(*r);
    }
    aPart.assign_roles();
    std::set<MolType> types = aPart.signature.mentioned_types();
    Result<ComputationSystem> aProj = extend_with_projections(aPart, types);
    bool ok = false;
    std::string ev;
    if (!aProj.ok()) {
      ev = aProj.error().str();
    } else if (aProj->rules.empty()) {
      ok = true;
      ev = "A is empty";
    } else if (auto w = find_linear_weights(*aProj, cfg.coeff_bound, cfg.const_bound)) {
      ok = true;
      rep.a_weights = *w;
      std::ostringstream os;
      os << "linear weights:";
      std::set<std::string> shown;
      for (const auto& r : aProj->rules) shown.insert(r.head());
      for (const auto& s : shown) os << ' ' << s << w->at(s).str();
      ev = os.str();
    } else if (auto lw = find_lex_weights(*aProj, cfg.coeff_bound, cfg.const_bound)) {
      ok = true;
      rep.a_weights = lw->weights;
      ev = "lexicographic weight-size measure; weight-strict {" +
           join(lw->weight_strict_rules, ",") + "}, size-strict {" +
           join(lw->size_strict_rules, ",") + "}";
    } else if (first_order_system(*aProj)) {
      Result<FoDpResult> dp = prove_sn_fo_dp(*aProj);
      if (dp.ok() && dp->proven) {
        ok = true;
        ev = "dependency pairs: " + dp->evidence;
      } else {
        ev = "internal backend exhausted (weights, lexicographic, dependency pairs)";
      }
    } else {
      ev = "internal weight backend exhausted";
    }
    if (!ok && !cfg.external_fo_command.empty()) {
      Result<std::string> doc = emit_fo_trs(*aProj);
      if (doc.ok()) {
        Result<Verdict> v = run_external_fo_checker(cfg.external_fo_command, *doc);
        if (v.ok() && *v == Verdict::Yes) {
          ok = true;
          ev = "external checker: YES";
        } else if (v.ok()) {
          ev = "external checker: " + verdict_str(*v);
        } else {
          ev = v.error().str();
        }
      }
    }
    all &= push("sn.A-with-projections", ok, ev);
  }

  // (iii) B strongly normalizing by the General Schema.
  {
    ComputationSystem bPart = subsystem(cs, split.rulesB);
    SymbolPrecedence prec = synthesize_precedence(bPart);
    rep.b_gs = check_general_schema(bPart, cfg.type_order, prec, cfg.gs);
    bool ok = rep.b_gs.verdict == Verdict::Yes;
    std::string ev = ok ? "precedence " + rep.b_gs.precedence
                        : "rule (" + rep.b_gs.first_failure_rule + ") fails " +
                              rep.b_gs.first_failure_clause;
    all &= push("sn.B-by-general-schema", ok, ev);
    rep.precedence = rep.b_gs.precedence +
                     "; labelled A-symbols below the B-part, ordered by reduction-plus-subterm "
                     "on labels; constructors and projections at the bottom";
  }

  rep.verdict = all ? Verdict::Yes : Verdict::Maybe;
  return rep;
}

}  // namespace hort
