// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/schema.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hort {

namespace {

bool distinct_var_args(const MetaTerm& m) {
  for (const auto& a : m.args())
    if (!a.is_bvar() && !a.is_fvar()) return false;
  for (size_t i = 0; i < m.args().size(); ++i)
    for (size_t j = i + 1; j < m.args().size(); ++j)
      if (m.args()[i] == m.args()[j]) return false;
  return true;
}

void acc_walk(const MetaTerm& t, const Signature& sig, const TypeOrder& ord, NameSupply& supply,
              std::set<std::string>& out) {
  switch (t.kind()) {
    case MetaTerm::Kind::MetaApp:
      if (distinct_var_args(t)) out.insert(t.name());
      break;
    case MetaTerm::Kind::Abs: {  // (a2)
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(t, supply, names);
      acc_walk(body, sig, ord, supply, out);
      break;
    }
    case MetaTerm::Kind::Fun: {  // (a3)
      const FunType* ft = sig.lookup(t.name());
      if (!ft) break;
      const MolType& b = ft->result;
      for (size_t i = 0; i < t.args().size() && i < ft->args.size(); ++i) {
        bool binders_ok = true;
        for (const auto& a : ft->args[i].binders)
          if (!ord.lt(a, b)) binders_ok = false;
        if (binders_ok && ord.leq(ft->args[i].body, b))
          acc_walk(t.args()[i], sig, ord, supply, out);
      }
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::set<std::string> accessible_metavars(const MetaTerm& t, const Signature& sig,
                                          const TypeOrder& ord) {
  std::set<std::string> out;
  NameSupply supply;
  reserve_free_vars(t, supply);
  acc_walk(t, sig, ord, supply, out);
  return out;
}

std::set<std::string> accessible_metavars_fixpoint(const MetaTerm& t, const Signature& sig,
                                                   const TypeOrder& ord) {
  // Saturates Acc(t) as an explicit set of meta-terms; membership of a
  // metavariable is then read off. Kept independent of acc_walk.
  NameSupply supply;
  reserve_free_vars(t, supply);
  std::vector<MetaTerm> acc{t};
  bool changed = true;
  auto push = [&](const MetaTerm& u) {
    for (const auto& v : acc)
      if (v == u) return;
    acc.push_back(u);
    changed = true;
  };
  while (changed) {
    changed = false;
    for (size_t i = 0; i < acc.size(); ++i) {
      MetaTerm u = acc[i];
      if (u.is_abs()) {
        std::vector<std::string> names;
        push(open_abs_fresh(u, supply, names));
      } else if (u.is_fun()) {
        const FunType* ft = sig.lookup(u.name());
        if (!ft) continue;
        for (size_t k = 0; k < u.args().size() && k < ft->args.size(); ++k) {
          bool ok = true;
          for (const auto& a : ft->args[k].binders)
            if (!ord.lt(a, ft->result)) ok = false;
          if (ok && ord.leq(ft->args[k].body, ft->result)) push(u.args()[k]);
        }
      }
    }
  }
  std::set<std::string> out;
  for (const auto& u : acc) {
    MetaTerm v = MetaTerm::unwrap(u);
    if (v.is_meta() && distinct_var_args(v)) out.insert(v.name());
  }
  return out;
}

namespace {

// Structural-variant equality: crossed binder names in `cand` may be renamed
// (consistently, variable to variable) to match `s`.
bool eq_mod_crossed(const MetaTerm& cand, const MetaTerm& s,
                    const std::set<std::string>& crossed,
                    std::map<std::string, std::string>& ren) {
  if (cand.kind() != s.kind()) return false;
  switch (cand.kind()) {
    case MetaTerm::Kind::BVar:
      return cand.level() == s.level() && cand.slot() == s.slot() &&
             cand.var_type() == s.var_type();
    case MetaTerm::Kind::FVar: {
      if (cand.var_type() != s.var_type()) return false;
      if (crossed.count(cand.name())) {
        auto it = ren.find(cand.name());
        if (it != ren.end()) return it->second == s.name();
        ren.emplace(cand.name(), s.name());
        return true;
      }
      return cand.name() == s.name();
    }
    case MetaTerm::Kind::Abs: {
      if (cand.binders() != s.binders()) return false;
      return eq_mod_crossed(cand.body(), s.body(), crossed, ren);
    }
    case MetaTerm::Kind::Fun: {
      if (cand.name() != s.name() || cand.args().size() != s.args().size()) return false;
      for (size_t i = 0; i < cand.args().size(); ++i)
        if (!eq_mod_crossed(cand.args()[i], s.args()[i], crossed, ren)) return false;
      return true;
    }
    case MetaTerm::Kind::MetaApp: {
      if (cand.name() != s.name() || cand.args().size() != s.args().size()) return false;
      for (size_t i = 0; i < cand.args().size(); ++i)
        if (!eq_mod_crossed(cand.args()[i], s.args()[i], crossed, ren)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool strictly_smaller(const MetaTerm& s, const MetaTerm& t, SubtermVariant variant) {
  NameSupply supply;
  reserve_free_vars(t, supply);
  reserve_free_vars(s, supply);
  MetaTerm goal = MetaTerm::unwrap(s);
  for (const auto& occ : subterm_occurrences(t, supply, /*includeRoot=*/false)) {
    MetaTerm cand = MetaTerm::unwrap(occ.term);
    if (variant == SubtermVariant::Stable) {
      if (!occ.crossed.empty()) {
        bool escapes = false;
        auto fv = free_vars(cand);
        for (const auto& c : occ.crossed)
          if (fv.count(c)) escapes = true;
        if (escapes) continue;
      }
      if (cand == goal) return true;
    } else {
      std::set<std::string> crossed(occ.crossed.begin(), occ.crossed.end());
      std::map<std::string, std::string> ren;
      if (eq_mod_crossed(cand, goal, crossed, ren)) return true;
    }
  }
  return false;
}

std::string CCDeriv::clause_str() const {
  switch (clause) {
    case Clause::MetaAcc: return "(meta " + subject.name() + ")";
    case Clause::Var: return "(var)";
    case Clause::Abs: return "(abs)";
    case Clause::FunGt: return "(fun >)";
    case Clause::FunEq: return "(fun =)";
  }
  return "?";
}

namespace {

struct CCChecker {
  const std::string& f;
  const std::vector<MetaTerm>& lhsArgs;
  const Signature& sig;
  const TypeOrder& ord;
  const SymbolPrecedence& prec;
  const GsConfig& cfg;
  NameSupply& supply;
  std::set<std::string> accessible;  // union over lhs args

  bool entries_equal(const MetaTerm& a, const MetaTerm& b) const {
    return MetaTerm::unwrap(a) == MetaTerm::unwrap(b);
  }

  bool entry_smaller(const MetaTerm& small, const MetaTerm& big) const {
    return strictly_smaller(small, big, cfg.variant);
  }

  // Lexicographic / multiset extension of the strict subterm order, with
  // alpha-equality as the underlying equality.
  bool args_decrease(const std::vector<MetaTerm>& ts, const std::vector<MetaTerm>& us,
                     int& lexPos, std::string& why) const {
    if (cfg.clause5 == Clause5Ext::Lex) {
      size_t n = std::min(ts.size(), us.size());
      for (size_t i = 0; i < n; ++i) {
        if (entries_equal(ts[i], us[i])) continue;
        if (entry_smaller(us[i], ts[i])) {
          lexPos = static_cast<int>(i);
          return true;
        }
        why = "entry " + std::to_string(i + 1) + ": " + MetaTerm::unwrap(us[i]).str() +
              " is not a strict subterm of " + MetaTerm::unwrap(ts[i]).str();
        return false;
      }
      why = "no strictly decreasing entry";
      return false;
    }
    // Multiset: every u not cancelled by an equal t must sit below some
    // remaining t, and something must be consumed.
    std::vector<bool> usedT(ts.size(), false);
    std::vector<const MetaTerm*> rest;
    for (const auto& u : us) {
      bool cancelled = false;
      for (size_t i = 0; i < ts.size(); ++i) {
        if (!usedT[i] && entries_equal(ts[i], u)) {
          usedT[i] = true;
          cancelled = true;
          break;
        }
      }
      if (!cancelled) rest.push_back(&u);
    }
    bool someTLeft = std::any_of(usedT.begin(), usedT.end(), [](bool b) { return !b; });
    if (!someTLeft && !rest.empty()) {
      why = "multiset comparison failed (nothing left on the greater side)";
      return false;
    }
    if (rest.empty() && !someTLeft) {
      why = "multisets are equal";
      return false;
    }
    for (const MetaTerm* u : rest) {
      bool dominated = false;
      for (size_t i = 0; i < ts.size(); ++i)
        if (!usedT[i] && entry_smaller(*u, ts[i])) dominated = true;
      if (!dominated) {
        why = MetaTerm::unwrap(*u).str() + " is not below any remaining lhs argument";
        return false;
      }
    }
    lexPos = -1;
    return true;
  }

  CCResult check(const MetaTerm& raw) {
    MetaTerm u = MetaTerm::unwrap(raw);
    switch (u.kind()) {
      case MetaTerm::Kind::BVar:
        return fail("(var)", "dangling bound variable");
      case MetaTerm::Kind::FVar: {
        CCDeriv d{CCDeriv::Clause::Var, u, {}, "", -1, {}};
        return okr(std::move(d));
      }
      case MetaTerm::Kind::Abs: {
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(u, supply, names);
        CCResult c = check(body);
        if (!c.ok) return c;
        CCDeriv d{CCDeriv::Clause::Abs, u, names, "", -1, {std::move(*c.derivation)}};
        return okr(std::move(d));
      }
      case MetaTerm::Kind::MetaApp: {
        if (!accessible.count(u.name()))
          return fail("(meta " + u.name() + ")",
                      "metavariable " + u.name() + " is not accessible in the lhs arguments");
        CCDeriv d{CCDeriv::Clause::MetaAcc, u, {}, "", -1, {}};
        for (const auto& a : u.args()) {
          CCResult c = check(a);
          if (!c.ok) return c;
          d.children.push_back(std::move(*c.derivation));
        }
        return okr(std::move(d));
      }
      case MetaTerm::Kind::Fun: {
        const std::string& g = u.name();
        if (prec.gt(f, g)) {
          CCDeriv d{CCDeriv::Clause::FunGt, u, {}, g, -1, {}};
          for (const auto& a : u.args()) {
            CCResult c = check(a);
            if (!c.ok) return c;
            d.children.push_back(std::move(*c.derivation));
          }
          return okr(std::move(d));
        }
        if (prec.eq(f, g)) {
          int lexPos = -1;
          std::string why;
          if (!args_decrease(lhsArgs, u.args(), lexPos, why))
            return fail("(fun =)", "at " + u.str() + ": " + why);
          CCDeriv d{CCDeriv::Clause::FunEq, u, {}, g, lexPos, {}};
          for (const auto& a : u.args()) {
            CCResult c = check(a);
            if (!c.ok) return c;
            d.children.push_back(std::move(*c.derivation));
          }
          return okr(std::move(d));
        }
        return fail("(fun)", "call to " + g + " needs " + f + " >= " + g + " in the precedence");
      }
    }
    return fail("(var)", "malformed subject");
  }

  static CCResult okr(CCDeriv d) {
    CCResult r;
    r.ok = true;
    r.derivation = std::move(d);
    return r;
  }
  static CCResult fail(std::string clause, std::string detail) {
    CCResult r;
    r.ok = false;
    r.failure_clause = std::move(clause);
    r.failure_detail = std::move(detail);
    return r;
  }
};

}  // namespace

CCResult in_computable_closure(const std::string& f, const std::vector<MetaTerm>& lhsArgs,
                               const MetaTerm& candidate, const Signature& sig,
                               const TypeOrder& ord, const SymbolPrecedence& prec,
                               const GsConfig& cfg) {
  NameSupply supply;
  reserve_free_vars(candidate, supply);
  CCChecker chk{f, lhsArgs, sig, ord, prec, cfg, supply, {}};
  for (const auto& a : lhsArgs) {
    auto acc = accessible_metavars(a, sig, ord);
    chk.accessible.insert(acc.begin(), acc.end());
  }
  return chk.check(candidate);
}

bool replay_cc_derivation(const CCDeriv& d, const std::string& f,
                          const std::vector<MetaTerm>& lhsArgs, const Signature& sig,
                          const TypeOrder& ord, const SymbolPrecedence& prec,
                          const GsConfig& cfg) {
  std::set<std::string> accessible;
  for (const auto& a : lhsArgs) {
    auto acc = accessible_metavars(a, sig, ord);
    accessible.insert(acc.begin(), acc.end());
  }
  std::function<bool(const CCDeriv&)> go = [&](const CCDeriv& n) -> bool {
    const MetaTerm u = MetaTerm::unwrap(n.subject);
    switch (n.clause) {
      case CCDeriv::Clause::Var:
        return u.is_fvar() && n.children.empty();
      case CCDeriv::Clause::Abs: {
        if (!u.is_abs() || n.children.size() != 1) return false;
        if (n.opened.size() != u.binders().size()) return false;
        if (!(open_abs(u, n.opened) == MetaTerm::unwrap(n.children[0].subject))) return false;
        return go(n.children[0]);
      }
      case CCDeriv::Clause::MetaAcc: {
        if (!u.is_meta() || !accessible.count(u.name())) return false;
        if (n.children.size() != u.args().size()) return false;
        for (size_t i = 0; i < u.args().size(); ++i) {
          if (!(MetaTerm::unwrap(u.args()[i]) == MetaTerm::unwrap(n.children[i].subject)))
            return false;
          if (!go(n.children[i])) return false;
        }
        return true;
      }
      case CCDeriv::Clause::FunGt:
      case CCDeriv::Clause::FunEq: {
        if (!u.is_fun() || u.name() != n.g) return false;
        if (n.clause == CCDeriv::Clause::FunGt && !prec.gt(f, n.g)) return false;
        if (n.clause == CCDeriv::Clause::FunEq) {
          if (!prec.eq(f, n.g)) return false;
          NameSupply tmp;
          CCChecker chk{f, lhsArgs, sig, ord, prec, cfg, tmp, accessible};
          int pos = -1;
          std::string why;
          if (!chk.args_decrease(lhsArgs, u.args(), pos, why)) return false;
        }
        if (n.children.size() != u.args().size()) return false;
        for (size_t i = 0; i < u.args().size(); ++i) {
          if (!(MetaTerm::unwrap(u.args()[i]) == MetaTerm::unwrap(n.children[i].subject)))
            return false;
          if (!go(n.children[i])) return false;
        }
        return true;
      }
    }
    return false;
  };
  return go(d);
}

GsReport check_general_schema(const ComputationSystem& cs, const TypeOrder& ord,
                              const SymbolPrecedence& prec, const GsConfig& cfg) {
  GsReport rep;
  rep.precedence = prec.describe();
  bool all_ok = true;
  for (const auto& r : cs.rules) {
    CCResult cc = in_computable_closure(r.head(), r.lhs.args(), r.rhs, cs.signature, ord, prec,
                                        cfg);
    if (!cc.ok && all_ok) {
      rep.first_failure_rule = r.name;
      rep.first_failure_clause = cc.failure_clause;
    }
    all_ok = all_ok && cc.ok;
    rep.rules.push_back({r.name, std::move(cc)});
  }
  // Mutually recursive defined symbols whose rules both failed suggest the
  // irreconcilable strict precedences the rules would need.
  for (size_t i = 0; i < rep.rules.size(); ++i) {
    if (rep.rules[i].cc.ok) continue;
    const Rule* ra = cs.rule(rep.rules[i].rule);
    const std::string fa = ra->head();
    for (size_t j = 0; j < rep.rules.size(); ++j) {
      if (i == j || rep.rules[j].cc.ok) continue;
      const Rule* rb = cs.rule(rep.rules[j].rule);
      const std::string fb = rb->head();
      if (fa == fb || !prec.eq(fa, fb)) continue;
      if (fun_symbols(ra->rhs).count(fb) && fun_symbols(rb->rhs).count(fa)) {
        bool dup = false;
        for (const auto& c : rep.conflicts)
          if ((c.rule_fg == rep.rules[i].rule && c.rule_gf == rep.rules[j].rule) ||
              (c.rule_fg == rep.rules[j].rule && c.rule_gf == rep.rules[i].rule))
            dup = true;
        if (!dup && i < j)
          rep.conflicts.push_back({rep.rules[i].rule, rep.rules[j].rule, fa, fb});
      }
    }
  }
  rep.verdict = all_ok ? Verdict::Yes : Verdict::Maybe;
  return rep;
}

}  // namespace hort
