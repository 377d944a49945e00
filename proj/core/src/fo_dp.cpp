// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/fo_dp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace hort {

namespace {

constexpr const char* kMark = "#";

struct Dp {
  MetaTerm lhs, rhs;  // heads carry the # mark
  std::string text;
};

bool first_order_rule(const Rule& r) {
  std::function<bool(const MetaTerm&)> fo = [&](const MetaTerm& t) -> bool {
    switch (t.kind()) {
      case MetaTerm::Kind::BVar:
      case MetaTerm::Kind::FVar:
        return false;
      case MetaTerm::Kind::Abs:
        return t.binders().empty() && fo(t.body());
      case MetaTerm::Kind::Fun:
        return std::all_of(t.args().begin(), t.args().end(), fo);
      case MetaTerm::Kind::MetaApp:
        return t.args().empty();
    }
    return false;
  };
  return fo(r.lhs) && fo(r.rhs);
}

MetaTerm mark(const MetaTerm& t) {
  std::vector<MetaTerm> as;
  for (const auto& a : t.args()) as.push_back(a);
  return MetaTerm::fun(t.name() + kMark, std::move(as));
}

void defined_subterms(const MetaTerm& t, const std::set<std::string>& defined,
                      std::vector<MetaTerm>& out) {
  MetaTerm u = MetaTerm::unwrap(t);
  if (u.is_fun()) {
    if (defined.count(u.name())) out.push_back(u);
    for (const auto& a : u.args()) defined_subterms(a, defined, out);
  }
}

// --- syntactic unification on untyped FO terms (nullary metas are vars) ---

using Sub = std::map<std::string, MetaTerm>;

MetaTerm resolve(const MetaTerm& t, const Sub& sub) {
  MetaTerm u = MetaTerm::unwrap(t);
  if (u.is_meta()) {
    auto it = sub.find(u.name());
    if (it != sub.end()) return resolve(it->second, sub);
    return u;
  }
  return u;
}

bool occurs(const std::string& v, const MetaTerm& t, const Sub& sub) {
  MetaTerm u = resolve(t, sub);
  if (u.is_meta()) return u.name() == v;
  if (u.is_fun())
    for (const auto& a : u.args())
      if (occurs(v, a, sub)) return true;
  return false;
}

bool unify(const MetaTerm& a, const MetaTerm& b, Sub& sub) {
  MetaTerm x = resolve(a, sub), y = resolve(b, sub);
  if (x.is_meta()) {
    if (y.is_meta() && y.name() == x.name()) return true;
    if (occurs(x.name(), y, sub)) return false;
    sub[x.name()] = y;
    return true;
  }
  if (y.is_meta()) return unify(y, x, sub);
  if (!x.is_fun() || !y.is_fun() || x.name() != y.name() ||
      x.args().size() != y.args().size())
    return false;
  for (size_t i = 0; i < x.args().size(); ++i)
    if (!unify(x.args()[i], y.args()[i], sub)) return false;
  return true;
}

MetaTerm rename_vars(const MetaTerm& t, const std::string& prefix, int& counter, bool linearize) {
  MetaTerm u = MetaTerm::unwrap(t);
  if (u.is_meta()) {
    std::string n = linearize ? prefix + std::to_string(counter++) : prefix + u.name();
    return MetaTerm::meta(n, {});
  }
  std::vector<MetaTerm> as;
  for (const auto& a : u.args()) as.push_back(rename_vars(a, prefix, counter, linearize));
  return MetaTerm::fun(u.name(), std::move(as));
}

MetaTerm cap(const MetaTerm& t, const std::set<std::string>& defined, int& counter) {
  MetaTerm u = MetaTerm::unwrap(t);
  if (u.is_meta()) return u;
  if (defined.count(u.name())) return MetaTerm::meta("c$" + std::to_string(counter++), {});
  std::vector<MetaTerm> as;
  for (const auto& a : u.args()) as.push_back(cap(a, defined, counter));
  return MetaTerm::fun(u.name(), std::move(as));
}

// Edge i -> j iff REN(CAP(rhs_i args)) unifies with lhs_j.
bool connectable(const Dp& from, const Dp& to, const std::set<std::string>& defined) {
  int counter = 0;
  std::vector<MetaTerm> cappedArgs;
  for (const auto& a : from.rhs.args()) cappedArgs.push_back(cap(a, defined, counter));
  MetaTerm lhsFrom = MetaTerm::fun(from.rhs.name(), std::move(cappedArgs));
  MetaTerm renamed = rename_vars(lhsFrom, "u$", counter, /*linearize=*/true);
  int c2 = 0;
  MetaTerm target = rename_vars(to.lhs, "v$", c2, /*linearize=*/false);
  Sub sub;
  return unify(renamed, target, sub);
}

struct SccFinder {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> index, low, comp;
  std::vector<int> stack;
  std::vector<bool> on;
  int next = 0, comps = 0;

  explicit SccFinder(const std::vector<std::vector<int>>& a)
      : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1), on(a.size(), false) {}

  void run(int v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        run(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = comps;
        if (w == v) break;
      }
      ++comps;
    }
  }
};

struct DpProver {
  const ComputationSystem& cs;
  std::set<std::string> defined;
  std::vector<Dp> dps;
  std::vector<std::vector<int>> adj;
  std::ostringstream evidence;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 4000000;

  std::vector<const Rule*> usable_rules(const std::vector<int>& scc) const {
    std::set<std::string> want;
    for (int i : scc)
      for (const auto& s : fun_symbols(dps[i].rhs))
        if (defined.count(s)) want.insert(s);
    bool changed = true;
    std::vector<const Rule*> out;
    std::set<std::string> used;
    while (changed) {
      changed = false;
      for (const auto& r : cs.rules) {
        if (!want.count(r.head()) || used.count(r.name)) continue;
        used.insert(r.name);
        out.push_back(&r);
        changed = true;
        for (const auto& s : fun_symbols(r.rhs))
          if (defined.count(s)) want.insert(s);
      }
    }
    return out;
  }

  // Linear interpretation search: usable rules and all SCC pairs weakly
  // decreasing, at least one pair strictly. Returns the strict subset.
  bool find_pair(const std::vector<int>& scc, const std::vector<const Rule*>& usable,
                 std::vector<int>& strict, WeightMap& outW) {
    // Symbols to assign.
    std::set<std::string> syms;
    std::map<std::string, size_t> arity;
    auto note = [&](const MetaTerm& t) {
      std::function<void(const MetaTerm&)> go = [&](const MetaTerm& u0) {
        MetaTerm u = MetaTerm::unwrap(u0);
        if (u.is_fun()) {
          syms.insert(u.name());
          arity[u.name()] = u.args().size();
          for (const auto& a : u.args()) go(a);
        } else if (u.is_meta()) {
          for (const auto& a : u.args()) go(a);
        }
      };
      go(t);
    };
    for (const Rule* r : usable) {
      note(r->lhs);
      note(r->rhs);
    }
    for (int i : scc) {
      note(dps[i].lhs);
      note(dps[i].rhs);
    }
    std::vector<std::string> order(syms.begin(), syms.end());
    static const std::vector<Rat> kCoeffs{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
    static const std::vector<Rat> kConsts{Rat(0), Rat(1, 2), Rat(1), Rat(2)};

    WeightMap w;
    std::set<std::string> have;

    auto weak_ok = [&](const MetaTerm& l, const MetaTerm& r) {
      Result<WeightPoly> lp = interpret_weight(w, l);
      Result<WeightPoly> rp = interpret_weight(w, r);
      return lp.ok() && rp.ok() && WeightPoly::weakly_dominates(*lp, *rp);
    };
    auto covered = [&](const MetaTerm& l, const MetaTerm& r, const std::string& s) {
      auto ls = fun_symbols(l), rs = fun_symbols(r);
      if (!ls.count(s) && !rs.count(s)) return false;  // not affected by s
      for (const auto& q : ls)
        if (!have.count(q)) return false;
      for (const auto& q : rs)
        if (!have.count(q)) return false;
      return true;
    };

    std::function<bool(size_t)> dfs = [&](size_t idx) -> bool {
      if (++nodes > kNodeBudget) return false;
      if (idx == order.size()) {
        strict.clear();
        for (int i : scc) {
          Result<WeightPoly> lp = interpret_weight(w, dps[i].lhs);
          Result<WeightPoly> rp = interpret_weight(w, dps[i].rhs);
          if (!lp.ok() || !rp.ok()) return false;
          if (WeightPoly::strictly_dominates(*lp, *rp, Rat(1, 2))) strict.push_back(i);
        }
        return !strict.empty();
      }
      const std::string& s = order[idx];
      size_t n = arity[s];
      std::vector<size_t> pick(n, 0);
      while (true) {
        for (const Rat& k : kConsts) {
          LinearWeight lw;
          for (size_t i = 0; i < n; ++i) lw.coeff.push_back(kCoeffs[pick[i]]);
          lw.constant = k;
          w[s] = lw;
          have.insert(s);
          bool viable = true;
          for (const Rule* r : usable)
            if (covered(r->lhs, r->rhs, s) && !weak_ok(r->lhs, r->rhs)) {
              viable = false;
              break;
            }
          if (viable)
            for (int i : scc)
              if (covered(dps[i].lhs, dps[i].rhs, s) && !weak_ok(dps[i].lhs, dps[i].rhs)) {
                viable = false;
                break;
              }
          if (viable && dfs(idx + 1)) return true;
          have.erase(s);
          w.erase(s);
          if (nodes > kNodeBudget) return false;
        }
        size_t i = 0;
        while (i < n) {
          if (pick[i] + 1 < kCoeffs.size()) {
            ++pick[i];
            break;
          }
          pick[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
      return false;
    };

    if (!dfs(0)) return false;
    outW = w;
    return true;
  }

  bool solve(const std::vector<int>& pairs, int depth) {
    if (pairs.empty()) return true;
    if (depth > 64) return false;
    // SCCs of the induced subgraph.
    std::map<int, int> local;
    for (size_t i = 0; i < pairs.size(); ++i) local[pairs[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> sub(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i)
      for (int j : adj[pairs[i]])
        if (local.count(j)) sub[i].push_back(local[j]);
    SccFinder scc(sub);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (scc.index[i] < 0) scc.run(static_cast<int>(i));
    // A component matters when it contains a cycle.
    for (int c = 0; c < scc.comps; ++c) {
      std::vector<int> members;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (scc.comp[i] == c) members.push_back(pairs[i]);
      bool cyclic = members.size() > 1;
      if (members.size() == 1) {
        int v = local[members[0]];
        for (int j : sub[v])
          if (j == v) cyclic = true;
      }
      if (!cyclic) continue;
      std::vector<const Rule*> usable = usable_rules(members);
      std::vector<int> strict;
      WeightMap w;
      if (!find_pair(members, usable, strict, w)) return false;
      std::ostringstream os;
      os << "scc{";
      for (size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << dps[members[i]].text;
      os << "} strict{";
      for (size_t i = 0; i < strict.size(); ++i) os << (i ? "," : "") << dps[strict[i]].text;
      os << "} with";
      for (const auto& [s, lw] : w) os << ' ' << s << lw.str();
      evidence << os.str() << "; ";
      std::vector<int> rest;
      for (int m : members)
        if (std::find(strict.begin(), strict.end(), m) == strict.end()) rest.push_back(m);
      if (!solve(rest, depth + 1)) return false;
    }
    return true;
  }
};

}  // namespace

Result<FoDpResult> prove_sn_fo_dp(const ComputationSystem& cs) {
  for (const auto& r : cs.rules)
    if (!first_order_rule(r))
      return Error{"NotFirstOrder", "(" + r.name + ") is not first-order"};
  DpProver p{cs, cs.signature.defined_symbols(), {}, {}, {}, 0};
  for (const auto& r : cs.rules) {
    std::vector<MetaTerm> subs;
    defined_subterms(r.rhs, p.defined, subs);
    for (const auto& s : subs)
      p.dps.push_back({mark(r.lhs), mark(s), r.name + ":" + s.name()});
  }
  p.adj.assign(p.dps.size(), {});
  for (size_t i = 0; i < p.dps.size(); ++i)
    for (size_t j = 0; j < p.dps.size(); ++j)
      if (connectable(p.dps[i], p.dps[j], p.defined)) p.adj[i].push_back(static_cast<int>(j));
  std::vector<int> all;
  for (size_t i = 0; i < p.dps.size(); ++i) all.push_back(static_cast<int>(i));
  FoDpResult res;
  res.proven = p.solve(all, 0);
  res.evidence = p.evidence.str();
  if (res.evidence.empty()) res.evidence = "no cyclic dependency pairs";
  return res;
}

}  // namespace hort
