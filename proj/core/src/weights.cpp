// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hort {

std::string LinearWeight::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (i) os << ',';
    os << coeff[i].str();
  }
  os << ';' << constant.str() << ')';
  return os.str();
}

bool WeightPoly::strictly_dominates(const WeightPoly& l, const WeightPoly& r, const Rat& margin) {
  for (const auto& [m, c] : r.coeff) {
    auto it = l.coeff.find(m);
    Rat lc = it == l.coeff.end() ? Rat(0) : it->second;
    if (lc < c) return false;
  }
  return l.constant >= r.constant + margin;
}

bool WeightPoly::weakly_dominates(const WeightPoly& l, const WeightPoly& r) {
  for (const auto& [m, c] : r.coeff) {
    auto it = l.coeff.find(m);
    Rat lc = it == l.coeff.end() ? Rat(0) : it->second;
    if (lc < c) return false;
  }
  return l.constant >= r.constant;
}

std::string WeightPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeff) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!(c == Rat(1))) os << c.str() << '*';
    os << m;
  }
  if (first) {
    os << constant.str();
  } else if (!constant.is_zero()) {
    os << " + " << constant.str();
  }
  return os.str();
}

namespace {

Result<WeightPoly> interp(const WeightMap& w, const MetaTerm& t) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      return WeightPoly{};
    case MetaTerm::Kind::Abs:
      return interp(w, t.body());
    case MetaTerm::Kind::MetaApp: {
      WeightPoly p;
      p.coeff[t.name()] = Rat(1);
      for (const auto& a : t.args()) {
        Result<WeightPoly> q = interp(w, a);
        if (!q) return q;
        for (const auto& [m, c] : q->coeff) p.coeff[m] = p.coeff[m] + c;
        p.constant = p.constant + q->constant;
      }
      return p;
    }
    case MetaTerm::Kind::Fun: {
      auto it = w.find(t.name());
      if (it == w.end()) return Error{"MissingWeight", "no weight for symbol " + t.name()};
      const LinearWeight& lw = it->second;
      if (lw.coeff.size() != t.args().size())
        return Error{"MissingWeight", "weight arity mismatch for " + t.name()};
      WeightPoly p;
      p.constant = lw.constant;
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (lw.coeff[i].is_zero()) continue;
        Result<WeightPoly> q = interp(w, t.args()[i]);
        if (!q) return q;
        for (const auto& [m, c] : q->coeff) p.coeff[m] = p.coeff[m] + lw.coeff[i] * c;
        p.constant = p.constant + lw.coeff[i] * q->constant;
      }
      return p;
    }
  }
  return WeightPoly{};
}

void drop_zero_coeffs(WeightPoly& p) {
  for (auto it = p.coeff.begin(); it != p.coeff.end();)
    it = it->second.is_zero() ? p.coeff.erase(it) : std::next(it);
}

}  // namespace

Result<WeightPoly> interpret_weight(const WeightMap& w, const MetaTerm& t) {
  Result<WeightPoly> p = interp(w, t);
  if (p.ok()) drop_zero_coeffs(*p);
  return p;
}

Result<VerifyWeightsResult> verify_weights(const ComputationSystem& cs, const WeightMap& w) {
  VerifyWeightsResult out;
  out.all = true;
  for (const auto& r : cs.rules) {
    Result<WeightPoly> l = interpret_weight(w, r.lhs);
    if (!l) return l.error();
    Result<WeightPoly> rr = interpret_weight(w, r.rhs);
    if (!rr) return rr.error();
    bool dec = WeightPoly::strictly_dominates(*l, *rr, Rat(1));
    out.per_rule.push_back({r.name, *l, *rr, dec});
    out.all = out.all && dec;
  }
  return out;
}

std::set<MolType> reachable_types(const Signature& sig, const MolType& b) {
  std::set<MolType> reach{b};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : sig.symbols()) {
      const FunType& ft = *sig.lookup(s);
      if (!reach.count(ft.result)) continue;
      for (const auto& a : ft.args) {
        if (reach.insert(a.body).second) changed = true;
        for (const auto& bt : a.binders)
          if (reach.insert(bt).second) changed = true;
      }
    }
  }
  return reach;
}

bool position_hosts_redex(const Signature& sig, const std::set<MolType>& ruleTypes,
                          const MolType& b) {
  std::set<MolType> reach = reachable_types(sig, b);
  for (const auto& t : ruleTypes)
    if (reach.count(t)) return true;
  return false;
}

WeightPoly size_poly(const MetaTerm& t) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar: {
      WeightPoly p;
      p.constant = Rat(1);
      return p;
    }
    case MetaTerm::Kind::Abs:
      return size_poly(t.body());
    case MetaTerm::Kind::MetaApp: {
      // Arguments are variables (see size_linear); each replaces a bound
      // variable node one for one inside the image.
      WeightPoly p;
      p.coeff[t.name()] = Rat(1);
      return p;
    }
    case MetaTerm::Kind::Fun: {
      WeightPoly p;
      p.constant = Rat(1);
      for (const auto& a : t.args()) {
        WeightPoly q = size_poly(a);
        for (const auto& [m, c] : q.coeff) p.coeff[m] = p.coeff[m] + c;
        p.constant = p.constant + q.constant;
      }
      return p;
    }
  }
  return WeightPoly{};
}

bool size_linear(const MetaTerm& t) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      return true;
    case MetaTerm::Kind::Abs:
      return size_linear(t.body());
    case MetaTerm::Kind::Fun:
      for (const auto& a : t.args())
        if (!size_linear(a)) return false;
      return true;
    case MetaTerm::Kind::MetaApp:
      for (const auto& a : t.args())
        if (!a.is_bvar() && !a.is_fvar()) return false;
      return true;
  }
  return false;
}

namespace {

// Size polynomials range over image sizes >= 1: strict decrease holds when
// the difference has nonnegative coefficients and positive value at the
// all-ones point.
bool size_strictly_decreasing(const Rule& r) {
  if (!size_linear(r.lhs) || !size_linear(r.rhs)) return false;
  WeightPoly l = size_poly(r.lhs), rr = size_poly(r.rhs);
  Rat at_ones = l.constant - rr.constant;
  for (const auto& [m, c] : l.coeff) at_ones = at_ones + c;
  for (const auto& [m, c] : rr.coeff) {
    auto it = l.coeff.find(m);
    Rat lc = it == l.coeff.end() ? Rat(0) : it->second;
    if (lc < c) return false;
    at_ones = at_ones - c;
  }
  return at_ones > Rat(0);
}

struct WeightSearch {
  const ComputationSystem& cs;
  int coeff_bound, const_bound;
  bool lex_mode;  // stage 2: weak + (strict weight or strict size)
  std::set<std::string> size_strict;  // rule names (lex mode)

  std::map<std::string, std::vector<bool>> must_be_positive;
  WeightMap chosen;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 2000000;

  bool rule_ok(const Rule& r) const {
    Result<WeightPoly> l = interpret_weight(chosen, r.lhs);
    Result<WeightPoly> rr = interpret_weight(chosen, r.rhs);
    if (!l.ok() || !rr.ok()) return false;
    if (!lex_mode) return WeightPoly::strictly_dominates(*l, *rr, Rat(1));
    if (!WeightPoly::weakly_dominates(*l, *rr)) return false;
    if (WeightPoly::strictly_dominates(*l, *rr, Rat(1))) return true;
    return size_strict.count(r.name) != 0;
  }

  // DFS over one connected component of the symbol co-occurrence graph.
  bool search(const std::vector<std::string>& symbols, size_t idx,
              std::set<std::string>& have, const std::vector<const Rule*>& rules) {
    if (idx == symbols.size()) return true;
    if (++nodes > kNodeBudget) return false;
    const std::string& s = symbols[idx];
    const FunType& ft = *cs.signature.lookup(s);
    size_t n = ft.args.size();
    const std::vector<bool>& pos = must_be_positive.at(s);
    std::vector<int> c(n, 0);
    for (size_t i = 0; i < n; ++i)
      if (pos[i]) c[i] = 1;
    while (true) {
      for (int k = 0; k <= const_bound; ++k) {
        LinearWeight lw;
        for (size_t i = 0; i < n; ++i) lw.coeff.push_back(Rat(c[i]));
        lw.constant = Rat(k);
        chosen[s] = lw;
        have.insert(s);
        bool viable = true;
        for (const Rule* r : rules) {
          auto ls = fun_symbols(r->lhs), rs = fun_symbols(r->rhs);
          if (!ls.count(s) && !rs.count(s)) continue;  // unaffected by s
          bool checkable = true;
          for (const auto& q : ls)
            if (!have.count(q)) checkable = false;
          for (const auto& q : rs)
            if (!have.count(q)) checkable = false;
          if (checkable && !rule_ok(*r)) {
            viable = false;
            break;
          }
        }
        if (viable && search(symbols, idx + 1, have, rules)) return true;
        have.erase(s);
        chosen.erase(s);
        if (nodes > kNodeBudget) return false;
      }
      size_t i = 0;
      while (i < n) {
        if (c[i] < coeff_bound) {
          ++c[i];
          break;
        }
        c[i] = pos[i] ? 1 : 0;
        ++i;
      }
      if (i == n) break;
    }
    return false;
  }

  // Splits in-rule symbols into co-occurrence components and solves each one
  // independently (no cross-component constraint exists).
  bool run() {
    std::set<std::string> inRules;
    for (const auto& r : cs.rules) {
      auto ls = fun_symbols(r.lhs), rs = fun_symbols(r.rhs);
      inRules.insert(ls.begin(), ls.end());
      inRules.insert(rs.begin(), rs.end());
    }
    std::set<std::string> have;
    for (const auto& s : cs.signature.symbols()) {
      if (inRules.count(s)) continue;
      LinearWeight lw;
      for (bool p : must_be_positive[s]) lw.coeff.push_back(Rat(p ? 1 : 0));
      lw.constant = Rat(0);
      chosen[s] = lw;
      have.insert(s);
    }
    // Union-find over rule co-occurrence.
    std::map<std::string, std::string> parent;
    std::function<std::string(std::string)> find = [&](std::string x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& s : inRules) parent[s] = s;
    for (const auto& r : cs.rules) {
      std::vector<std::string> syms;
      for (const auto& q : fun_symbols(r.lhs)) syms.push_back(q);
      for (const auto& q : fun_symbols(r.rhs)) syms.push_back(q);
      for (size_t i = 1; i < syms.size(); ++i) {
        std::string a = find(syms[0]), b = find(syms[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<std::string, std::vector<std::string>> components;
    for (const auto& s : inRules) components[find(s)].push_back(s);
    for (auto& [root, syms] : components) {
      std::vector<const Rule*> rules;
      for (const auto& r : cs.rules) {
        auto ls = fun_symbols(r.lhs);
        if (!ls.empty() && find(*ls.begin()) == root) rules.push_back(&r);
      }
      if (!search(syms, 0, have, rules)) return false;
    }
    return true;
  }
};

void fill_positivity(const ComputationSystem& cs, const std::set<MolType>& ruleTypes,
                     std::map<std::string, std::vector<bool>>& out) {
  for (const auto& s : cs.signature.symbols()) {
    const FunType& ft = *cs.signature.lookup(s);
    std::vector<bool> pos;
    for (const auto& a : ft.args)
      pos.push_back(position_hosts_redex(cs.signature, ruleTypes, a.body));
    out[s] = pos;
  }
}

}  // namespace

std::optional<WeightMap> find_linear_weights(const ComputationSystem& cs, int coeffBound,
                                             int constBound) {
  std::set<MolType> ruleTypes;
  for (const auto& r : cs.rules) ruleTypes.insert(r.rule_type);
  WeightSearch ws{cs, coeffBound, constBound, false, {}, {}, {}, 0};
  fill_positivity(cs, ruleTypes, ws.must_be_positive);
  if (!ws.run()) return std::nullopt;
  return ws.chosen;
}

std::optional<LexWeightProof> find_lex_weights(const ComputationSystem& cs, int coeffBound,
                                               int constBound) {
  WeightSearch ws{cs, coeffBound, constBound, true, {}, {}, {}, 0};
  std::set<MolType> nonSizeStrictTypes;
  for (const auto& r : cs.rules) {
    if (size_strictly_decreasing(r))
      ws.size_strict.insert(r.name);
    else
      nonSizeStrictTypes.insert(r.rule_type);
  }
  fill_positivity(cs, nonSizeStrictTypes, ws.must_be_positive);
  if (!ws.run()) return std::nullopt;
  LexWeightProof proof;
  proof.weights = ws.chosen;
  for (const auto& r : cs.rules) {
    Result<WeightPoly> l = interpret_weight(proof.weights, r.lhs);
    Result<WeightPoly> rr = interpret_weight(proof.weights, r.rhs);
    if (l.ok() && rr.ok() && WeightPoly::strictly_dominates(*l, *rr, Rat(1)))
      proof.weight_strict_rules.push_back(r.name);
    else
      proof.size_strict_rules.push_back(r.name);
  }
  return proof;
}

}  // namespace hort
