// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/orders.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hort {

TypeOrder default_type_order() { return TypeOrder{TypeOrder::Mode::Subtree}; }
TypeOrder identity_type_order() { return TypeOrder{TypeOrder::Mode::Identity}; }

bool SymbolPrecedence::gt(const std::string& f, const std::string& g) const {
  bool fd = defined_.count(f), gd = defined_.count(g);
  if (fd && !gd) return true;  // constructors sit below every defined symbol
  if (!fd) return false;
  auto fi = class_of_.find(f), gi = class_of_.find(g);
  if (fi == class_of_.end() || gi == class_of_.end()) return false;
  return class_above_[fi->second].count(gi->second) != 0;
}

bool SymbolPrecedence::eq(const std::string& f, const std::string& g) const {
  if (f == g) return true;
  auto fi = class_of_.find(f), gi = class_of_.find(g);
  if (fi == class_of_.end() || gi == class_of_.end()) return false;
  return fi->second == gi->second;
}

bool SymbolPrecedence::well_founded() const {
  for (size_t c = 0; c < class_above_.size(); ++c)
    if (class_above_[c].count(static_cast<int>(c))) return false;
  return true;
}

std::string SymbolPrecedence::describe() const {
  // Classes greatest-first (Kahn), ties by smallest member name.
  size_t n = class_above_.size();
  std::vector<std::vector<std::string>> members(n);
  for (const auto& [s, c] : class_of_) members[c].push_back(s);
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::vector<int> preds(n, 0);
  for (size_t a = 0; a < n; ++a)
    for (int b : class_above_[a]) ++preds[b];
  std::vector<bool> done(n, false);
  std::vector<int> order;
  for (size_t k = 0; k < n; ++k) {
    int best = -1;
    for (size_t c = 0; c < n; ++c) {
      if (done[c] || preds[c] > 0) continue;
      if (best < 0 || members[c] < members[best]) best = static_cast<int>(c);
    }
    if (best < 0) break;
    done[best] = true;
    order.push_back(best);
    for (int b : class_above_[best]) --preds[b];
  }
  std::ostringstream os;
  bool first = true;
  for (int c : order) {
    if (members[c].empty()) continue;
    if (!first) os << " > ";
    first = false;
    os << join(members[c], " = ");
  }
  if (!first) os << " > ";
  os << "<constructors>";
  return os.str();
}

namespace {

struct Tarjan {
  const std::map<std::string, std::set<std::string>>& edges;
  std::map<std::string, int> index, low, comp;
  std::vector<std::string> stack;
  std::set<std::string> on_stack;
  int next_index = 0, next_comp = 0;

  void run(const std::string& v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack.insert(v);
    auto it = edges.find(v);
    if (it != edges.end()) {
      for (const auto& w : it->second) {
        if (!index.count(w)) {
          run(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        std::string w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

}  // namespace

struct PrecedenceBuilder {
  static SymbolPrecedence build(const std::set<std::string>& defined,
                                const std::map<std::string, std::set<std::string>>& edges,
                                const std::vector<std::pair<std::string, std::string>>* eqMerge) {
    Tarjan t{edges, {}, {}, {}, {}, {}, 0, 0};
    std::vector<std::string> nodes(defined.begin(), defined.end());
    for (const auto& v : nodes)
      if (!t.index.count(v)) t.run(v);

    SymbolPrecedence p;
    p.defined_ = defined;
    // Union equal classes requested explicitly.
    std::map<int, int> remap;
    auto canon = [&](int c) {
      while (remap.count(c) && remap[c] != c) c = remap[c];
      return c;
    };
    if (eqMerge) {
      for (const auto& [f, g] : *eqMerge) {
        int a = canon(t.comp[f]), b = canon(t.comp[g]);
        if (a != b) remap[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<int, int> dense;
    for (const auto& v : nodes) {
      int c = canon(t.comp[v]);
      if (!dense.count(c)) {
        int id = static_cast<int>(dense.size());
        dense[c] = id;
      }
      p.class_of_[v] = dense[c];
    }
    p.class_above_.assign(dense.size(), {});
    // Direct edges between distinct classes, then transitive closure.
    for (const auto& [f, tos] : edges) {
      for (const auto& g : tos) {
        int a = p.class_of_[f], b = p.class_of_[g];
        if (a != b) p.class_above_[a].insert(b);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& above : p.class_above_) {
        std::set<int> add;
        for (int b : above)
          for (int c : p.class_above_[b])
            if (!above.count(c)) add.insert(c);
        if (!add.empty()) {
          above.insert(add.begin(), add.end());
          changed = true;
        }
      }
    }
    return p;
  }
};

SymbolPrecedence SymbolPrecedence::synthesize(const ComputationSystem& cs) {
  std::set<std::string> defined = cs.signature.defined_symbols();
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& s : defined) edges[s];
  for (const auto& r : cs.rules) {
    for (const auto& g : fun_symbols(r.rhs))
      if (defined.count(g)) edges[r.head()].insert(g);
  }
  return PrecedenceBuilder::build(defined, edges, nullptr);
}

Result<SymbolPrecedence> SymbolPrecedence::from_facts(
    const ComputationSystem& cs, const std::vector<std::pair<std::string, std::string>>& gtFacts,
    const std::vector<std::pair<std::string, std::string>>& eqFacts) {
  std::set<std::string> defined = cs.signature.defined_symbols();
  // Mentioned non-defined symbols participate too (a manifest may order
  // constructors explicitly, though it rarely needs to).
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& s : defined) edges[s];
  for (const auto& [f, g] : gtFacts) {
    if (!cs.signature.declared(f) || !cs.signature.declared(g))
      return Error{"UnknownSymbol", "precedence fact uses undeclared symbol"};
    edges[f].insert(g);
    defined.insert(f);
    defined.insert(g);
  }
  for (const auto& [f, g] : eqFacts) {
    if (!cs.signature.declared(f) || !cs.signature.declared(g))
      return Error{"UnknownSymbol", "precedence fact uses undeclared symbol"};
    defined.insert(f);
    defined.insert(g);
  }
  SymbolPrecedence p = PrecedenceBuilder::build(defined, edges, &eqFacts);
  if (!p.well_founded())
    return Error{"CyclicPrecedence", "precedence facts create a cycle through >"};
  return p;
}

SymbolPrecedence synthesize_precedence(const ComputationSystem& cs) {
  return SymbolPrecedence::synthesize(cs);
}

}  // namespace hort
