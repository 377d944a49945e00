// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/term.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace hort {

namespace {
std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

std::size_t hash_moltype(const MolType& t) {
  std::size_t h = hash_string(t.head());
  for (const auto& a : t.args()) hash_combine(h, hash_moltype(a));
  return h;
}
}  // namespace

MetaTerm MetaTerm::make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 1099511628211ULL;
  switch (n.kind) {
    case Kind::BVar:
      hash_combine(h, static_cast<std::size_t>(n.level) * 31 + n.slot);
      hash_combine(h, hash_moltype(n.type));
      break;
    case Kind::FVar:
      hash_combine(h, hash_string(n.name));
      hash_combine(h, hash_moltype(n.type));
      break;
    case Kind::Abs:
      for (const auto& b : n.binders) hash_combine(h, hash_moltype(b));
      hash_combine(h, n.args[0].hash());
      n.has_meta = n.args[0].has_meta();
      break;
    case Kind::Fun:
      hash_combine(h, hash_string(n.name));
      for (const auto& a : n.args) {
        hash_combine(h, a.hash());
        n.has_meta = n.has_meta || a.has_meta();
      }
      if (n.label) hash_combine(h, n.label->hash());
      break;
    case Kind::MetaApp:
      hash_combine(h, hash_string(n.name));
      n.has_meta = true;
      for (const auto& a : n.args) hash_combine(h, a.hash());
      break;
  }
  n.hash = h;
  MetaTerm t;
  t.n_ = std::make_shared<const Node>(std::move(n));
  return t;
}

MetaTerm MetaTerm::bvar(int level, int slot, MolType type) {
  Node n;
  n.kind = Kind::BVar;
  n.level = level;
  n.slot = slot;
  n.type = std::move(type);
  return make(std::move(n));
}

MetaTerm MetaTerm::fvar(std::string name, MolType type) {
  Node n;
  n.kind = Kind::FVar;
  n.name = std::move(name);
  n.type = std::move(type);
  return make(std::move(n));
}

MetaTerm MetaTerm::abs(std::vector<MolType> binders, std::vector<std::string> hints,
                       MetaTerm body) {
  Node n;
  n.kind = Kind::Abs;
  n.binders = std::move(binders);
  n.hints = std::move(hints);
  n.hints.resize(n.binders.size());
  n.args.push_back(std::move(body));
  return make(std::move(n));
}

MetaTerm MetaTerm::fun(std::string symbol, std::vector<MetaTerm> absArgs) {
  Node n;
  n.kind = Kind::Fun;
  n.name = std::move(symbol);
  for (auto& a : absArgs) n.args.push_back(wrap(std::move(a)));
  return make(std::move(n));
}

MetaTerm MetaTerm::fun_labelled(std::string symbol, std::vector<MetaTerm> absArgs,
                                MetaTerm label) {
  Node n;
  n.kind = Kind::Fun;
  n.name = std::move(symbol);
  for (auto& a : absArgs) n.args.push_back(wrap(std::move(a)));
  n.label = std::make_shared<const MetaTerm>(std::move(label));
  return make(std::move(n));
}

MetaTerm MetaTerm::meta(std::string name, std::vector<MetaTerm> args) {
  Node n;
  n.kind = Kind::MetaApp;
  n.name = std::move(name);
  n.args = std::move(args);
  return make(std::move(n));
}

bool MetaTerm::operator==(const MetaTerm& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->hash != o.n_->hash || n_->kind != o.n_->kind) return false;
  switch (n_->kind) {
    case Kind::BVar:
      return n_->level == o.n_->level && n_->slot == o.n_->slot && n_->type == o.n_->type;
    case Kind::FVar:
      return n_->name == o.n_->name && n_->type == o.n_->type;
    case Kind::Abs:
      return n_->binders == o.n_->binders && n_->args[0] == o.n_->args[0];
    case Kind::Fun: {
      if (n_->name != o.n_->name || n_->args != o.n_->args) return false;
      if (!n_->label != !o.n_->label) return false;
      return !n_->label || *n_->label == *o.n_->label;
    }
    case Kind::MetaApp:
      return n_->name == o.n_->name && n_->args == o.n_->args;
  }
  return false;
}

bool MetaTerm::operator<(const MetaTerm& o) const {
  if (*this == o) return false;
  if (kind() != o.kind()) return kind() < o.kind();
  switch (kind()) {
    case Kind::BVar:
      if (level() != o.level()) return level() < o.level();
      if (slot() != o.slot()) return slot() < o.slot();
      return var_type() < o.var_type();
    case Kind::FVar:
      if (name() != o.name()) return name() < o.name();
      return var_type() < o.var_type();
    case Kind::Abs:
      if (binders() != o.binders()) return binders() < o.binders();
      return body() < o.body();
    case Kind::Fun: {
      if (name() != o.name()) return name() < o.name();
      if (args() != o.args()) return args() < o.args();
      bool l = label() != nullptr, r = o.label() != nullptr;
      if (l != r) return !l;
      if (l && !(*label() == *o.label())) return *label() < *o.label();
      return false;
    }
    case Kind::MetaApp:
      if (name() != o.name()) return name() < o.name();
      return args() < o.args();
  }
  return false;
}

int MetaTerm::size() const {
  switch (kind()) {
    case Kind::BVar:
    case Kind::FVar:
      return 1;
    case Kind::Abs:
      return body().size();
    case Kind::Fun:
    case Kind::MetaApp: {
      int n = 1;
      for (const auto& a : args()) n += a.size();
      return n;
    }
  }
  return 1;
}

int MetaTerm::depth() const {
  switch (kind()) {
    case Kind::BVar:
    case Kind::FVar:
      return 1;
    case Kind::Abs:
      return body().depth();
    case Kind::Fun:
    case Kind::MetaApp: {
      int d = 0;
      for (const auto& a : args()) d = std::max(d, a.depth());
      return 1 + d;
    }
  }
  return 1;
}

namespace {

MetaTerm open_at(const MetaTerm& t, int depth, const std::vector<std::string>& names,
                 const std::vector<MolType>& types) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
      if (t.level() == depth) return MetaTerm::fvar(names[t.slot()], types[t.slot()]);
      if (t.level() > depth)
        return MetaTerm::bvar(t.level() - 1, t.slot(), t.var_type());
      return t;
    case MetaTerm::Kind::FVar:
      return t;
    case MetaTerm::Kind::Abs: {
      // Zero-binder wrappers are transparent to binding levels.
      int d = t.binders().empty() ? depth : depth + 1;
      return MetaTerm::abs(t.binders(), t.hints(), open_at(t.body(), d, names, types));
    }
    case MetaTerm::Kind::Fun: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(open_at(a, depth, names, types));
      if (t.label())
        return MetaTerm::fun_labelled(t.name(), std::move(as),
                                      open_at(*t.label(), depth, names, types));
      return MetaTerm::fun(t.name(), std::move(as));
    }
    case MetaTerm::Kind::MetaApp: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(open_at(a, depth, names, types));
      return MetaTerm::meta(t.name(), std::move(as));
    }
  }
  return t;
}

MetaTerm close_at(const MetaTerm& t, int depth, const std::vector<std::string>& names,
                  const std::vector<MolType>& types) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
      if (t.level() >= depth) return MetaTerm::bvar(t.level() + 1, t.slot(), t.var_type());
      return t;
    case MetaTerm::Kind::FVar: {
      for (size_t i = 0; i < names.size(); ++i) {
        if (t.name() == names[i]) return MetaTerm::bvar(depth, static_cast<int>(i), types[i]);
      }
      return t;
    }
    case MetaTerm::Kind::Abs: {
      int d = t.binders().empty() ? depth : depth + 1;
      return MetaTerm::abs(t.binders(), t.hints(), close_at(t.body(), d, names, types));
    }
    case MetaTerm::Kind::Fun: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(close_at(a, depth, names, types));
      if (t.label())
        return MetaTerm::fun_labelled(t.name(), std::move(as),
                                      close_at(*t.label(), depth, names, types));
      return MetaTerm::fun(t.name(), std::move(as));
    }
    case MetaTerm::Kind::MetaApp: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(close_at(a, depth, names, types));
      return MetaTerm::meta(t.name(), std::move(as));
    }
  }
  return t;
}

}  // namespace

MetaTerm open_abs(const MetaTerm& a, const std::vector<std::string>& names) {
  assert(a.is_abs() && names.size() == a.binders().size());
  if (names.empty()) return a.body();
  return open_at(a.body(), 0, names, a.binders());
}

MetaTerm open_abs_fresh(const MetaTerm& a, NameSupply& supply, std::vector<std::string>& names) {
  assert(a.is_abs());
  for (size_t i = 0; i < a.binders().size(); ++i) {
    std::string hint = i < a.hints().size() && !a.hints()[i].empty() ? a.hints()[i] : "x";
    names.push_back(supply.fresh(hint));
  }
  return open_abs(a, names);
}

MetaTerm close_over(const MetaTerm& t, const std::vector<std::string>& names,
                    const std::vector<MolType>& types, const std::vector<std::string>& hints) {
  if (names.empty()) return MetaTerm::abs({}, {}, t);
  return MetaTerm::abs(types, hints, close_at(t, 0, names, types));
}

namespace {
template <typename F>
void walk(const MetaTerm& t, F&& f) {
  f(t);
  switch (t.kind()) {
    case MetaTerm::Kind::Abs:
      walk(t.body(), f);
      break;
    case MetaTerm::Kind::Fun:
      for (const auto& a : t.args()) walk(a, f);
      if (t.label()) walk(*t.label(), f);
      break;
    case MetaTerm::Kind::MetaApp:
      for (const auto& a : t.args()) walk(a, f);
      break;
    default:
      break;
  }
}
}  // namespace

std::map<std::string, MolType> free_vars(const MetaTerm& t) {
  std::map<std::string, MolType> out;
  walk(t, [&](const MetaTerm& u) {
    if (u.is_fvar()) out.emplace(u.name(), u.var_type());
  });
  return out;
}

std::set<std::string> fun_symbols(const MetaTerm& t) {
  std::set<std::string> out;
  walk(t, [&](const MetaTerm& u) {
    if (u.is_fun()) out.insert(u.name());
  });
  return out;
}

std::set<std::string> metavars(const MetaTerm& t) {
  std::set<std::string> out;
  walk(t, [&](const MetaTerm& u) {
    if (u.is_meta()) out.insert(u.name());
  });
  return out;
}

bool has_labels(const MetaTerm& t) {
  bool found = false;
  walk(t, [&](const MetaTerm& u) {
    if (u.is_fun() && u.label()) found = true;
  });
  return found;
}

MetaTerm forget_labels(const MetaTerm& t) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      return t;
    case MetaTerm::Kind::Abs:
      return MetaTerm::abs(t.binders(), t.hints(), forget_labels(t.body()));
    case MetaTerm::Kind::Fun: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(forget_labels(a));
      return MetaTerm::fun(t.name(), std::move(as));
    }
    case MetaTerm::Kind::MetaApp: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(forget_labels(a));
      return MetaTerm::meta(t.name(), std::move(as));
    }
  }
  return t;
}

void reserve_free_vars(const MetaTerm& t, NameSupply& supply) {
  for (const auto& [n, ty] : free_vars(t)) supply.reserve(n);
}

namespace {
void collect_subterms(const MetaTerm& t, NameSupply& supply, std::vector<std::string> crossed,
                      bool proper, std::vector<SubtermOccurrence>& out) {
  if (t.is_abs() && t.binders().empty()) {
    collect_subterms(t.body(), supply, std::move(crossed), proper, out);
    return;
  }
  out.push_back({t, crossed, proper});
  switch (t.kind()) {
    case MetaTerm::Kind::Abs: {
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(t, supply, names);
      std::vector<std::string> c = crossed;
      c.insert(c.end(), names.begin(), names.end());
      collect_subterms(body, supply, std::move(c), true, out);
      break;
    }
    case MetaTerm::Kind::Fun:
    case MetaTerm::Kind::MetaApp:
      for (const auto& a : t.args()) collect_subterms(a, supply, crossed, true, out);
      break;
    default:
      break;
  }
}
}  // namespace

std::vector<SubtermOccurrence> subterm_occurrences(const MetaTerm& t, NameSupply& supply,
                                                   bool includeRoot) {
  std::vector<SubtermOccurrence> out;
  collect_subterms(t, supply, {}, false, out);
  if (!includeRoot && !out.empty()) out.erase(out.begin());
  return out;
}

// ---- printing ----

namespace {

struct Printer {
  std::set<std::string> scope;

  std::string pick(const std::string& hint) {
    std::string base = hint.empty() ? "x" : hint;
    std::string name = base;
    int k = 0;
    while (scope.count(name)) name = base + std::to_string(++k);
    return name;
  }

  void print(const MetaTerm& t, const std::vector<std::vector<std::string>>& env,
             std::ostringstream& os) {
    switch (t.kind()) {
      case MetaTerm::Kind::BVar: {
        int lvl = t.level();
        if (lvl < static_cast<int>(env.size()))
          os << env[env.size() - 1 - lvl][t.slot()];
        else
          os << "?b" << lvl << '.' << t.slot();
        break;
      }
      case MetaTerm::Kind::FVar:
        os << t.name();
        break;
      case MetaTerm::Kind::Abs: {
        if (t.binders().empty()) {
          print(t.body(), env, os);
          break;
        }
        std::vector<std::string> names;
        for (size_t i = 0; i < t.binders().size(); ++i) {
          std::string n = pick(i < t.hints().size() ? t.hints()[i] : "");
          scope.insert(n);
          names.push_back(n);
          os << n << '.';
        }
        auto env2 = env;
        env2.push_back(names);
        print(t.body(), env2, os);
        for (const auto& n : names) scope.erase(n);
        break;
      }
      case MetaTerm::Kind::Fun: {
        os << t.name();
        if (t.label()) {
          os << '{';
          print(*t.label(), env, os);
          os << '}';
        }
        if (!t.args().empty()) {
          os << '(';
          for (size_t i = 0; i < t.args().size(); ++i) {
            if (i) os << ',';
            print(t.args()[i], env, os);
          }
          os << ')';
        }
        break;
      }
      case MetaTerm::Kind::MetaApp: {
        os << t.name();
        if (!t.args().empty()) {
          os << '[';
          for (size_t i = 0; i < t.args().size(); ++i) {
            if (i) os << ',';
            print(t.args()[i], env, os);
          }
          os << ']';
        }
        break;
      }
    }
  }
};

}  // namespace

std::string MetaTerm::str() const {
  Printer p;
  for (const auto& [n, ty] : free_vars(*this)) p.scope.insert(n);
  std::ostringstream os;
  p.print(*this, {}, os);
  return os.str();
}

}  // namespace hort
