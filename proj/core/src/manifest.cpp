// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/manifest.hpp"

#include <cctype>
#include <sstream>

namespace hort {

namespace {

struct Tok {
  enum Kind { Ident, LParen, RParen, LBrack, RBrack, Comma, Dot, Arrow, At, Plus, Colon,
              Slash, Gt, Eq, Newline, End } kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1, col = 1;
  std::vector<Tok> toks;

  void push(Tok::Kind k, std::string t, int l, int c) { toks.push_back({k, std::move(t), l, c}); }

  Result<std::vector<Tok>> run() {
    while (i < src.size()) {
      char c = src[i];
      int l = line, co = col;
      if (c == '\n') {
        push(Tok::Newline, "\n", l, co);
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') advance();
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (i < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
          id += src[i];
          advance();
        }
        push(Tok::Ident, id, l, co);
        continue;
      }
      if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
        advance();
        advance();
        push(Tok::Arrow, "->", l, co);
        continue;
      }
      switch (c) {
        case '(': push(Tok::LParen, "(", l, co); break;
        case ')': push(Tok::RParen, ")", l, co); break;
        case '[': push(Tok::LBrack, "[", l, co); break;
        case ']': push(Tok::RBrack, "]", l, co); break;
        case ',': push(Tok::Comma, ",", l, co); break;
        case '.': push(Tok::Dot, ".", l, co); break;
        case '@': push(Tok::At, "@", l, co); break;
        case '+': push(Tok::Plus, "+", l, co); break;
        case ':': push(Tok::Colon, ":", l, co); break;
        case '/': push(Tok::Slash, "/", l, co); break;
        case '>': push(Tok::Gt, ">", l, co); break;
        case '=': push(Tok::Eq, "=", l, co); break;
        default:
          return Error{"ParseError", "line " + std::to_string(l) + ", col " + std::to_string(co) +
                                         ": unexpected character '" + std::string(1, c) + "'"};
      }
      advance();
    }
    push(Tok::End, "", line, col);
    return toks;
  }

  void advance() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
};

struct Parser {
  std::vector<Tok> toks;
  size_t p = 0;
  Manifest m;
  std::map<std::string, int> ctor_arity;
  std::set<std::string> atomic_names;

  const Tok& cur() const { return toks[p]; }
  const Tok& peek(size_t k = 1) const { return toks[std::min(p + k, toks.size() - 1)]; }
  void next() {
    if (cur().kind != Tok::End) ++p;
  }
  bool at(Tok::Kind k) const { return cur().kind == k; }
  bool at_ident(const std::string& s) const { return at(Tok::Ident) && cur().text == s; }
  void skip_newlines() {
    while (at(Tok::Newline)) next();
  }

  Error err(const std::string& msg) const {
    return Error{"ParseError", "line " + std::to_string(cur().line) + ", col " +
                                   std::to_string(cur().col) + ": " + msg};
  }
  Error errc(const std::string& code, const std::string& msg) const {
    return Error{code, "line " + std::to_string(cur().line) + ", col " +
                           std::to_string(cur().col) + ": " + msg};
  }

  Result<std::string> ident(const std::string& what) {
    if (!at(Tok::Ident)) return err("expected " + what);
    std::string s = cur().text;
    next();
    return s;
  }

  Result<MolType> mol_type() {
    Result<std::string> head = ident("a type name");
    if (!head) return head.error();
    if (atomic_names.count(*head)) {
      if (at(Tok::LParen)) return errc("ArityError", *head + " is atomic and takes no arguments");
      return MolType(*head);
    }
    auto it = ctor_arity.find(*head);
    if (it == ctor_arity.end()) return errc("UnknownSymbol", "unknown type " + *head);
    if (!at(Tok::LParen))
      return errc("ArityError", "type constructor " + *head + " needs " +
                                    std::to_string(it->second) + " arguments");
    next();
    std::vector<MolType> args;
    while (true) {
      Result<MolType> a = mol_type();
      if (!a) return a;
      args.push_back(*a);
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      if (at(Tok::RParen)) {
        next();
        break;
      }
      return err("expected , or ) in type arguments");
    }
    if (static_cast<int>(args.size()) != it->second)
      return errc("ArityError", "type constructor " + *head + " expects " +
                                    std::to_string(it->second) + " arguments");
    return MolType(*head, std::move(args));
  }

  // (a1,...,ak -> b) or a plain mol type.
  Result<ArgType> arg_type() {
    if (at(Tok::LParen)) {
      next();
      std::vector<MolType> binders;
      while (true) {
        Result<MolType> a = mol_type();
        if (!a) return a.error();
        binders.push_back(*a);
        if (at(Tok::Comma)) {
          next();
          continue;
        }
        break;
      }
      if (!at(Tok::Arrow)) return err("expected -> in a binder argument type");
      next();
      Result<MolType> body = mol_type();
      if (!body) return body.error();
      if (!at(Tok::RParen)) return err("expected ) after binder argument type");
      next();
      return ArgType{std::move(binders), *body};
    }
    Result<MolType> b = mol_type();
    if (!b) return b.error();
    return ArgType{{}, *b};
  }

  Result<FunType> fun_type() {
    FunType ft;
    if (at(Tok::Arrow)) {  // "f : -> c"
      next();
      Result<MolType> r = mol_type();
      if (!r) return r.error();
      ft.result = *r;
      return ft;
    }
    while (true) {
      Result<ArgType> a = arg_type();
      if (!a) return a.error();
      if (at(Tok::Comma)) {
        ft.args.push_back(*a);
        next();
        continue;
      }
      if (at(Tok::Arrow)) {
        ft.args.push_back(*a);
        next();
        Result<MolType> r = mol_type();
        if (!r) return r.error();
        ft.result = *r;
        return ft;
      }
      // Lone mol type: nullary constant.
      if (!a->binders.empty()) return err("expected -> after argument types");
      ft.result = a->body;
      return ft;
    }
  }

  // --- terms -------------------------------------------------------------

  struct Scope {
    std::vector<std::pair<std::string, MolType>> vars;
    const MolType* lookup(const std::string& n) const {
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (it->first == n) return &it->second;
      return nullptr;
    }
  };

  MetaContext* ctx = nullptr;  // inferred (lhs) or fixed (rhs/terms)
  bool infer_metas = false;

  static bool is_metavar_name(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
  }

  Result<MetaTerm> term(const MolType& expected, Scope& sc) {
    // t + s desugars to plus(t, s), lowest precedence, left associative.
    const FunType* pft = m.system.signature.lookup("plus");
    MolType firstExpected = expected;
    if (pft && pft->args.size() == 2 && has_infix_at_depth0(Tok::Plus, Tok::Plus))
      firstExpected = pft->args[0].body;
    Result<MetaTerm> lhs = app_chain(firstExpected, sc);
    if (!lhs) return lhs;
    if (!at(Tok::Plus)) return lhs;
    if (!pft || pft->args.size() != 2)
      return errc("UnknownSymbol", "'+' needs a declared binary symbol plus");
    MetaTerm acc = *lhs;
    while (at(Tok::Plus)) {
      next();
      Result<MetaTerm> rhs = app_chain(pft->args[1].body, sc);
      if (!rhs) return rhs;
      acc = MetaTerm::fun("plus", {acc, *rhs});
    }
    if (!(pft->result == expected))
      return errc("TypeMismatch",
                  "'+' has type " + pft->result.str() + ", expected " + expected.str());
    return acc;
  }

  // True when the upcoming tokens contain `tok` before the expression ends
  // (at depth 0 relative to the current position).
  bool has_infix_at_depth0(Tok::Kind tok, Tok::Kind stopAtToo) const {
    int depth = 0;
    for (size_t k = p; k < toks.size(); ++k) {
      const Tok& t = toks[k];
      if (t.kind == Tok::LParen || t.kind == Tok::LBrack) ++depth;
      if (t.kind == Tok::RParen || t.kind == Tok::RBrack) {
        if (depth == 0) return false;
        --depth;
      }
      if (depth == 0) {
        if (t.kind == tok) return true;
        if (t.kind == Tok::Comma || t.kind == Tok::Arrow || t.kind == Tok::Newline ||
            t.kind == Tok::End)
          return false;
        if (stopAtToo != tok && t.kind == stopAtToo) return false;
      }
    }
    return false;
  }

  Result<MetaTerm> app_chain(const MolType& expected, Scope& sc) {
    // t @ s desugars to app(t, s), left associative; the operand types come
    // from the declared app symbol.
    const FunType* ft = m.system.signature.lookup("app");
    bool chained = ft && ft->args.size() == 2 && has_infix_at_depth0(Tok::At, Tok::Plus);
    if (!chained) return primary(expected, sc);
    Result<MetaTerm> lhs = primary(ft->args[0].body, sc);
    if (!lhs) return lhs;
    MetaTerm acc = *lhs;
    while (at(Tok::At)) {
      next();
      Result<MetaTerm> rhs = primary(ft->args[1].body, sc);
      if (!rhs) return rhs;
      acc = MetaTerm::fun("app", {acc, *rhs});
      if (at(Tok::At) && !(ft->result == ft->args[0].body))
        return errc("TypeMismatch", "chained @ needs app : (a,b) -> a");
    }
    if (!(ft->result == expected))
      return errc("TypeMismatch", "@-application has type " + ft->result.str() + ", expected " +
                                      expected.str());
    return acc;
  }

  Result<MetaTerm> primary(const MolType& expected, Scope& sc) {
    if (at(Tok::LParen)) {
      next();
      Result<MetaTerm> t = term(expected, sc);
      if (!t) return t;
      if (!at(Tok::RParen)) return err("expected )");
      next();
      return t;
    }
    Result<std::string> idr = ident("a term");
    if (!idr) return idr.error();
    std::string id = *idr;

    // Bound variable?
    if (const MolType* vt = sc.lookup(id)) {
      if (!(*vt == expected))
        return errc("TypeMismatch",
                    "variable " + id + " : " + vt->str() + ", expected " + expected.str());
      return MetaTerm::fvar(id, *vt);
    }

    // Declared symbol?
    if (const FunType* ft = m.system.signature.lookup(id)) {
      if (!(ft->result == expected))
        return errc("TypeMismatch",
                    id + " : " + ft->str() + " does not produce " + expected.str());
      std::vector<MetaTerm> args;
      if (at(Tok::LParen)) {
        next();
        for (size_t k = 0; k < ft->args.size(); ++k) {
          Result<MetaTerm> a = fun_argument(ft->args[k], sc);
          if (!a) return a;
          args.push_back(*a);
          if (k + 1 < ft->args.size()) {
            if (!at(Tok::Comma)) return errc("ArityError", id + " needs more arguments");
            next();
          }
        }
        if (at(Tok::Comma)) return errc("ArityError", id + " applied to too many arguments");
        if (!at(Tok::RParen)) return err("expected ) after arguments of " + id);
        next();
      }
      if (args.size() != ft->args.size())
        return errc("ArityError", id + " expects " + std::to_string(ft->args.size()) +
                                      " arguments");
      return MetaTerm::fun(id, std::move(args));
    }

    // Metavariable.
    if (is_metavar_name(id)) {
      std::vector<MetaTerm> args;
      std::vector<MolType> argTypes;
      if (at(Tok::LBrack)) {
        next();
        if (!at(Tok::RBrack)) {
          const MetaDecl* d = ctx ? ctx->lookup(id) : nullptr;
          size_t k = 0;
          while (true) {
            if (d) {
              if (k >= d->arg_types.size())
                return errc("ArityError", id + " applied to too many arguments");
              Result<MetaTerm> a = term(d->arg_types[k], sc);
              if (!a) return a;
              args.push_back(*a);
              argTypes.push_back(d->arg_types[k]);
            } else {
              // Inference: the argument must be a variable in scope.
              Result<std::string> v = ident("a bound variable (pattern position)");
              if (!v) return v.error();
              const MolType* vt = sc.lookup(*v);
              if (!vt)
                return errc("UnboundVariable",
                            *v + " (meta-application arguments in a lhs are bound variables)");
              args.push_back(MetaTerm::fvar(*v, *vt));
              argTypes.push_back(*vt);
            }
            ++k;
            if (at(Tok::Comma)) {
              next();
              continue;
            }
            break;
          }
        }
        if (!at(Tok::RBrack)) return err("expected ] after metavariable arguments");
        next();
      }
      if (!ctx) return errc("UnboundMetavariable", id + " in a ground term");
      const MetaDecl* d = ctx->lookup(id);
      if (!d) {
        if (!infer_metas) return errc("UnboundMetavariable", id);
        ctx->declare({id, argTypes, expected});
        d = ctx->lookup(id);
      }
      if (d->arg_types.size() != args.size())
        return errc("ArityMismatch", id + " expects " + std::to_string(d->arg_types.size()) +
                                         " arguments");
      if (!(d->result == expected))
        return errc("TypeMismatch", id + " : ... -> " + d->result.str() + ", expected " +
                                        expected.str());
      for (size_t k = 0; k < args.size(); ++k) {
        // When d pre-existed and we parsed by inference path types may differ.
        if (!argTypes.empty() && !(argTypes[k] == d->arg_types[k]))
          return errc("TypeMismatch", "argument " + std::to_string(k + 1) + " of " + id);
      }
      return MetaTerm::meta(id, std::move(args));
    }

    return errc("UnknownSymbol", id + " is not declared, bound, or a metavariable");
  }

  Result<MetaTerm> fun_argument(const ArgType& at_, Scope& sc) {
    std::vector<std::string> names;
    std::vector<std::string> hints;
    size_t mark = sc.vars.size();
    for (size_t j = 0; j < at_.binders.size(); ++j) {
      Result<std::string> v = ident("a binder variable");
      if (!v) return v.error();
      if (!at(Tok::Dot)) return err("expected . after binder " + *v);
      next();
      names.push_back(*v);
      hints.push_back(*v);
      sc.vars.emplace_back(*v, at_.binders[j]);
    }
    Result<MetaTerm> body = term(at_.body, sc);
    sc.vars.resize(mark);
    if (!body) return body;
    return close_over(*body, names, at_.binders, hints);
  }

  // --- top level ---------------------------------------------------------

  Result<bool> line() {
    skip_newlines();
    if (at(Tok::End)) return false;
    if (at_ident("type")) {
      next();
      Result<std::string> n = ident("a type constructor name");
      if (!n) return n.error();
      if (!at(Tok::Slash)) return err("expected / and an arity");
      next();
      Result<std::string> a = ident("an arity");
      if (!a) return a.error();
      int arity = std::atoi(a->c_str());
      if (arity < 1) return errc("ArityError", "type constructor arity must be >= 1");
      if (ctor_arity.count(*n) || atomic_names.count(*n))
        return errc("ParseError", "type " + *n + " already declared");
      ctor_arity[*n] = arity;
      m.type_ctors.push_back({*n, arity});
      return true;
    }
    if (at_ident("atomic")) {
      next();
      Result<std::string> n = ident("an atomic type name");
      if (!n) return n.error();
      if (ctor_arity.count(*n) || atomic_names.count(*n))
        return errc("ParseError", "type " + *n + " already declared");
      atomic_names.insert(*n);
      m.atomics.push_back(*n);
      return true;
    }
    if (at_ident("split")) {
      next();
      if (at_ident("auto")) {  // tolerate "auto-fo" split across tokens
        next();
        m.split_mode = SplitMode::AutoFo;
        // optional "-fo" remnant is not lexable; accept "auto" alone
        return true;
      }
      if (at_ident("A")) {
        next();
        m.split_mode = SplitMode::Explicit;
        while (at(Tok::Ident) || at(Tok::LParen)) {
          if (at(Tok::LParen)) {
            next();
            Result<std::string> n = ident("a rule name");
            if (!n) return n.error();
            if (!at(Tok::RParen)) return err("expected )");
            next();
            m.split_a.push_back(*n);
          } else {
            m.split_a.push_back(cur().text);
            next();
          }
        }
        return true;
      }
      return err("expected 'auto-fo' or 'A <rule names>' after split");
    }
    if (at_ident("option")) {
      next();
      Result<std::string> k = ident("an option name");
      if (!k) return k.error();
      if (*k == "subterm") {
        Result<std::string> v = ident("stable|structural");
        if (!v) return v.error();
        if (*v == "stable") m.options.subterm = SubtermVariant::Stable;
        else if (*v == "structural") m.options.subterm = SubtermVariant::Structural;
        else return err("subterm must be stable or structural");
        m.options.subterm_set = true;
        return true;
      }
      if (*k == "clause5") {
        Result<std::string> v = ident("lex|multiset");
        if (!v) return v.error();
        if (*v == "lex") m.options.clause5 = Clause5Ext::Lex;
        else if (*v == "multiset") m.options.clause5 = Clause5Ext::Multiset;
        else return err("clause5 must be lex or multiset");
        return true;
      }
      if (*k == "type") {
        // "type-order" lexes as Ident(type) ... ; tolerate both spellings
        return err("write 'option type_order default|identity'");
      }
      if (*k == "type_order") {
        Result<std::string> v = ident("default|identity");
        if (!v) return v.error();
        m.options.identity_type_order = (*v == "identity");
        return true;
      }
      if (*k == "weights_bound" || *k == "oracle_depth" || *k == "oracle_width") {
        Result<std::string> v = ident("a number");
        if (!v) return v.error();
        long long n = std::atoll(v->c_str());
        if (*k == "weights_bound") m.options.weights_bound = static_cast<int>(n);
        if (*k == "oracle_depth") m.options.oracle_depth = static_cast<int>(n);
        if (*k == "oracle_width") m.options.oracle_width = n;
        return true;
      }
      return err("unknown option " + *k);
    }
    if (at_ident("precedence")) {
      next();
      Result<std::string> f = ident("a symbol");
      if (!f) return f.error();
      bool gt;
      if (at(Tok::Gt)) gt = true;
      else if (at(Tok::Eq)) gt = false;
      else return err("expected > or = in a precedence fact");
      next();
      Result<std::string> g = ident("a symbol");
      if (!g) return g.error();
      (gt ? m.prec_gt : m.prec_eq).push_back({*f, *g});
      return true;
    }
    if (at(Tok::LParen)) {  // rule
      next();
      Result<std::string> name = ident("a rule name");
      if (!name) return name.error();
      if (!at(Tok::RParen)) return err("expected ) after rule name");
      next();
      if (m.system.rule(*name)) return err("duplicate rule name " + *name);
      // The lhs root symbol determines the rule type; top-level infix sugar
      // makes plus/app the root.
      std::string rootName;
      if (has_infix_at_depth0(Tok::Plus, Tok::Plus)) rootName = "plus";
      else if (has_infix_at_depth0(Tok::At, Tok::Plus)) rootName = "app";
      else if (at(Tok::Ident)) rootName = cur().text;
      else return err("rule lhs must start with a declared symbol");
      const FunType* rootT = m.system.signature.lookup(rootName);
      if (!rootT) return errc("UnknownSymbol", "undeclared lhs symbol " + rootName);
      Rule r;
      r.name = *name;
      r.rule_type = rootT->result;
      ctx = &r.context;
      infer_metas = true;
      Scope sc;
      Result<MetaTerm> lhs = term(r.rule_type, sc);
      infer_metas = false;
      if (!lhs) {
        ctx = nullptr;
        return lhs.error();
      }
      if (!at(Tok::Arrow)) {
        ctx = nullptr;
        return err("expected -> between rule sides");
      }
      next();
      Result<MetaTerm> rhs = term(r.rule_type, sc);
      ctx = nullptr;
      if (!rhs) return rhs.error();
      r.lhs = *lhs;
      r.rhs = *rhs;
      m.system.rules.push_back(std::move(r));
      return true;
    }
    if (at(Tok::Ident) && peek().kind == Tok::Colon) {  // symbol declaration
      std::string name = cur().text;
      next();
      next();
      Result<FunType> ft = fun_type();
      if (!ft) return ft.error();
      if (!m.system.signature.declare(name, *ft))
        return err("symbol " + name + " already declared");
      return true;
    }
    return err("unrecognized line starting with '" + cur().text + "'");
  }

  Result<Manifest> run() {
    while (true) {
      Result<bool> r = line();
      if (!r) return r.error();
      if (!*r) break;
      if (!at(Tok::Newline) && !at(Tok::End)) return err("trailing input on the line");
    }
    m.system.assign_roles();
    if (auto e = m.system.validate()) return *e;
    return m;
  }
};

}  // namespace

Result<Manifest> parse_manifest(const std::string& text) {
  Lexer lx{text};
  Result<std::vector<Tok>> toks = lx.run();
  if (!toks) return toks.error();
  Parser ps{*toks};
  return ps.run();
}

namespace {

void print_funtype(const FunType& ft, std::ostringstream& os) {
  for (size_t i = 0; i < ft.args.size(); ++i) {
    if (i) os << ", ";
    os << ft.args[i].str();
  }
  os << (ft.args.empty() ? "-> " : " -> ") << ft.result.str();
}

}  // namespace

std::string print_manifest(const Manifest& m) {
  std::ostringstream os;
  for (const auto& [n, a] : m.type_ctors) os << "type " << n << "/" << a << "\n";
  for (const auto& n : m.atomics) os << "atomic " << n << "\n";
  for (const auto& s : m.system.signature.symbols()) {
    os << s << " : ";
    print_funtype(*m.system.signature.lookup(s), os);
    os << "\n";
  }
  for (const auto& r : m.system.rules)
    os << "(" << r.name << ") " << r.lhs.str() << " -> " << r.rhs.str() << "\n";
  if (m.split_mode == SplitMode::AutoFo) os << "split auto\n";
  if (m.split_mode == SplitMode::Explicit) {
    os << "split A";
    for (const auto& n : m.split_a) os << ' ' << n;
    os << "\n";
  }
  if (m.options.subterm_set)
    os << "option subterm "
       << (m.options.subterm == SubtermVariant::Structural ? "structural" : "stable") << "\n";
  if (m.options.clause5 == Clause5Ext::Multiset) os << "option clause5 multiset\n";
  if (m.options.identity_type_order) os << "option type_order identity\n";
  if (m.options.weights_bound != 2) os << "option weights_bound " << m.options.weights_bound << "\n";
  if (m.options.oracle_depth != 8) os << "option oracle_depth " << m.options.oracle_depth << "\n";
  if (m.options.oracle_width != 10000)
    os << "option oracle_width " << m.options.oracle_width << "\n";
  for (const auto& [f, g] : m.prec_gt) os << "precedence " << f << " > " << g << "\n";
  for (const auto& [f, g] : m.prec_eq) os << "precedence " << f << " = " << g << "\n";
  return os.str();
}

bool Manifest::structurally_equal(const Manifest& o) const {
  if (type_ctors != o.type_ctors || atomics != o.atomics) return false;
  if (system.signature.symbols() != o.system.signature.symbols()) return false;
  for (const auto& s : system.signature.symbols())
    if (!(*system.signature.lookup(s) == *o.system.signature.lookup(s))) return false;
  if (system.rules.size() != o.system.rules.size()) return false;
  for (size_t i = 0; i < system.rules.size(); ++i) {
    const Rule& a = system.rules[i];
    const Rule& b = o.system.rules[i];
    if (a.name != b.name || !(a.lhs == b.lhs) || !(a.rhs == b.rhs) ||
        !(a.rule_type == b.rule_type))
      return false;
  }
  if (split_mode != o.split_mode || split_a != o.split_a) return false;
  if (options.subterm != o.options.subterm || options.clause5 != o.options.clause5 ||
      options.weights_bound != o.options.weights_bound ||
      options.oracle_depth != o.options.oracle_depth ||
      options.oracle_width != o.options.oracle_width ||
      options.identity_type_order != o.options.identity_type_order)
    return false;
  return prec_gt == o.prec_gt && prec_eq == o.prec_eq;
}

Result<MetaTerm> parse_term(const Manifest& m, const std::string& text) {
  Lexer lx{text};
  Result<std::vector<Tok>> toks = lx.run();
  if (!toks) return toks.error();
  Parser ps{*toks};
  ps.m = m;
  // Determine the expected type from the root symbol.
  ps.skip_newlines();
  size_t save = ps.p;
  if (ps.at(Tok::LParen)) return Error{"ParseError", "a ground term must start with a symbol"};
  Result<std::string> root = ps.ident("a symbol");
  if (!root) return root.error();
  const FunType* ft = m.system.signature.lookup(*root);
  if (!ft) return Error{"UnknownSymbol", *root + " is not declared"};
  ps.p = save;
  Parser::Scope sc;
  MetaContext empty;
  ps.ctx = &empty;
  Result<MetaTerm> t = ps.term(ft->result, sc);
  if (!t) return t;
  ps.skip_newlines();
  if (!ps.at(Tok::End)) return Error{"ParseError", "trailing input after the term"};
  return *t;
}

}  // namespace hort
