// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/fo_format.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace hort {

namespace {

bool fo_term(const MetaTerm& t, std::set<std::string>& vars, std::string& err) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      err = "free or bound variable " + t.str() + " (first-order rules are closed)";
      return false;
    case MetaTerm::Kind::Abs:
      if (!t.binders().empty()) {
        err = "binder under " + t.str();
        return false;
      }
      return fo_term(t.body(), vars, err);
    case MetaTerm::Kind::Fun:
      for (const auto& a : t.args())
        if (!fo_term(a, vars, err)) return false;
      return true;
    case MetaTerm::Kind::MetaApp:
      if (!t.args().empty()) {
        err = "applied metavariable " + t.str();
        return false;
      }
      vars.insert(t.name());
      return true;
  }
  return false;
}

void print_fo(const MetaTerm& t, std::ostringstream& os) {
  MetaTerm u = MetaTerm::unwrap(t);
  if (u.is_meta()) {
    os << u.name();
    return;
  }
  os << u.name();
  if (!u.args().empty()) {
    os << '(';
    for (size_t i = 0; i < u.args().size(); ++i) {
      if (i) os << ',';
      print_fo(u.args()[i], os);
    }
    os << ')';
  }
}

}  // namespace

Result<std::string> emit_fo_trs(const ComputationSystem& cs) {
  std::set<std::string> vars;
  for (const auto& r : cs.rules) {
    std::string err;
    if (!fo_term(r.lhs, vars, err) || !fo_term(r.rhs, vars, err))
      return Error{"NotFirstOrder", "(" + r.name + ") " + err};
  }
  std::ostringstream os;
  os << "(VAR";
  for (const auto& v : vars) os << ' ' << v;
  os << ")\n(RULES\n";
  for (const auto& r : cs.rules) {
    os << "  ";
    print_fo(r.lhs, os);
    os << " -> ";
    print_fo(r.rhs, os);
    os << '\n';
  }
  os << ")\n";
  return os.str();
}

namespace {

struct FoParser {
  const std::string& s;
  size_t i = 0;
  std::set<std::string> vars;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    ws();
    size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                            s[i] == '.' || s[i] == '#'))
      ++i;
    return s.substr(b, i - b);
  }

  Result<MetaTerm> term() {
    std::string id = ident();
    if (id.empty()) return Error{"ParseError", "expected identifier at offset " + std::to_string(i)};
    if (eat('(')) {
      std::vector<MetaTerm> args;
      ws();
      if (!eat(')')) {
        while (true) {
          Result<MetaTerm> a = term();
          if (!a) return a;
          args.push_back(*a);
          if (eat(')')) break;
          if (!eat(',')) return Error{"ParseError", "expected , or ) at offset " + std::to_string(i)};
        }
      }
      return MetaTerm::fun(id, std::move(args));
    }
    if (vars.count(id)) return MetaTerm::meta(id, {});
    return MetaTerm::fun(id, {});
  }
};

}  // namespace

Result<std::vector<FoRule>> parse_fo_trs(const std::string& text) {
  FoParser p{text};
  if (!p.eat('(')) return Error{"ParseError", "expected (VAR ...)"};
  std::string kw = p.ident();
  if (kw != "VAR") return Error{"ParseError", "expected VAR"};
  while (true) {
    p.ws();
    if (p.eat(')')) break;
    std::string v = p.ident();
    if (v.empty()) return Error{"ParseError", "bad variable list"};
    p.vars.insert(v);
  }
  if (!p.eat('(')) return Error{"ParseError", "expected (RULES ...)"};
  if (p.ident() != "RULES") return Error{"ParseError", "expected RULES"};
  std::vector<FoRule> rules;
  while (true) {
    p.ws();
    if (p.eat(')')) break;
    Result<MetaTerm> l = p.term();
    if (!l) return l.error();
    p.ws();
    if (!(p.eat('-') && p.eat('>'))) return Error{"ParseError", "expected ->"};
    Result<MetaTerm> r = p.term();
    if (!r) return r.error();
    rules.push_back({*l, *r});
  }
  return rules;
}

Result<FoRule> fo_view(const Rule& r) {
  std::set<std::string> vars;
  std::string err;
  ComputationSystem dummy;
  MetaTerm l = r.lhs, rr = r.rhs;
  std::function<Result<MetaTerm>(const MetaTerm&)> strip =
      [&](const MetaTerm& t) -> Result<MetaTerm> {
    MetaTerm u = MetaTerm::unwrap(t);
    switch (u.kind()) {
      case MetaTerm::Kind::MetaApp:
        if (!u.args().empty()) return Error{"NotFirstOrder", "applied metavariable " + u.str()};
        return u;
      case MetaTerm::Kind::Fun: {
        std::vector<MetaTerm> as;
        for (const auto& a : u.args()) {
          if (a.is_abs() && !a.binders().empty())
            return Error{"NotFirstOrder", "binder under " + u.str()};
          Result<MetaTerm> b = strip(a);
          if (!b) return b;
          as.push_back(*b);
        }
        return MetaTerm::fun(u.name(), std::move(as));
      }
      default:
        return Error{"NotFirstOrder", "unexpected " + u.str()};
    }
  };
  Result<MetaTerm> ls = strip(l);
  if (!ls) return ls.error();
  Result<MetaTerm> rs = strip(rr);
  if (!rs) return rs.error();
  return FoRule{*ls, *rs};
}

Result<Verdict> run_external_fo_checker(const std::string& command,
                                        const std::string& document) {
  std::string path = "/tmp/hort_fo_XXXXXX";
  std::vector<char> buf(path.begin(), path.end());
  buf.push_back('\0');
  int fd = mkstemp(buf.data());
  if (fd < 0) return Error{"ExternalChecker", "cannot create temporary file"};
  close(fd);
  path.assign(buf.data());
  {
    std::ofstream out(path);
    out << document;
  }
  std::string cmd = command + " " + path;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return Error{"ExternalChecker", "cannot run: " + cmd};
  char line[256] = {0};
  std::string first;
  if (fgets(line, sizeof line, pipe)) first = line;
  pclose(pipe);
  std::remove(path.c_str());
  while (!first.empty() && (first.back() == '\n' || first.back() == '\r')) first.pop_back();
  if (first == "YES") return Verdict::Yes;
  if (first == "NO") return Verdict::No;
  if (first == "MAYBE") return Verdict::Maybe;
  return Error{"ExternalChecker", "unrecognized answer: " + first};
}

}  // namespace hort
