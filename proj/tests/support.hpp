// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_TESTS_SUPPORT_HPP
#define HORT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hort/manifest.hpp"
#include "hort/oracle.hpp"
#include "hort/subst.hpp"
#include "hort/typecheck.hpp"

namespace hort_test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline hort::Manifest corpus(const std::string& name) {
  auto m = hort::parse_manifest(read_file(std::string(HORT_CORPUS_DIR) + "/" + name));
  if (!m) throw std::runtime_error("corpus " + name + ": " + m.error().str());
  return *m;
}

inline hort::Manifest manifest(const std::string& text) {
  auto m = hort::parse_manifest(text);
  if (!m) throw std::runtime_error("manifest: " + m.error().str());
  return *m;
}

inline hort::MetaTerm term(const hort::Manifest& m, const std::string& text) {
  auto t = hort::parse_term(m, text);
  if (!t) throw std::runtime_error("term " + text + ": " + t.error().str());
  return *t;
}

/// Random well-typed meta-term generator over a signature.
struct TermGen {
  const hort::Signature& sig;
  std::mt19937_64 rng;
  hort::MetaContext* ctx = nullptr;       // enables existing metavariables
  hort::MetaContext* infer = nullptr;     // enables fresh pattern metavariables
  int fresh_metas = 0;

  explicit TermGen(const hort::Signature& s, unsigned long long seed) : sig(s), rng(seed) {}

  using Scope = std::vector<std::pair<std::string, hort::MolType>>;

  std::optional<hort::MetaTerm> gen(const hort::MolType& type, int depth, Scope& scope,
                                    bool patternMode = false) {
    std::vector<int> choices;  // 0..: scope vars, then symbols, then metas
    std::vector<std::string> vars;
    for (const auto& [n, t] : scope)
      if (t == type) vars.push_back(n);
    std::vector<std::string> syms;
    for (const auto& s : sig.symbols()) {
      const hort::FunType* ft = sig.lookup(s);
      if (!(ft->result == type)) continue;
      if (depth > 1 || ft->args.empty()) syms.push_back(s);
    }
    bool canMeta = (ctx || infer);
    int options = static_cast<int>(vars.size() + syms.size()) + (canMeta ? 1 : 0);
    if (options == 0) return std::nullopt;
    for (int attempt = 0; attempt < 6; ++attempt) {
      int pick = static_cast<int>(rng() % options);
      if (pick < static_cast<int>(vars.size())) {
        return hort::MetaTerm::fvar(vars[pick], type);
      }
      pick -= static_cast<int>(vars.size());
      if (pick < static_cast<int>(syms.size())) {
        const std::string& s = syms[pick];
        const hort::FunType& ft = *sig.lookup(s);
        std::vector<hort::MetaTerm> args;
        bool ok = true;
        for (const auto& at : ft.args) {
          Scope inner = scope;
          std::vector<std::string> names, hints;
          for (size_t j = 0; j < at.binders.size(); ++j) {
            std::string v = "g" + std::to_string(rng() % 1000) + "_" + std::to_string(j);
            names.push_back(v);
            hints.push_back("x");
            inner.emplace_back(v, at.binders[j]);
          }
          auto body = gen(at.body, depth - 1, inner, patternMode);
          if (!body) {
            ok = false;
            break;
          }
          args.push_back(hort::close_over(*body, names, at.binders, hints));
        }
        if (!ok) continue;
        return hort::MetaTerm::fun(s, std::move(args));
      }
      // Metavariable.
      if (infer && patternMode) {
        // Fresh metavariable applied to a random subset of distinct scope vars.
        std::vector<std::pair<std::string, hort::MolType>> pool = scope;
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t k = pool.empty() ? 0 : rng() % (pool.size() + 1);
        std::vector<hort::MetaTerm> args;
        std::vector<hort::MolType> argTypes;
        for (size_t j = 0; j < k; ++j) {
          args.push_back(hort::MetaTerm::fvar(pool[j].first, pool[j].second));
          argTypes.push_back(pool[j].second);
        }
        std::string name = "G" + std::to_string(fresh_metas++);
        infer->declare({name, argTypes, type});
        return hort::MetaTerm::meta(name, std::move(args));
      }
      if (ctx) {
        std::vector<const hort::MetaDecl*> ds;
        for (const auto& d : ctx->decls())
          if (d.result == type) ds.push_back(&d);
        if (ds.empty()) continue;
        const hort::MetaDecl* d = ds[rng() % ds.size()];
        std::vector<hort::MetaTerm> args;
        bool ok = true;
        for (const auto& at : d->arg_types) {
          auto a = gen(at, depth - 1, scope, patternMode);
          if (!a) {
            ok = false;
            break;
          }
          args.push_back(*a);
        }
        if (!ok) continue;
        return hort::MetaTerm::meta(d->name, std::move(args));
      }
    }
    return std::nullopt;
  }
};

}  // namespace hort_test

#endif
