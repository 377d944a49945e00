// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/typecheck.hpp"

namespace hort {

namespace {

Result<MolType> check(const Signature& sig, const MetaContext& ctx,
                      std::vector<std::pair<std::string, MolType>>& env, const MetaTerm& t,
                      NameSupply& supply) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
      // All binders are opened before descending; a live BVar is malformed.
      return Error{"TypeMismatch", "dangling bound variable in " + t.str()};
    case MetaTerm::Kind::FVar: {
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t.name()) {
          if (it->second != t.var_type())
            return Error{"TypeMismatch", "variable " + t.name() + " annotated " +
                                             t.var_type().str() + " but bound at " +
                                             it->second.str()};
          return it->second;
        }
      return Error{"UnboundVariable", t.name()};
    }
    case MetaTerm::Kind::Abs:
      return Error{"TypeMismatch", "abstraction outside a function argument: " + t.str()};
    case MetaTerm::Kind::Fun: {
      const FunType* ft = sig.lookup(t.name());
      if (!ft) return Error{"UnboundVariable", "undeclared symbol " + t.name()};
      if (ft->args.size() != t.args().size())
        return Error{"ArityMismatch", t.name() + " expects " + std::to_string(ft->args.size()) +
                                          " arguments, got " + std::to_string(t.args().size()) +
                                          " in " + t.str()};
      for (size_t i = 0; i < t.args().size(); ++i) {
        const MetaTerm& a = t.args()[i];
        if (!a.is_abs())
          return Error{"TypeMismatch", "argument " + std::to_string(i + 1) + " of " + t.name() +
                                           " is not an abstraction node"};
        if (a.binders() != ft->args[i].binders)
          return Error{"TypeMismatch", "binder types of argument " + std::to_string(i + 1) +
                                           " of " + t.name() + " do not match " +
                                           ft->args[i].str()};
        std::vector<std::string> names;
        MetaTerm body = open_abs_fresh(a, supply, names);
        size_t mark = env.size();
        for (size_t j = 0; j < names.size(); ++j) env.emplace_back(names[j], a.binders()[j]);
        Result<MolType> bt = check(sig, ctx, env, body, supply);
        env.resize(mark);
        if (!bt) return bt;
        if (*bt != ft->args[i].body)
          return Error{"TypeMismatch", "argument " + std::to_string(i + 1) + " of " + t.str() +
                                           " has type " + bt->str() + ", expected " +
                                           ft->args[i].body.str()};
      }
      return ft->result;
    }
    case MetaTerm::Kind::MetaApp: {
      const MetaDecl* d = ctx.lookup(t.name());
      if (!d) return Error{"UnboundMetavariable", t.name()};
      if (d->arg_types.size() != t.args().size())
        return Error{"ArityMismatch", t.name() + " expects " +
                                          std::to_string(d->arg_types.size()) +
                                          " arguments, got " + std::to_string(t.args().size()) +
                                          " in " + t.str()};
      for (size_t i = 0; i < t.args().size(); ++i) {
        Result<MolType> at = check(sig, ctx, env, t.args()[i], supply);
        if (!at) return at;
        if (*at != d->arg_types[i])
          return Error{"TypeMismatch", "argument " + std::to_string(i + 1) + " of " + t.str() +
                                           " has type " + at->str() + ", expected " +
                                           d->arg_types[i].str()};
      }
      return d->result;
    }
  }
  return Error{"TypeMismatch", "malformed term"};
}

}  // namespace

Result<MolType> typecheck(const Signature& sig, const MetaContext& ctx, const VarEnv& env,
                          const MetaTerm& t) {
  NameSupply supply;
  reserve_free_vars(t, supply);
  std::vector<std::pair<std::string, MolType>> e = env;
  for (const auto& [n, ty] : e) supply.reserve(n);
  return check(sig, ctx, e, t, supply);
}

Result<MolType> term_type(const Signature& sig, const MetaTerm& t) {
  if (t.is_fvar()) return t.var_type();
  if (t.is_fun()) {
    const FunType* ft = sig.lookup(t.name());
    if (!ft) return Error{"UnboundVariable", "undeclared symbol " + t.name()};
    return ft->result;
  }
  if (t.is_abs() && t.binders().empty()) return term_type(sig, t.body());
  return Error{"TypeMismatch", "no head type for " + t.str()};
}

}  // namespace hort
