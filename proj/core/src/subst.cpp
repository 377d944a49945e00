// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/subst.hpp"

#include <algorithm>

#include "hort/typecheck.hpp"

namespace hort {

MetaTerm substitute_vars(const MetaTerm& t, const std::map<std::string, MetaTerm>& sub) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
      return t;
    case MetaTerm::Kind::FVar: {
      auto it = sub.find(t.name());
      return it == sub.end() ? t : MetaTerm::unwrap(it->second);
    }
    case MetaTerm::Kind::Abs:
      return MetaTerm::abs(t.binders(), t.hints(), substitute_vars(t.body(), sub));
    case MetaTerm::Kind::Fun: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(substitute_vars(a, sub));
      if (t.label())
        return MetaTerm::fun_labelled(t.name(), std::move(as),
                                      substitute_vars(*t.label(), sub));
      return MetaTerm::fun(t.name(), std::move(as));
    }
    case MetaTerm::Kind::MetaApp: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) as.push_back(substitute_vars(a, sub));
      return MetaTerm::meta(t.name(), std::move(as));
    }
  }
  return t;
}

namespace {

Result<MetaTerm> subst_meta(const Assignment& theta, const MetaTerm& t, NameSupply& supply) {
  switch (t.kind()) {
    case MetaTerm::Kind::BVar:
    case MetaTerm::Kind::FVar:
      return t;
    case MetaTerm::Kind::Abs: {
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(t, supply, names);
      Result<MetaTerm> r = subst_meta(theta, body, supply);
      if (!r) return r;
      return close_over(*r, names, t.binders(), t.hints());
    }
    case MetaTerm::Kind::Fun: {
      std::vector<MetaTerm> as;
      for (const auto& a : t.args()) {
        Result<MetaTerm> r = subst_meta(theta, a, supply);
        if (!r) return r;
        as.push_back(*r);
      }
      if (t.label()) {
        Result<MetaTerm> l = subst_meta(theta, *t.label(), supply);
        if (!l) return l;
        return MetaTerm::fun_labelled(t.name(), std::move(as), *l);
      }
      return MetaTerm::fun(t.name(), std::move(as));
    }
    case MetaTerm::Kind::MetaApp: {
      auto it = theta.find(t.name());
      if (it == theta.end()) return Error{"MissingBinding", "no image for metavariable " + t.name()};
      const MetaTerm& image = it->second;
      if (!image.is_abs() || image.binders().size() != t.args().size())
        return Error{"ArityMismatch",
                     "image of " + t.name() + " has arity " +
                         std::to_string(image.is_abs() ? image.binders().size() : 0) +
                         ", applied to " + std::to_string(t.args().size()) + " arguments"};
      std::map<std::string, MetaTerm> sub;
      std::vector<std::string> names;
      MetaTerm body = open_abs_fresh(image, supply, names);
      for (size_t i = 0; i < t.args().size(); ++i) {
        Result<MetaTerm> r = subst_meta(theta, t.args()[i], supply);
        if (!r) return r;
        sub.emplace(names[i], *r);
      }
      return substitute_vars(body, sub);
    }
  }
  return t;
}

}  // namespace

Result<MetaTerm> substitute_metavars(const Assignment& theta, const MetaTerm& t) {
  NameSupply supply;
  reserve_free_vars(t, supply);
  for (const auto& [m, img] : theta) reserve_free_vars(img, supply);
  return subst_meta(theta, t, supply);
}

std::optional<Error> check_assignment(const Signature& sig, const MetaContext& ctx,
                                      const Assignment& theta) {
  for (const auto& d : ctx.decls()) {
    auto it = theta.find(d.name);
    if (it == theta.end()) return Error{"MissingBinding", "no image for metavariable " + d.name};
    const MetaTerm& image = it->second;
    if (!image.is_abs() || image.binders() != d.arg_types)
      return Error{"ArityMismatch", "image of " + d.name + " does not match its declaration"};
    NameSupply supply;
    reserve_free_vars(image, supply);
    std::vector<std::string> names;
    MetaTerm body = open_abs_fresh(image, supply, names);
    VarEnv env;
    for (size_t i = 0; i < names.size(); ++i) env.emplace_back(names[i], d.arg_types[i]);
    for (const auto& [n, ty] : free_vars(body))
      if (std::find_if(env.begin(), env.end(), [&](auto& p) { return p.first == n; }) == env.end())
        env.emplace_back(n, ty);
    Result<MolType> bt = typecheck(sig, MetaContext{}, env, body);
    if (!bt) return bt.error();
    if (*bt != d.result)
      return Error{"TypeMismatch", "image of " + d.name + " has type " + bt->str() +
                                       ", declared " + d.result.str()};
  }
  return std::nullopt;
}

}  // namespace hort
