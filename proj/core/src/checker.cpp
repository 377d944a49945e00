// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/checker.hpp"

#include <chrono>
#include <sstream>

#include "hort/oracle.hpp"

namespace hort {

namespace {

std::string derivation_str(const CCDeriv& d, const std::string& f) {
  std::string head;
  switch (d.clause) {
    case CCDeriv::Clause::MetaAcc: head = "(meta " + d.subject.name() + ")"; break;
    case CCDeriv::Clause::Var: head = "(var)"; break;
    case CCDeriv::Clause::Abs: head = "(abs)"; break;
    case CCDeriv::Clause::FunGt: head = "(fun " + f + " > " + d.g + ")"; break;
    case CCDeriv::Clause::FunEq:
      head = "(fun " + f + " = " + d.g + ")";
      if (d.lex_position >= 0) head += "@" + std::to_string(d.lex_position + 1);
      break;
  }
  std::string kids;
  for (const auto& c : d.children) {
    if (c.clause == CCDeriv::Clause::Var) continue;  // noise
    if (!kids.empty()) kids += ", ";
    kids += derivation_str(c, f);
  }
  return kids.empty() ? head : head + "[" + kids + "]";
}

TypeOrder order_for(const Manifest& m) {
  return m.options.identity_type_order ? identity_type_order() : default_type_order();
}

GsConfig gs_config(const Manifest& m, const CheckConfig& cfg) {
  GsConfig g;
  g.variant = cfg.subterm ? *cfg.subterm : m.options.subterm;
  g.clause5 = cfg.clause5 ? *cfg.clause5 : m.options.clause5;
  return g;
}

Result<SymbolPrecedence> precedence_for(const Manifest& m) {
  if (!m.prec_gt.empty() || !m.prec_eq.empty())
    return SymbolPrecedence::from_facts(m.system, m.prec_gt, m.prec_eq);
  return SymbolPrecedence::synthesize(m.system);
}

void append_gs_obligations(const GsReport& gs, const std::string& prefix,
                           const ComputationSystem& cs, std::vector<Obligation>& out) {
  out.push_back({prefix + "precedence", true, gs.precedence});
  for (const auto& rr : gs.rules) {
    const Rule* r = cs.rule(rr.rule);
    std::string f = r ? r->head() : "?";
    if (rr.cc.ok) {
      out.push_back({prefix + "rule." + rr.rule, true, derivation_str(*rr.cc.derivation, f)});
    } else {
      out.push_back({prefix + "rule." + rr.rule, false,
                     "fails " + rr.cc.failure_clause + ": " + rr.cc.failure_detail});
    }
  }
  for (const auto& c : gs.conflicts) {
    out.push_back({prefix + "precedence-conflict", false,
                   "(" + c.rule_fg + ") needs " + c.f + " > " + c.g + " while (" + c.rule_gf +
                       ") needs " + c.g + " > " + c.f});
  }
}

struct Checker {
  const Manifest& m;
  const CheckConfig& cfg;
  CheckOutcome out;

  int weights_bound() const {
    return cfg.weights_bound ? *cfg.weights_bound : m.options.weights_bound;
  }
  int oracle_depth() const {
    return cfg.oracle_depth ? *cfg.oracle_depth : m.options.oracle_depth;
  }
  long long oracle_width() const {
    return cfg.oracle_width ? *cfg.oracle_width : m.options.oracle_width;
  }

  bool try_gs() {
    Result<SymbolPrecedence> prec = precedence_for(m);
    if (!prec.ok()) {
      out.report.obligations.push_back({"gs.precedence", false, prec.error().str()});
      return false;
    }
    GsReport gs = check_general_schema(m.system, order_for(m), *prec, gs_config(m, cfg));
    append_gs_obligations(gs, "gs.", m.system, out.report.obligations);
    if (gs.verdict == Verdict::Yes) {
      out.report.verdict = Verdict::Yes;
      out.report.method = Method::GS;
      return true;
    }
    return false;
  }

  Result<SplitSpec> resolve_split() {
    SplitSelect sel = cfg.split;
    if (sel == SplitSelect::Default)
      sel = m.split_mode == SplitMode::Explicit ? SplitSelect::Manifest : SplitSelect::Auto;
    if (sel == SplitSelect::Manifest) {
      if (m.split_mode == SplitMode::Explicit) return make_split(m.system, m.split_a);
      if (m.split_mode == SplitMode::AutoFo) return split_fo_ho(m.system);
      return Error{"InvalidSplit", "manifest declares no split"};
    }
    return split_fo_ho(m.system);
  }

  bool try_modular() {
    Result<SplitSpec> split = resolve_split();
    if (!split.ok()) {
      out.report.obligations.push_back({"modular.split", false, split.error().str()});
      return false;
    }
    ModularConfig mc;
    mc.type_order = order_for(m);
    mc.gs = gs_config(m, cfg);
    mc.coeff_bound = weights_bound();
    mc.const_bound = weights_bound();
    mc.external_fo_command = cfg.external_fo;
    Result<ModularReport> rep = check_modular_sn(m.system, *split, mc);
    if (!rep.ok()) {
      out.report.obligations.push_back({"modular", false, rep.error().str()});
      return false;
    }
    for (const auto& o : rep->obligations)
      out.report.obligations.push_back({"modular." + o.name, o.discharged, o.evidence});
    append_gs_obligations(rep->b_gs, "modular.B.",
                          m.system, out.report.obligations);
    out.report.obligations.push_back({"modular.precedence", true, rep->precedence});
    if (rep->verdict == Verdict::Yes) {
      out.report.verdict = Verdict::Yes;
      out.report.method = Method::MODULAR;
      return true;
    }
    return false;
  }

  bool try_loop() {
    LoopSearchResult ls = find_loop(m.system, 3, std::max(oracle_depth(), 8), 200);
    if (!ls.found) {
      out.report.obligations.push_back(
          {"loop.search", true, "no loop found (image depth 3, bounded exploration)"});
      return false;
    }
    out.report.verdict = Verdict::No;
    out.report.method = Method::LOOP;
    out.witness_terms = ls.witness.witness;
    out.report.witness_loop_start = ls.witness.loop_start;
    for (const auto& t : ls.witness.witness) out.report.witness.push_back(t.str());
    out.report.obligations.push_back(
        {"loop.witness", true,
         "term at step " + std::to_string(ls.witness.loop_start) + " recurs embedded after " +
             std::to_string(ls.witness.witness.size() - 1) + " steps"});
    return true;
  }

  void run_oracle() {
    std::vector<Term> seeds = lhs_ground_instances(m.system, 3, 200);
    OracleResult oc = sn_oracle(m.system, seeds, oracle_depth(), oracle_width());
    if (oc.status == OracleResult::Status::NonSN) {
      out.report.verdict = Verdict::No;
      out.report.method = Method::ORACLE;
      out.witness_terms = oc.witness;
      out.report.witness_loop_start = oc.loop_start;
      for (const auto& t : oc.witness) out.report.witness.push_back(t.str());
      out.report.obligations.push_back({"oracle.nonsn", true, "loop witness found"});
      return;
    }
    out.report.verdict = Verdict::Maybe;
    out.report.method = Method::ORACLE;
    out.report.obligations.push_back(
        {"oracle.exploration", oc.status == OracleResult::Status::SN,
         oc.status == OracleResult::Status::SN
             ? "all " + std::to_string(seeds.size()) +
                   " seed instances normalize within the budget (not a proof)"
             : "budget exhausted before the space was covered"});
  }
};

}  // namespace

CheckOutcome run_check_full(const Manifest& m, const CheckConfig& cfg,
                            const std::string& systemName) {
  auto t0 = std::chrono::steady_clock::now();
  Checker ck{m, cfg, {}};
  ck.out.report.system = systemName;
  switch (cfg.strategy) {
    case Strategy::Gs:
      ck.try_gs();
      break;
    case Strategy::Modular:
      ck.try_modular();
      break;
    case Strategy::Loop:
      if (!ck.try_loop()) ck.out.report.verdict = Verdict::Maybe;
      ck.out.report.method = Method::LOOP;
      break;
    case Strategy::Oracle:
      ck.run_oracle();
      break;
    case Strategy::Auto:
      if (!ck.try_gs() && !ck.try_modular() && !ck.try_loop())
        ck.out.report.verdict = Verdict::Maybe;
      break;
  }
  auto t1 = std::chrono::steady_clock::now();
  ck.out.report.seconds = std::chrono::duration<double>(t1 - t0).count();
  return ck.out;
}

ProofReport run_check(const Manifest& m, const CheckConfig& cfg, const std::string& systemName) {
  return run_check_full(m, cfg, systemName).report;
}

bool replay_witness(const ComputationSystem& cs, const std::vector<Term>& witness) {
  for (size_t i = 0; i + 1 < witness.size(); ++i) {
    bool found = false;
    for (const auto& step : one_step_reducts(cs, witness[i]))
      if (step.result == witness[i + 1]) found = true;
    if (!found) return false;
  }
  return !witness.empty();
}

}  // namespace hort
