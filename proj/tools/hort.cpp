// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hort/checker.hpp"
#include "hort/fo_format.hpp"
#include "hort/labelling.hpp"
#include "hort/oracle.hpp"

namespace {

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 3;
}

hort::Result<hort::Manifest> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return hort::Error{"IO", "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return hort::parse_manifest(ss.str());
}

std::string system_name(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

hort::Result<hort::SplitSpec> resolve_split(const hort::Manifest& m) {
  if (m.split_mode == hort::SplitMode::Explicit) return hort::make_split(m.system, m.split_a);
  return hort::split_fo_ho(m.system);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hort: termination checking for second-order computation systems"};
  app.require_subcommand(1);

  // check
  std::string file, strategy = "auto", subterm, clause5, splitSel, format = "human", externalFo;
  int weightsBound = -1, oracleDepth = -1;
  long long oracleWidth = -1;
  auto* check = app.add_subcommand("check", "prove or refute strong normalization");
  check->add_option("file", file)->required();
  check->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "gs", "modular", "oracle", "loop"}));
  check->add_option("--subterm", subterm)->check(CLI::IsMember({"stable", "structural"}));
  check->add_option("--clause5", clause5)->check(CLI::IsMember({"lex", "multiset"}));
  check->add_option("--weights-bound", weightsBound);
  check->add_option("--oracle-depth", oracleDepth);
  check->add_option("--oracle-width", oracleWidth);
  check->add_option("--split", splitSel)->check(CLI::IsMember({"auto", "manifest"}));
  check->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));
  check->add_option("--external-fo", externalFo);

  // normalize
  std::string nfile, ntermText;
  int fuel = 1000;
  auto* normalizeCmd = app.add_subcommand("normalize", "reduce a term to normal form");
  normalizeCmd->add_option("file", nfile)->required();
  normalizeCmd->add_option("--term", ntermText)->required();
  normalizeCmd->add_option("--fuel", fuel);

  // trace
  std::string tfile, ttermText;
  auto* traceCmd = app.add_subcommand("trace", "compute the trace map of a term");
  traceCmd->add_option("file", tfile)->required();
  traceCmd->add_option("--term", ttermText)->required();

  // simulate-labelling
  std::string sfile;
  int seedDepth = 2;
  auto* simCmd = app.add_subcommand("simulate-labelling",
                                    "check the labelled simulation on sampled reductions");
  simCmd->add_option("file", sfile)->required();
  simCmd->add_option("--seed-depth", seedDepth);

  // emit-fo
  std::string efile;
  auto* emitCmd = app.add_subcommand("emit-fo", "print the first-order rules as a TRS document");
  emitCmd->add_option("file", efile)->required();

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    auto m = load(file);
    if (!m) return fail(m.error().str());
    hort::CheckConfig cfg;
    cfg.strategy = strategy == "gs"        ? hort::Strategy::Gs
                   : strategy == "modular" ? hort::Strategy::Modular
                   : strategy == "oracle"  ? hort::Strategy::Oracle
                   : strategy == "loop"    ? hort::Strategy::Loop
                                           : hort::Strategy::Auto;
    if (subterm == "stable") cfg.subterm = hort::SubtermVariant::Stable;
    if (subterm == "structural") cfg.subterm = hort::SubtermVariant::Structural;
    if (clause5 == "lex") cfg.clause5 = hort::Clause5Ext::Lex;
    if (clause5 == "multiset") cfg.clause5 = hort::Clause5Ext::Multiset;
    if (weightsBound >= 0) cfg.weights_bound = weightsBound;
    if (oracleDepth >= 0) cfg.oracle_depth = oracleDepth;
    if (oracleWidth >= 0) cfg.oracle_width = oracleWidth;
    if (splitSel == "auto") cfg.split = hort::SplitSelect::Auto;
    if (splitSel == "manifest") cfg.split = hort::SplitSelect::Manifest;
    cfg.external_fo = externalFo;
    hort::ProofReport rep = hort::run_check(*m, cfg, system_name(file));
    std::cout << hort::emit_report(
        rep, format == "machine" ? hort::ReportFormat::Machine : hort::ReportFormat::Human);
    return rep.exit_code();
  }

  if (*normalizeCmd) {
    auto m = load(nfile);
    if (!m) return fail(m.error().str());
    auto t = hort::parse_term(*m, ntermText);
    if (!t) return fail(t.error().str());
    hort::NormalizeOutcome out = hort::normalize(m->system, *t, fuel);
    if (out.budget_exhausted) {
      std::cout << "budget exhausted after " << out.steps << " steps at: " << out.term.str()
                << "\n";
      return 2;
    }
    std::cout << out.term.str() << "\n";
    return 0;
  }

  if (*traceCmd) {
    auto m = load(tfile);
    if (!m) return fail(m.error().str());
    auto t = hort::parse_term(*m, ttermText);
    if (!t) return fail(t.error().str());
    auto split = resolve_split(*m);
    if (!split.ok()) return fail(split.error().str());
    auto ctx = hort::LabContext::make(m->system, *split);
    if (!ctx.ok()) return fail(ctx.error().str());
    hort::LabResult r = hort::trace(*ctx, *t);
    if (r.status == hort::LabStatus::Undefined) return fail("trace undefined (term is not SN)");
    if (r.status == hort::LabStatus::BudgetExhausted) return fail("trace budget exhausted");
    std::cout << r.term.str() << "\n";
    return 0;
  }

  if (*simCmd) {
    auto m = load(sfile);
    if (!m) return fail(m.error().str());
    auto split = resolve_split(*m);
    if (!split.ok()) return fail(split.error().str());
    auto ctx = hort::LabContext::make(m->system, *split);
    if (!ctx.ok()) return fail(ctx.error().str());
    std::vector<hort::Term> seeds = hort::lhs_ground_instances(m->system, seedDepth, 50);
    int checked = 0, failures = 0;
    for (const auto& s : seeds) {
      for (const auto& step : hort::one_step_reducts(m->system, s)) {
        auto sim = hort::simulation_check(*ctx, s, step.result);
        if (!sim.ok()) continue;  // budget-limited samples are skipped
        ++checked;
        if (!sim->ok) {
          ++failures;
          std::cout << "FAIL " << s.str() << " -> " << step.result.str() << ": " << sim->detail
                    << "\n";
        }
      }
    }
    std::cout << "simulated " << checked << " one-step reductions from " << seeds.size()
              << " seeds, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
  }

  if (*emitCmd) {
    auto m = load(efile);
    if (!m) return fail(m.error().str());
    auto doc = hort::emit_fo_trs(m->system);
    if (!doc.ok()) return fail(doc.error().str());
    std::cout << *doc;
    return 0;
  }

  return 3;
}
