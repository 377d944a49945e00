// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/report.hpp"

#include <sstream>

namespace hort {

std::string method_str(Method m) {
  switch (m) {
    case Method::GS: return "GS";
    case Method::MODULAR: return "MODULAR";
    case Method::LOOP: return "LOOP";
    case Method::ORACLE: return "ORACLE";
    case Method::NONE: return "NONE";
  }
  return "NONE";
}

namespace {

std::string one_line(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (c == '\n' || c == '\t') ? ' ' : c;
  return out;
}

}  // namespace

std::string emit_report(const ProofReport& r, ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::Machine) {
    os << "hort-report\t1\n";
    os << "system\t" << r.system << "\n";
    os << "verdict\t" << verdict_str(r.verdict) << "\n";
    os << "method\t" << method_str(r.method) << "\n";
    for (size_t i = 0; i < r.obligations.size(); ++i) {
      const Obligation& o = r.obligations[i];
      os << "obligation." << i << ".name\t" << one_line(o.name) << "\n";
      os << "obligation." << i << ".status\t" << (o.discharged ? "discharged" : "failed")
         << "\n";
      os << "obligation." << i << ".evidence\t" << one_line(o.evidence) << "\n";
    }
    for (size_t i = 0; i < r.witness.size(); ++i)
      os << "witness." << i << "\t" << one_line(r.witness[i]) << "\n";
    if (r.witness_loop_start >= 0)
      os << "witness.loop-start\t" << r.witness_loop_start << "\n";
    os << "end\t.\n";
    return os.str();
  }
  os << r.system << ": " << verdict_str(r.verdict) << " (" << method_str(r.method) << ", "
     << r.seconds << "s)\n";
  for (const auto& o : r.obligations) {
    os << "  " << (o.discharged ? "[ok]  " : "[FAIL]") << ' ' << o.name << "\n";
    if (!o.evidence.empty()) os << "         " << o.evidence << "\n";
  }
  if (!r.witness.empty()) {
    os << "  loop witness (step " << r.witness_loop_start << " recurs):\n";
    for (size_t i = 0; i < r.witness.size(); ++i)
      os << "    " << i << ": " << r.witness[i] << "\n";
  }
  return os.str();
}

Result<ProofReport> parse_report(const std::string& text) {
  ProofReport r;
  std::istringstream is(text);
  std::string line;
  bool header = false, ended = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) return Error{"ParseError", "report line without a tab: " + line};
    std::string key = line.substr(0, tab);
    std::string val = line.substr(tab + 1);
    if (key == "hort-report") {
      header = true;
    } else if (key == "system") {
      r.system = val;
    } else if (key == "verdict") {
      r.verdict = val == "YES" ? Verdict::Yes : val == "NO" ? Verdict::No : Verdict::Maybe;
    } else if (key == "method") {
      r.method = val == "GS"        ? Method::GS
                 : val == "MODULAR" ? Method::MODULAR
                 : val == "LOOP"    ? Method::LOOP
                 : val == "ORACLE"  ? Method::ORACLE
                                    : Method::NONE;
    } else if (key.rfind("obligation.", 0) == 0) {
      size_t dot = key.find('.', 11);
      if (dot == std::string::npos) return Error{"ParseError", "bad obligation key " + key};
      size_t idx = std::stoul(key.substr(11, dot - 11));
      std::string field = key.substr(dot + 1);
      if (r.obligations.size() <= idx) r.obligations.resize(idx + 1);
      if (field == "name") r.obligations[idx].name = val;
      else if (field == "status") r.obligations[idx].discharged = (val == "discharged");
      else if (field == "evidence") r.obligations[idx].evidence = val;
      else return Error{"ParseError", "bad obligation field " + field};
    } else if (key == "witness.loop-start") {
      r.witness_loop_start = std::stoi(val);
    } else if (key.rfind("witness.", 0) == 0) {
      size_t idx = std::stoul(key.substr(8));
      if (r.witness.size() <= idx) r.witness.resize(idx + 1);
      r.witness[idx] = val;
    } else if (key == "end") {
      ended = true;
    } else {
      return Error{"ParseError", "unknown report key " + key};
    }
  }
  if (!header || !ended) return Error{"ParseError", "missing report delimiters"};
  return r;
}

}  // namespace hort
