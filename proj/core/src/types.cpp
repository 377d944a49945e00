// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "hort/types.hpp"

#include <sstream>

namespace hort {

int MolType::size() const {
  int n = 1;
  for (const auto& a : args_) n += a.size();
  return n;
}

bool MolType::properly_contains(const MolType& sub) const {
  for (const auto& a : args_) {
    if (a == sub || a.properly_contains(sub)) return true;
  }
  return false;
}

void MolType::collect(std::set<MolType>& out) const {
  out.insert(*this);
  for (const auto& a : args_) a.collect(out);
}

std::string MolType::str() const {
  if (atomic()) return head_;
  std::ostringstream os;
  os << head_ << '(';
  for (size_t i = 0; i < args_.size(); ++i) {
    if (i) os << ',';
    os << args_[i].str();
  }
  os << ')';
  return os.str();
}

std::string ArgType::str() const {
  if (binders.empty()) return body.str();
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < binders.size(); ++i) {
    if (i) os << ',';
    os << binders[i].str();
  }
  os << " -> " << body.str() << ')';
  return os.str();
}

std::string FunType::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ", ";
    os << args[i].str();
  }
  if (!args.empty()) os << ' ';
  os << "-> " << result.str();
  return os.str();
}

std::set<MolType> Signature::mentioned_types() const {
  std::set<MolType> out;
  for (const auto& s : order_) {
    const FunType& t = types_.at(s);
    t.result.collect(out);
    for (const auto& a : t.args) {
      a.body.collect(out);
      for (const auto& b : a.binders) b.collect(out);
    }
  }
  return out;
}

}  // namespace hort
