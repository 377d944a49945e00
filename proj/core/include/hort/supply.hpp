// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_SUPPLY_HPP
#define HORT_SUPPLY_HPP

#include <algorithm>
#include <map>
#include <string>

namespace hort {

/// Deterministic fresh-name supply, created once per top-level operation.
/// Generated names are hint, hint', hint'', ...; parsed identifiers never
/// contain a prime, and names already free in the operation's inputs must be
/// reserved up front.
class NameSupply {
 public:
  std::string fresh(const std::string& hint) {
    std::string base = strip(hint);
    if (base.empty()) base = "x";
    int n = counts_[base]++;
    std::string name = base;
    for (int i = 0; i < n; ++i) name += '\'';
    return name;
  }

  void reserve(const std::string& name) {
    int primes = 0;
    std::string base = name;
    while (!base.empty() && base.back() == '\'') {
      base.pop_back();
      ++primes;
    }
    int& c = counts_[base];
    c = std::max(c, primes + 1);
  }

 private:
  static std::string strip(const std::string& s) {
    std::string b = s;
    while (!b.empty() && b.back() == '\'') b.pop_back();
    return b;
  }

  std::map<std::string, int> counts_;
};

}  // namespace hort

#endif  // HORT_SUPPLY_HPP
