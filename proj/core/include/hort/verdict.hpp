// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_VERDICT_HPP
#define HORT_VERDICT_HPP

#include <string>

namespace hort {

enum class Verdict { Yes, No, Maybe };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Maybe: return "MAYBE";
  }
  return "MAYBE";
}

}  // namespace hort

#endif  // HORT_VERDICT_HPP
