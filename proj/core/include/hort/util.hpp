// Part of the hort project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef HORT_UTIL_HPP
#define HORT_UTIL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hort {

/// Error with a machine-checkable code and a human message.
struct Error {
  std::string code;     // e.g. "TypeMismatch", "UnboundVariable"
  std::string message;  // names the offending subterm where applicable

  std::string str() const { return code + ": " + message; }
};

/// Minimal expected-like result carrier.
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}
  Result(Error err) : error_(std::move(err)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const { return *value_; }
  T& operator*() { return *value_; }
  const T* operator->() const { return &*value_; }

  const Error& error() const { return *error_; }

 private:
  std::optional<T> value_;
  std::optional<Error> error_;
};

template <typename It, typename F>
std::string join_map(It begin, It end, const std::string& sep, F f) {
  std::ostringstream os;
  bool first = true;
  for (It it = begin; it != end; ++it) {
    if (!first) os << sep;
    first = false;
    os << f(*it);
  }
  return os.str();
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  return join_map(xs.begin(), xs.end(), sep, [](const std::string& s) { return s; });
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace hort

#endif  // HORT_UTIL_HPP
