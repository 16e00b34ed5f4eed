// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RMOP_COMMON_HPP_
#define RMOP_COMMON_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmop {

using VertexId = std::size_t;
using RobotId = std::size_t;

// Absolute tolerance used for every budget, metric and reward comparison.
inline constexpr double kTolerance = 1e-9;

enum class ErrorKind {
  kParse,
  kInvalidArgument,
  kInvariant,
  kGuard,
  kIo,
  kDigestMismatch,
  kLoopCap,
};

inline const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kInvariant: return "invariant";
    case ErrorKind::kGuard: return "guard";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kDigestMismatch: return "digest_mismatch";
    case ErrorKind::kLoopCap: return "loop_cap";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

template <typename... Args>
std::string Concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace detail

template <typename... Args>
[[noreturn]] void Fail(ErrorKind kind, const Args&... args) {
  throw Error(kind, detail::Concat(args...));
}

// One entry of a validation report. Violations are data, not errors.
struct Issue {
  std::string kind;
  std::vector<std::size_t> indices;
  double magnitude = 0.0;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool clean() const { return issues.empty(); }
  void Add(std::string kind, std::vector<std::size_t> indices,
           double magnitude, std::string message) {
    issues.push_back(Issue{std::move(kind), std::move(indices), magnitude,
                           std::move(message)});
  }
};

// splitmix64; used to derive independent sub-seeds from a master seed.
inline std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Portable seeded generator. The standard distributions are
// implementation-defined, so the conversions are done by hand to keep
// generated artifacts identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(MixSeed(seed)) {}

  std::uint64_t Next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n). Rejection sampling, n > 0.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
      r = Next();
    } while (r >= limit);
    return r % n;
  }

  // k distinct values from [0, n), sorted ascending. Requires k <= n.
  std::vector<std::size_t> Sample(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(Below(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::uint64_t state_;
};

}  // namespace rmop

#endif  // RMOP_COMMON_HPP_
