// Copyright 2026 The gammaq Authors.
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

#ifndef GAMMAQ_ERRORS_HPP
#define GAMMAQ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammaq {

// Raised when an argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration would exceed its candidate budget.  Carries the
// number of candidates processed before stopping.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t processed)
      : std::runtime_error(what), processed_(processed) {}
  std::uint64_t processed() const { return processed_; }

 private:
  std::uint64_t processed_;
};

// Raised when two independent computations that must agree do not.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw PreconditionError(what);
}

// Candidate-count ceiling shared by all enumerations.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = 100'000'000ULL) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw ResourceError("candidate budget of " + std::to_string(limit_) + " exceeded",
                          used_ - n);
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace gammaq

#endif  // GAMMAQ_ERRORS_HPP
