// Copyright 2026 The ringqc Authors.
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

#ifndef RINGQC_ERROR_HPP_
#define RINGQC_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringqc {

// Failure classes. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  kParse = 1,
  kCapExceeded = 2,
  kPrecondition = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::kParse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void throw_precondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}

[[noreturn]] inline void throw_cap(const std::string& what) {
  throw Error(ErrorKind::kCapExceeded, what);
}

// Resource bounds shared by every module. All of them are plain
// configuration; nothing reads the environment.
struct Limits {
  unsigned factor_bound = 128;              // largest n for x^n + 1
  std::uint64_t divisor_cap = 1ull << 16;   // divisors of x^n + 1
  std::uint64_t enum_cap = 1ull << 24;      // codeword-set elements
  std::uint64_t distance_cap = 1ull << 20;  // min-distance work
  std::uint64_t brute_dual_cap = 1ull << 24;  // 8^n for brute-force duals
  std::size_t rank_cap = 96;                // largest Gray length 3n validated
  std::uint64_t triple_cap = 1ull << 20;    // divisor triples per search
};

}  // namespace ringqc

#endif  // RINGQC_ERROR_HPP_
