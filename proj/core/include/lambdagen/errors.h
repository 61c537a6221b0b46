// Copyright 2026 The lambdagen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAMBDAGEN_ERRORS_H_
#define LAMBDAGEN_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lambdagen {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a mathematical function, or a
// family has no object satisfying the request.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A rank or parameter lies outside its valid interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation was asked to go beyond its configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A bit string is not the encoding of exactly one term.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A rejection loop gave up.
class AttemptsExhaustedError : public Error {
 public:
  explicit AttemptsExhaustedError(std::uint64_t attempts)
      : Error("gave up after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}

  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

}  // namespace lambdagen

#endif  // LAMBDAGEN_ERRORS_H_
