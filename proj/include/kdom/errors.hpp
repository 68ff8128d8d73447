// Copyright 2026 The kdom Authors
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

#ifndef KDOM_ERRORS_HPP
#define KDOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdom {

// Base class for every error raised on bad data or bad environment. Misuse of
// a stateful API (adding a vertex twice, ...) throws std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or malformed instance data.
class InputError : public Error {
 public:
  using Error::Error;
};

// A text file could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A produced solution failed its independent check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdom

#endif  // KDOM_ERRORS_HPP
