// Copyright 2026 The jumbletext Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, out-of-contract arguments, schema violations.
/// The CLI maps these to exit status 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two token streams that should be aligned word-by-word are not.
class AlignmentError : public ValidationError {
 public:
  AlignmentError(std::size_t index, const std::string& what)
      : ValidationError(what), index_(index) {}

  /// First word index without a counterpart in the other stream.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace jumble
