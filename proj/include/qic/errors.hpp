// Copyright 2026 The QIC Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index or size argument lies outside its valid range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// The request is valid but exceeds a configured memory guard.
class ResourceGuardError : public BoundsError {
 public:
  using BoundsError::BoundsError;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ZeroDimensionError : public Error {
 public:
  using Error::Error;
};

class EmptySelectionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `token()` is the 1-based position of the
/// offending token, or 0 when the error is not tied to a token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t token = 0)
      : Error(token == 0 ? what : what + " (token " + std::to_string(token) + ")"),
        token_(token) {}

  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

}  // namespace qic
