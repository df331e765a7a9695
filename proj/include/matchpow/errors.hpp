// Copyright 2026 The matchpow Authors.
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

#ifndef MATCHPOW_ERRORS_HPP
#define MATCHPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchpow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values live in polynomial rings with different variable counts.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded; the message says which and how to raise it.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal guarantee failed to hold (a proven postcondition, or a
/// malformed certificate).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace matchpow

#endif  // MATCHPOW_ERRORS_HPP
