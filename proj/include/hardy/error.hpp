// Copyright 2026 The Hardy Bases Authors
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

#ifndef HARDY_ERROR_HPP_
#define HARDY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hardy {

/// Root of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (non-unitary matrix, unnormalized state, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Control and target of a controlled gate coincide.
class IndexClash : public Error {
 public:
  using Error::Error;
};

class BadWeights : public Error {
 public:
  using Error::Error;
};

class EmptyKeep : public Error {
 public:
  using Error::Error;
};

/// Conditioning event has probability zero. Callers in `reality` read this as
/// "fact not established".
class ZeroConditioning : public Error {
 public:
  using Error::Error;
};

/// Some (q1,q2) input pair has zero probability.
class MissingSupport : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy

#endif  // HARDY_ERROR_HPP_
