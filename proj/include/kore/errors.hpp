// Copyright 2026 The kore Authors
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

#ifndef KORE_ERRORS_HPP
#define KORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kore {

/// Two coalitions (or a coalition and a container) live over different
/// player universes.
class UniverseMismatchError : public std::invalid_argument {
 public:
  explicit UniverseMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A set was used where membership in a specific field of sets is required
/// (evaluation of a charge, canonicalization against a field, ...).
class FieldMembershipError : public std::invalid_argument {
 public:
  explicit FieldMembershipError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// The operation is meaningful but not computable in this representation
/// (e.g. a field hull over a countable universe).
class UnsupportedOperationError : public std::runtime_error {
 public:
  explicit UnsupportedOperationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A generator handed to a continuity probe violated its declared
/// monotonicity or limit.
class InvalidSequenceError : public std::invalid_argument {
 public:
  explicit InvalidSequenceError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace kore

#endif  // KORE_ERRORS_HPP
