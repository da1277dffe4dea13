/* Copyright 2026 The canonparse Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CANONPARSE_ERROR_HPP_
#define CANONPARSE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace canonparse {

enum class ErrorKind {
  kInvalidTemplate,
  kEmptySystem,
  kUnknownSystem,
  kInvalidDepth,
  kSyntax,
  kInvalidLength,
  kInvalidTree,
  kNotApplicable,
  kReplayFailure,
  kNotComplete,
  kNotMonotonic,
  kPriorityTie,
  kIndexOutOfRange,
  kInvolvesNode,
  kNotCanonical,
  kInvalidInput,
  kBudgetExceeded,
  kIo,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type; the kind
// identifies which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace canonparse

#endif  // CANONPARSE_ERROR_HPP_
