// Copyright 2026 The entpoly Authors
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

#ifndef ENTPOLY_ERROR_HPP
#define ENTPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entpoly {

/// Precondition or domain violation in caller-supplied data.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string &what) : std::invalid_argument(what) {}
};

/// Numerical failure: eigensolver non-convergence, states that fail validation
/// after a computation, unexpected non-finite values.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace entpoly

#endif  // ENTPOLY_ERROR_HPP
