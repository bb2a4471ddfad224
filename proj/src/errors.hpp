/*
 * Copyright 2026 The ptgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PTGAMES_ERRORS_HPP
#define PTGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptg {

// Each validation failure carries a machine-checkable kind so callers
// (and the C API) can distinguish diagnostics without parsing messages.
enum class ErrorKind {
    InvalidArgument,
    Parse,
    Dimension,
    Arity,
    Orthogonality,
    DuplicateVector,
    DuplicateMember,
    DanglingIndex,
    NotSatisfied,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace ptg

#endif
