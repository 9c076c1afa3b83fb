/*
 * Copyright 2026 The alphaperm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace alphaperm {

/// Input violates an operation's precondition (shape, range, membership).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Input parses but has the wrong dimensions for the operation.
class ShapeError : public PreconditionError {
 public:
  explicit ShapeError(const std::string& what) : PreconditionError(what) {}
};

/// Problem size exceeds a configured enumeration bound.
class BoundError : public PreconditionError {
 public:
  explicit BoundError(const std::string& what) : PreconditionError(what) {}
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alphaperm
