// Copyright 2026 The poni Authors
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

#include <stdexcept>
#include <string>

namespace poni {

/// Operands live in different ambient spaces (or have otherwise incompatible shapes).
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A subspace argument that was required to be contained in another is not.
struct ContainmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The inputs of a coset-remainder computation do not satisfy its promise.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated or otherwise malformed serialized data.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A protocol peer sent a message that is out of order or malformed.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A classical backend refused an operation (wrong key, corrupt ciphertext).
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace poni
