// Copyright 2026 The cglmp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cglmp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dimension below the minimum an operation accepts (usually d < 2).
class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Argument outside the operation's domain: mismatched sizes, bad setting
/// index, unnormalized state, non-finite input.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Problem size beyond what a dense/oracle routine is allowed to allocate.
class SizeError : public Error {
  public:
    using Error::Error;
};

/// A computed object violated a structural invariant it must satisfy
/// (block sparsity, Toeplitz symmetry, probability normalization).
class StructureError : public Error {
  public:
    using Error::Error;
};

/// Least-squares fit could not be performed on the given data.
class FitError : public Error {
  public:
    using Error::Error;
};

} // namespace cglmp
