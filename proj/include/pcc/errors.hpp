// Copyright 2026 The pcc Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace pcc {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex count is odd where an even count is required.
class OddN : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter fell outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Degenerate model: cross-cluster probability is not below the
/// within-cluster probability.
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A labeling entry is not +1 or -1.
class NonBinary : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a hard guard (dense assembly, brute force, ...).
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// The certificate diagonal was not built from the candidate it is checked
/// against: (D - B)x != 0. Signals API misuse, not a certification failure.
class KernelMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix expected to be positive semidefinite has a negative pivot or
/// eigenvalue beyond tolerance.
class NotPsd : public Error {
 public:
  using Error::Error;
};

/// Labeling expected to be balanced has a nonzero entry sum.
class Unbalanced : public Error {
 public:
  using Error::Error;
};

/// An edge endpoint is out of range, a self-loop, or a duplicate.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcc
