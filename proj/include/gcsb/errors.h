// Copyright 2026 The GCSB Authors
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

#ifndef GCSB_ERRORS_H_
#define GCSB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gcsb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of an operation (empty index set,
// level out of range, r' >= J, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two values built over different ground sets were combined.
class GroundMismatchError : public Error {
 public:
  using Error::Error;
};

// A structural precondition (set containment, cut property) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// No finite cut / no feasible point exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A region or LP is unbounded.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

// Malformed external document (network JSON, golden file, cut file).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace gcsb

#endif  // GCSB_ERRORS_H_
