// Copyright 2026 The qlsi Authors
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
#include <string_view>

namespace qlsi {

enum class ErrorKind {
  Parameter,      // argument outside the documented range
  Domain,         // matrix function evaluated outside its domain
  Dimension,      // shape mismatch
  Decomposition,  // eigen/singular value solver failure
  Contract,       // a structural precondition (reversibility, primitivity, ...) does not hold
  Resource,       // dimension cap exceeded
  Parse,          // malformed document
  Estimation,     // optimizer could not produce any admissible candidate
};

std::string_view to_string(ErrorKind kind);

/// Base error for the library. The kind lets callers map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define QLSI_DEFINE_ERROR(Name, Kind)                                        \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

QLSI_DEFINE_ERROR(ParameterError, Parameter)
QLSI_DEFINE_ERROR(DomainError, Domain)
QLSI_DEFINE_ERROR(DimensionError, Dimension)
QLSI_DEFINE_ERROR(DecompositionError, Decomposition)
QLSI_DEFINE_ERROR(ContractError, Contract)
QLSI_DEFINE_ERROR(ResourceError, Resource)
QLSI_DEFINE_ERROR(ParseError, Parse)
QLSI_DEFINE_ERROR(EstimationError, Estimation)

#undef QLSI_DEFINE_ERROR

}  // namespace qlsi
