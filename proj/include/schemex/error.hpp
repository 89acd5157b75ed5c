// Copyright 2026 The scheme-explorer Authors
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

namespace schemex {

enum class ErrorCode {
  ZeroPolynomial,
  ConstantPolynomial,
  UnsupportedDomain,
  UnsupportedDegree,
  InfiniteDomain,
  NotInvertible,
  NotHomogeneous,
  NonFieldBase,
  Undecidable,
  UndecidableContext,
  VariableClash,
  NoCanonicalMap,
  NotCatalogued,
  FactorizationUnavailable,
  Unsupported,
  ResidueFieldNotRepresentable,
  IntegralityNotWitnessed,
  UnitIdeal,
  NilpotentCoordinate,
  DenominatorVanishes,
  AllZero,
  InfiniteSpectrum,
  NonInvertibleUnit,
  InvalidMorphism,
  InvalidArgument,
  SyntaxError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the C
/// API and the CLI render the code name verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace schemex
