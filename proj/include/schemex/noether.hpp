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

// Noether normalization and the decision procedures built on the
// Nullstellensatz.  Field bases only.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemex/presented.hpp"

namespace schemex {

/// One round of the recursion, in the ring k[X1, Z2..Zm] of that round.
struct NormalizationStep {
  std::vector<std::string> vars;  // X1, X2, ..., Xm of this round
  Poly chosen;                    // P, in k[X1..Xm]
  unsigned prime;                 // p (escalated when the exponents collide)
  std::vector<Integer> exponents; // r_2 .. r_m, r_i = p^(i-1)
  std::vector<std::string> new_vars;  // Z2 .. Zm
  Poly equation;   // monic in X1 with coefficients in k[Z2..Zm], in k[X1, Z2..Zm]
  unsigned degree; // N, the X1-degree of the equation
  Scalar unit;     // equation = unit * P(X1, Z2 - X1^r2, ...)

  /// Exact check: substitution gives unit * P, the result is monic of degree
  /// N in X1, and N is attained by exactly one monomial of P.
  bool verify() const;
  std::string to_string() const;
};

struct NormalizationResult {
  PolyRing ring;                 // k[X1..Xn] of the input
  std::vector<Poly> y;           // d algebraically independent elements
  std::vector<NormalizationStep> trace;

  std::size_t d() const { return y.size(); }
  bool verify() const;
};

/// Throws UnitIdeal when 1 is in I and NonFieldBase for non-field bases.
NormalizationResult noether_normalize(const PolyRing& ring, const std::vector<Poly>& ideal);

enum class MaximalityReason { Field, UnitIdeal, InfiniteDimension, ZeroDivisor };

struct MaximalityCertificate {
  bool maximal = false;
  MaximalityReason reason;
  long dimension = 0;                          // dim_k A/I when finite
  std::optional<std::string> free_variable;    // a variable with unbounded powers
  std::optional<Poly> element;                 // primitive element, or the element split by its minimal polynomial
  std::optional<UniPoly> minimal_polynomial;
  std::optional<std::pair<Poly, Poly>> zero_divisors;  // a * b = 0, both nonzero

  std::string to_string() const;
};

/// I maximal in k[X1..Xn] (I given with the relations of `ideal.ambient`).
/// Throws Undecidable when no primitive element is found among the tried
/// linear combinations and the quotient is too large to enumerate.
MaximalityCertificate is_maximal(const Ideal& ideal);

struct NullstellensatzVerdict {
  bool common_zero;
  std::optional<std::vector<Poly>> certificate;  // sum Q_i P_i = 1 when there is none
};

NullstellensatzVerdict has_common_zero(const PolyRing& ring, const std::vector<Poly>& ps);

}  // namespace schemex
