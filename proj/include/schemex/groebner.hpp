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

// Buchberger's algorithm over a coefficient field.

#pragma once

#include <optional>
#include <vector>

#include "schemex/multipoly.hpp"

namespace schemex {

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading
/// monomial.  The unit ideal has basis {1}; the zero ideal has an empty basis.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, std::vector<Poly> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const PolyRing& ring() const { return ring_; }
  const std::vector<Poly>& basis() const { return basis_; }
  bool is_unit() const;
  bool is_zero_ideal() const { return basis_.empty(); }
  /// Fully reduced normal form.
  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  /// Standard monomials when the quotient has finite dimension.
  std::optional<std::vector<Monomial>> standard_monomials() const;

 private:
  PolyRing ring_;
  std::vector<Poly> basis_;
};

/// Reduced basis of the ideal generated by `gens` (all in `ring`).  Throws
/// NonFieldBase when the coefficient domain is not a field.
GroebnerBasis groebner(const PolyRing& ring, const std::vector<Poly>& gens);

/// Cofactors c with f = sum c_i * gens_i, or nullopt when f is not in the
/// ideal.
std::optional<std::vector<Poly>> lift(const PolyRing& ring, const std::vector<Poly>& gens, const Poly& f);

/// Generators of (gens) intersected with base[keep], returned in `sub` (whose
/// variables are the kept ones, in any order).
std::vector<Poly> eliminate(const PolyRing& ring, const std::vector<Poly>& gens, const PolyRing& sub);

bool monomial_divides(const Monomial& a, const Monomial& b);

}  // namespace schemex
