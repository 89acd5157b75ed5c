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

// Ring morphisms and the maps they induce on spectra.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemex/spectrum.hpp"

namespace schemex {

class RingMorphism {
 public:
  /// Throws InvalidMorphism unless every source relation maps to zero.
  RingMorphism(PresentedAlgebra source, PresentedAlgebra target, std::vector<Poly> images);
  /// Each source variable goes to the target variable of the same name.
  static RingMorphism structure_map(const PresentedAlgebra& source, const PresentedAlgebra& target);
  static RingMorphism identity(const PresentedAlgebra& a) { return structure_map(a, a); }

  const PresentedAlgebra& source() const { return map_.source(); }
  const PresentedAlgebra& target() const { return map_.target(); }
  const std::vector<Poly>& images() const { return map_.images(); }
  const AlgebraMorphism& algebra_map() const { return map_; }
  Poly apply(const Poly& f) const { return map_.apply(f); }
  std::string to_string() const;

 private:
  AlgebraMorphism map_;
};

/// "ZZ -> ZZ[T]" (structure map) or "QQ[X] -> QQ[T]; T^2" (images listed in
/// the order of the source variables).
RingMorphism parse_morphism(std::string_view text);

struct Preimage {
  SpecPoint point;
  /// Image in kappa(q) of the generator of kappa(x), when kappa(x) has one.
  std::optional<Scalar> generator_image;

  /// The residue embedding kappa(x) -> kappa(q) applied to c.
  Scalar transport(const Scalar& c, const Domain& kappa_q) const;
};

/// The point phi^{-1}(q) of the source.  q must carry a residue field.
/// Throws NotCatalogued for sources outside the catalogue (localizations and
/// products included) and ResidueFieldNotRepresentable when kappa(q) is not.
Preimage preimage_point(const RingMorphism& phi, const SpecPoint& q);

struct FiberDescription {
  SpecPoint base_point;
  PresentedAlgebra ring;  // B (x)_A kappa(x)
  std::string method;     // "residue field" or "closed point"
  std::optional<std::vector<SpecPoint>> points;
  bool complete = false;  // the point list is all of the fiber
};

/// The fiber over x.  Over kappa(x) when B's coefficients map there, and as
/// B/pB over B's base when x is closed; ResidueFieldNotRepresentable
/// otherwise.
FiberDescription fiber(const RingMorphism& phi, const SpecPoint& x, const SpecBound& bound = {});

/// y^d + c_{d-1} y^{d-1} + ... + c_0 = 0 for the target variable y, with
/// c_k given in the source ring.
struct IntegralEquation {
  std::size_t target_var;
  std::vector<Poly> lower_coeffs;  // c_0 .. c_{d-1}
};

struct GoingUpRow {
  std::string source_label;
  std::optional<std::string> above;  // one fiber point, when there is one
  std::size_t fiber_points = 0;
};

struct GoingUpReport {
  std::vector<GoingUpRow> rows;
  bool surjective_on_sample = true;
  std::string to_string() const;
};

/// Verifies the integral equations by normal form, then exhibits a point
/// over every enumerated source prime with residue characteristic at most
/// `prime_bound`.  Throws IntegralityNotWitnessed.
GoingUpReport going_up_check(const RingMorphism& phi, const std::vector<IntegralEquation>& equations, long prime_bound);

}  // namespace schemex
