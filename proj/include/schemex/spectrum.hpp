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

// Prime spectra of the rings with a known classification of their primes.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schemex/presented.hpp"

namespace schemex {

enum class SpecFamily {
  Field,         // k
  Integers,      // ZZ
  IntegersMod,   // ZZ/n
  FieldLine,     // k[T]
  IntegersLine,  // ZZ[T]
  FieldPlane,    // k[S,T]
  Quotient,      // one of the above modulo an ideal
  Localization,  // a catalogued ring with one element inverted
  Product,       // finite product of catalogued rings
};

std::string_view family_name(SpecFamily f);

/// A prime ideal described by a normal form, never by its elements.
struct SpecPoint {
  std::string label;         // "eta", "x_7", "y_{7,T + 4}", ...
  std::vector<Poly> ideal;   // generators, in the catalogue ring
  std::optional<Domain> residue;
  std::string residue_name;  // kappa(x), also when not representable
  std::vector<Scalar> images;  // catalogue variables in kappa(x)
  bool closed = false;

  bool operator==(const SpecPoint& o) const { return label == o.label; }
};

/// Limits for enumerating infinite spectra.
struct SpecBound {
  long primes = 10;    // residue characteristics up to this bound
  unsigned degree = 1; // closed points of degree at most this over the prime field
  long height = 2;     // coefficient size of horizontal or characteristic-0 points
};

class SpecCatalogue {
 public:
  /// Recognizes k, ZZ, ZZ/n, k[T], ZZ[T], k[S,T] and their quotients.
  /// Throws NotCatalogued otherwise.
  static SpecCatalogue recognize(const PresentedAlgebra& a);
  static SpecCatalogue localization(const SpecCatalogue& parent, const Poly& f);
  static SpecCatalogue product(const std::vector<SpecCatalogue>& parts);

  SpecFamily family() const { return family_; }
  /// Family of the underlying polynomial ring (differs for quotients).
  SpecFamily base_family() const;
  const PresentedAlgebra& ring() const { return ring_; }
  bool finite_spectrum() const;

  /// Points whose invariants fall under the bound, generic points included.
  /// For finite spectra the bound is ignored and the list is complete.
  std::vector<SpecPoint> points(const SpecBound& bound = {}) const;

  /// f(x) in kappa(x).  Throws ResidueFieldNotRepresentable.
  Scalar evaluate(const Poly& f, const SpecPoint& x) const;
  /// f in the prime of x.
  bool vanishes(const Poly& f, const SpecPoint& x) const;

  /// Point with the given label, searched under the bound.
  std::optional<SpecPoint> find(const std::string& label, const SpecBound& bound = {}) const;
  /// The point of the prime generated by `ideal`, when it is catalogued.
  std::optional<SpecPoint> point_of_ideal(const std::vector<Poly>& ideal) const;

  const std::vector<SpecCatalogue>& parts() const { return parts_; }
  const SpecCatalogue& parent() const { return *parent_; }
  const Poly& inverted() const { return *inverted_; }

 private:
  SpecCatalogue(SpecFamily family, PresentedAlgebra ring) : family_(family), ring_(std::move(ring)) {}

  std::vector<SpecPoint> base_points(const SpecBound& bound) const;
  std::vector<SpecPoint> component_points() const;

  SpecFamily family_;
  PresentedAlgebra ring_;
  std::shared_ptr<const SpecCatalogue> parent_;  // Localization: the parent; Quotient: the ambient
  std::optional<Poly> inverted_;
  std::vector<SpecCatalogue> parts_;
};

/// V(I) inside a catalogued spectrum.
struct ZariskiClosed {
  SpecCatalogue owner;
  std::vector<Poly> ideal;

  bool contains(const SpecPoint& x) const;
  std::vector<SpecPoint> points(const SpecBound& bound = {}) const;
  std::string to_string() const;
};

ZariskiClosed closure(const SpecCatalogue& s, const SpecPoint& x);

/// V(I) = V(J), by radical membership both ways.
bool same_closed_set(const ZariskiClosed& a, const ZariskiClosed& b);

/// The generic point when V(I) is irreducible, nullopt when it is not.
/// Throws Undecidable when no factorization path applies.
std::optional<SpecPoint> irreducible_generic_point(const ZariskiClosed& z);

/// Components V(P_i) of V(f), one per distinct irreducible factor.  When
/// `supplied` is given the factors are checked by multiplication instead of
/// being computed.
std::vector<ZariskiClosed> irreducible_components(const SpecCatalogue& s, const Poly& f,
                                                  const std::optional<std::vector<Poly>>& supplied = std::nullopt);

/// Distinct irreducible factors (with multiplicity) of f in k[S,T], k = QQ
/// or GF(p), via the content over k[S] and a factorization over k(S).
std::vector<std::pair<Poly, unsigned>> factor_bivariate(const Poly& f);

/// Points of V(P0) on the closed fiber of ZZ[T] over p: the distinct monic
/// irreducible factors of P0 mod p.  nullopt when P0 vanishes mod p (the
/// whole fiber).
std::optional<std::vector<UniPoly>> closed_fiber_factors(const Poly& p0, long p);

struct KrullDimension {
  bool minus_infinity = false;
  long value = 0;

  std::string to_string() const { return minus_infinity ? "-inf" : std::to_string(value); }
  bool operator==(const KrullDimension& o) const { return minus_infinity == o.minus_infinity && value == o.value; }
};

/// Exact for field bases (through the dimension of the initial ideal) and
/// for the integer families; Unsupported otherwise.
KrullDimension krull_dimension(const PresentedAlgebra& a);

/// Coefficients a_i with sum a_i f_i = 1 in A, or nullopt when the f_i do
/// not generate the unit ideal.
std::optional<std::vector<Poly>> partition_of_unity(const PresentedAlgebra& a, const std::vector<Poly>& fs);

/// Minimal polynomial over the prime field (or over the constants of a
/// function field).  nullopt for transcendental elements.
std::optional<UniPoly> minimal_polynomial(const Domain& k, const Scalar& a);

/// Image of c in kappa(y) under kappa(x) -> kappa(y) sending the generator
/// of kappa(x) to `gen_image`.
Scalar embed_residue(const Domain& from, const Scalar& c, const Domain& to, const std::optional<Scalar>& gen_image);

}  // namespace schemex
