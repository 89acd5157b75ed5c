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

// Finitely presented algebras base[vars]/(relations).

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemex/groebner.hpp"
#include "schemex/multipoly.hpp"

namespace schemex {

class PresentedAlgebra {
 public:
  PresentedAlgebra(PolyRing ring, std::vector<Poly> relations);
  static PresentedAlgebra polynomial(const Domain& base, std::vector<std::string> vars);

  const PolyRing& ring() const { return ring_; }
  const Domain& base() const { return ring_.domain(); }
  const std::vector<std::string>& vars() const { return ring_.vars(); }
  const std::vector<Poly>& relations() const { return relations_; }

  /// Reduced basis of the relation ideal (field base only).  Computed once
  /// and shared between copies; safe to call from several threads.
  const GroebnerBasis& groebner_basis() const;
  /// Field base, or ZZ base when the relations have unit leading
  /// coefficients and already form a Groebner basis over QQ.
  Poly normal_form(const Poly& f) const;
  bool integral_division() const;
  bool is_zero_element(const Poly& f) const { return normal_form(f).is_zero(); }
  bool equal(const Poly& a, const Poly& b) const { return is_zero_element(a - b); }

  Poly element(std::string_view text) const { return parse_poly(ring_, text); }
  /// "ZZ[X]/(6*X^2 + 18*X - 3)"; the relation list is omitted when empty.
  std::string to_string() const;

 private:
  struct Cache;
  PolyRing ring_;
  std::vector<Poly> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Domain literals: ZZ, QQ, ZZ/n, GF(p), GF(q,m(t)), QQ(i), QQ[a]/(m(a)),
/// GF(p)(t) and QQ(t) for any identifier t other than i.
Domain parse_domain(std::string_view text);
/// "<domain>[X,Y]/(f, g)", "<domain>[X]" or a bare domain.
PresentedAlgebra parse_algebra(std::string_view text);

/// The ideal generated by `gens` inside an algebra.
struct Ideal {
  PresentedAlgebra ambient;
  std::vector<Poly> gens;

  /// Relations of the ambient together with the generators.
  std::vector<Poly> lifted() const;
  PresentedAlgebra quotient() const;
};

bool is_zero_ring(const PresentedAlgebra& a);

/// f in the radical of I (I given in the ambient of `ideal`).
bool radical_membership(const Ideal& ideal, const Poly& f);

/// Generators of the image of I in base[keep].  Field base only.
std::vector<Poly> elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep);

/// A_f = A[T]/(fT - 1) with the first unused name among T, U, V, W, T1, ...
PresentedAlgebra localize(const PresentedAlgebra& a, const Poly& f);
std::string fresh_variable(const std::vector<std::string>& taken, const std::vector<std::string>& preferred = {});

/// Same variables, coefficients pushed along the canonical map base -> target.
PresentedAlgebra specialize(const PresentedAlgebra& a, const Domain& target);

/// A finite extension of a prime field written over that prime field, e.g.
/// QQ(i) -> QQ[i]/(i^2 + 1).  Prime fields and ZZ map to themselves.
PresentedAlgebra prime_presentation(const Domain& d);

class AlgebraMorphism {
 public:
  AlgebraMorphism(PresentedAlgebra source, PresentedAlgebra target, std::vector<Poly> images);

  const PresentedAlgebra& source() const { return source_; }
  const PresentedAlgebra& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }
  Poly apply(const Poly& f) const;
  /// Every relation of the source maps to zero in the target.
  bool is_well_defined() const;
  AlgebraMorphism then(const AlgebraMorphism& next) const;

 private:
  PresentedAlgebra source_, target_;
  std::vector<Poly> images_;
};

struct IsomorphismCertificate {
  AlgebraMorphism forward;
  AlgebraMorphism backward;
  /// Both maps well defined and mutually inverse on generators.
  bool verify() const;
};

struct TensorResult {
  PresentedAlgebra algebra;
  std::vector<std::pair<std::string, std::string>> renamed;  // right factor: old -> new
  AlgebraMorphism left, right;
};

/// B (x)_A C for presentations over the same base A.
TensorResult tensor_product(const PresentedAlgebra& b, const PresentedAlgebra& c);

/// Product presentation with idempotents E1..Er.
PresentedAlgebra product(const std::vector<PresentedAlgebra>& factors);

/// Splitting K (x)_k k[X]/(n) into a product of fields, where K = k[a]/(m)
/// with m irreducible and n squarefree over K.  The input is the tensor
/// presentation k[a,X]/(m(a), n(X)).
struct FieldSplit {
  PresentedAlgebra product;
  std::vector<std::string> factor_descriptions;
  IsomorphismCertificate certificate;
};
FieldSplit split_tensor_of_fields(const PresentedAlgebra& tensor);

struct NilpotentWitness {
  Poly element;
  unsigned index;  // smallest k with element^k = 0
};
/// Searches variables, their pairwise sums and differences.  Field base.
std::optional<NilpotentWitness> find_nilpotent(const PresentedAlgebra& a, unsigned max_index = 16);
std::optional<unsigned> nilpotency_index(const PresentedAlgebra& a, const Poly& f, unsigned max_index = 64);

enum class StructureKind {
  ZeroRing,
  PolynomialRing,
  Field,
  ProductOfFields,
  LocalNonReduced,
  ProductOfLocalRings,
};

struct StructureReport {
  StructureKind kind;
  long degree = 0;                      // dimension over the base when finite
  std::vector<std::string> factors;     // "X + 1", "(X - 4)^2", ...
  std::optional<Integer> discriminant;  // quadratic relations over QQ or ZZ
  std::optional<NilpotentWitness> nilpotent;
  std::string summary;
};

/// Classification of base[X]/(f) for one variable and one relation (or none)
/// over a field.
StructureReport describe_structure(const PresentedAlgebra& a);

struct FractionVerdict {
  bool equal;
  std::optional<Poly> witness;  // r = f^k with r(at - bs) = 0
};
/// a/s = b/t in A localized at the powers of f, where s and t are powers of
/// f.  Decided for field bases, ZZ/n without variables and ZZ[vars].
FractionVerdict fraction_equal(const PresentedAlgebra& a, const Poly& f, const Poly& num1, const Poly& den1,
                               const Poly& num2, const Poly& den2);

}  // namespace schemex
