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

// Exact coefficient domains and univariate polynomials over them.
//
// A Domain is an immutable, shared description of one of
//
//   ZZ, QQ, ZZ/n, GF(p), GF(p^k) = GF(p)[t]/(pi),
//   QQ[t]/(m)          (number field, m irreducible over QQ),
//   k(t)               (rational function field, k = QQ or GF(p)).
//
// Elements are Scalars.  A Scalar is a dense polynomial in the domain
// generator with coefficients in the prime subring (integers, rationals or
// residues stored as mpq values), plus a denominator polynomial that is only
// used by function fields.  Every Domain operation returns canonical scalars,
// so structural equality of Scalars is equality in the domain.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemex/error.hpp"

namespace schemex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense coefficient vector, lowest degree first, no trailing zeros.
using DenseVec = std::vector<Rational>;

struct Scalar {
  DenseVec num;
  DenseVec den;  // empty means 1; function fields only

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

/// Total order on canonical scalars, used for deterministic output only.
bool scalar_less(const Scalar& a, const Scalar& b);

enum class DomainKind {
  Integers,
  Rationals,
  IntegersMod,
  PrimeField,
  FiniteField,
  NumberField,
  FunctionField,
};

class Domain {
 public:
  static Domain integers();
  static Domain rationals();
  /// ZZ/n.  Returns a PrimeField when n is prime, so the field flag is
  /// consistent with the tag.
  static Domain integers_mod(const Integer& n);
  /// GF(p); p must pass the primality certificate.
  static Domain prime_field(const Integer& p);
  /// GF(p^k) = GF(p)[gen]/(modulus); modulus must be monic and certified
  /// irreducible over GF(p).  Coefficients are given lowest degree first.
  static Domain finite_field(const Integer& p, DenseVec modulus, std::string gen = "t");
  /// QQ[gen]/(modulus); modulus is made monic and must be irreducible.
  static Domain number_field(DenseVec modulus, std::string gen = "a");
  /// k(gen) where k is QQ (p = 0) or GF(p).
  static Domain function_field(const Integer& p, std::string gen = "t");

  DomainKind kind() const;
  bool is_field() const;
  bool is_finite() const;
  /// 0 for characteristic zero.
  Integer characteristic() const;
  /// n for ZZ/n, p for GF(p), GF(q) and GF(p)(t); 0 otherwise.
  const Integer& modulus() const;
  /// Monic defining polynomial of an algebraic extension (empty otherwise).
  const DenseVec& extension() const;
  std::size_t extension_degree() const;
  const std::string& generator_name() const;
  bool has_generator() const;
  /// Number of elements of a finite domain.
  Integer cardinality() const;
  /// The prime subring: ZZ, QQ, ZZ/n or GF(p).
  Domain prime_subring() const;
  /// Base field of a function field, the prime field of GF(q), QQ for a
  /// number field, and the domain itself otherwise.
  Domain base_field() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(const Integer& z) const;
  Scalar from_int(long z) const { return from_integer(Integer(z)); }
  /// Throws NotInvertible when the denominator is not a unit.
  Scalar from_rational(const Rational& q) const;
  Scalar generator() const;
  /// Scalar with the given coefficients in the generator (reduced).
  Scalar from_dense(const DenseVec& num) const;
  /// num/den for function fields (den != 0).
  Scalar from_fraction(const DenseVec& num, const DenseVec& den) const;

  bool is_zero(const Scalar& a) const { return a.num.empty(); }
  bool is_one(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, const Integer& e) const;

  /// For ZZ: exact quotient when b divides a, nullopt otherwise.
  std::optional<Scalar> divide_exact(const Scalar& a, const Scalar& b) const;

  /// Integer value of a prime-subring scalar of ZZ, ZZ/n or GF(p).
  Integer as_integer(const Scalar& a) const;
  /// Rational value of a scalar of ZZ or QQ.
  Rational as_rational(const Scalar& a) const;
  /// True when the scalar lies in the prime subring (a constant in the
  /// generator).
  bool is_prime_subring_element(const Scalar& a) const;

  /// Image of `a` under the canonical map from `from` when one exists
  /// (ZZ -> anything, QQ -> characteristic 0, GF(p) -> characteristic p,
  /// ZZ/n -> ZZ/m for m | n, prime subfields into extensions, equal domains).
  /// Throws NoCanonicalMap otherwise.
  Scalar coerce(const Domain& from, const Scalar& a) const;
  static bool has_canonical_map(const Domain& from, const Domain& to);

  /// Enumeration of a finite domain in a fixed order.
  std::vector<Scalar> elements() const;
  /// Units of a finite domain paired with their inverses.
  std::vector<std::pair<Scalar, Scalar>> units() const;
  /// The i-th element in the enumeration order of elements().
  Scalar element_at(const Integer& index) const;

  std::string to_string(const Scalar& a) const;
  /// True when to_string(a) needs parentheses as a factor in a product.
  bool needs_parens(const Scalar& a) const;
  /// Canonical textual name of the domain: ZZ, QQ, ZZ/12, GF(7),
  /// GF(49,t^2+1), QQ[a]/(a^2+1), GF(2)(t), QQ(t).
  std::string name() const;

  bool operator==(const Domain& o) const;
  bool operator!=(const Domain& o) const { return !(*this == o); }

  struct Rep;

 private:
  explicit Domain(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// ---------------------------------------------------------------------------
// Integers

/// Deterministic trial division up to 10^6, Miller-Rabin with a fixed witness
/// set beyond.
bool is_prime(const Integer& n);
/// Prime factorization of |n| (n != 0), sorted by prime.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
/// Primes p with lo <= p <= hi.
std::vector<Integer> primes_up_to(const Integer& hi);

// ---------------------------------------------------------------------------
// Univariate polynomials over a Domain

struct UniPoly {
  Domain dom;
  std::vector<Scalar> c;  // lowest degree first, no trailing zeros

  explicit UniPoly(Domain d) : dom(std::move(d)) {}
  UniPoly(Domain d, std::vector<Scalar> coeffs);

  static UniPoly constant(const Domain& d, const Scalar& a);
  static UniPoly monomial(const Domain& d, const Scalar& a, std::size_t deg);
  static UniPoly x(const Domain& d) { return monomial(d, d.one(), 1); }
  static UniPoly from_ints(const Domain& d, const std::vector<long>& coeffs);

  bool is_zero() const { return c.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Scalar& lead() const { return c.back(); }
  Scalar coeff(std::size_t i) const { return i < c.size() ? c[i] : dom.zero(); }
  void trim();

  bool operator==(const UniPoly& o) const { return dom == o.dom && c == o.c; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly scale(const UniPoly& a, const Scalar& s);

/// Division with remainder; the divisor's leading coefficient must be a unit.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& a);
/// Monic gcd over a field (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic gcd.
std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& a);
UniPoly powmod(const UniPoly& base, const Integer& e, const UniPoly& mod);
Scalar evaluate(const UniPoly& a, const Scalar& x);
UniPoly compose(const UniPoly& outer, const UniPoly& inner);
UniPoly pow(const UniPoly& a, unsigned e);
/// Lexicographic comparison: degree first, then coefficients from the top.
bool uni_less(const UniPoly& a, const UniPoly& b);

// ---------------------------------------------------------------------------
// Factorization

struct UniFactorization {
  Scalar unit;
  std::vector<std::pair<UniPoly, unsigned>> factors;  // monic irreducible

  /// unit * prod factor^mult
  UniPoly expand(const Domain& d) const;
};

/// Complete factorization over QQ, GF(p), GF(q), number fields, and (when
/// every irreducible factor has degree <= 3 after linear factors are split
/// off) over GF(p)(t).  Factors are monic, sorted by degree then by
/// coefficients.
UniFactorization factor_univariate(const UniPoly& f);
bool is_irreducible(const UniPoly& f);
/// Squarefree decomposition over a field: monic parts with multiplicity.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);
/// Roots in the coefficient field (distinct, sorted).
std::vector<Scalar> roots(const UniPoly& f);

/// Units of a finite domain with inverses; InfiniteDomain otherwise.
std::vector<std::pair<Scalar, Scalar>> domain_units(const Domain& d);

/// Hard cap on the degree of polynomials factored over QQ.
inline constexpr long kRationalFactorDegreeCap = 24;

namespace detail {
// Integer-coefficient helpers shared with the multivariate layer.
Integer content(const std::vector<Integer>& coeffs);
/// Factor a squarefree primitive polynomial over ZZ into primitive
/// irreducibles (positive leading coefficients).
std::vector<std::vector<Integer>> factor_squarefree_integer(const std::vector<Integer>& g);
}  // namespace detail

}  // namespace schemex
