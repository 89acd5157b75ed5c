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

// Sparse multivariate polynomials over a Domain.
//
// A PolyRing fixes the coefficient domain, an ordered list of variable names
// and a term order.  Polynomials store their terms sorted strictly
// descending in that order with no zero coefficients, so equality is
// structural.  Variables are identified by name only through explicit
// conversion functions (embed, substitute); arithmetic requires equal rings.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemex/arith.hpp"

namespace schemex {

using Monomial = std::vector<unsigned>;

struct Term {
  Monomial m;
  Scalar c;
};

enum class TermOrder {
  Lex,
  GrevLex,
  /// Elimination order: grevlex on the first `block` variables, ties broken
  /// by grevlex on the rest.
  Block,
};

class PolyRing {
 public:
  PolyRing(Domain dom, std::vector<std::string> vars, TermOrder order = TermOrder::GrevLex, std::size_t block = 0);

  const Domain& domain() const { return rep_->dom; }
  const std::vector<std::string>& vars() const { return rep_->vars; }
  std::size_t nvars() const { return rep_->vars.size(); }
  TermOrder order() const { return rep_->order; }
  std::size_t block() const { return rep_->block; }

  /// Sign of a - b in the term order.
  int compare(const Monomial& a, const Monomial& b) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  PolyRing with_order(TermOrder order, std::size_t block = 0) const;
  PolyRing with_domain(const Domain& dom) const;
  PolyRing with_vars(std::vector<std::string> vars) const;

  /// e.g. "QQ[X,Y]"
  std::string name() const;

  /// Same domain, variables and order.
  bool operator==(const PolyRing& o) const;
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  struct Rep {
    Domain dom;
    std::vector<std::string> vars;
    TermOrder order;
    std::size_t block;
  };
  std::shared_ptr<const Rep> rep_;
};

class Poly {
 public:
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}

  static Poly constant(const PolyRing& r, const Scalar& c);
  static Poly from_int(const PolyRing& r, long c) { return constant(r, r.domain().from_int(c)); }
  static Poly variable(const PolyRing& r, std::size_t i);
  static Poly variable(const PolyRing& r, std::string_view name);
  static Poly monomial(const PolyRing& r, Monomial m, const Scalar& c);
  /// Sorts and combines like terms; drops zeros.
  static Poly from_terms(const PolyRing& r, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const Domain& domain() const { return ring_.domain(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Leading term; the polynomial must be nonzero.
  const Term& lead() const { return terms_.front(); }
  Scalar constant_coeff() const;
  Scalar coeff(const Monomial& m) const;
  /// -1 for the zero polynomial.
  long total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Scalar& c) const;
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  /// Leading coefficient scaled to one (field coefficients).
  Poly monic() const;
  /// Same terms in a ring that differs only in its term order.
  Poly reorder(const PolyRing& r) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

/// Ring homomorphism determined by variable images in `target`, with the
/// canonical coefficient map from f's domain.
Poly substitute(const Poly& f, const PolyRing& target, const std::vector<Poly>& images);
/// Moves f into `target`, matching variables by name.  Throws
/// InvalidArgument when a variable of f's support is missing.
Poly embed(const Poly& f, const PolyRing& target);
/// Same variables, coefficients pushed along the canonical map.
Poly map_coefficients(const Poly& f, const PolyRing& target);
/// Value at a point of domain elements.
Scalar evaluate(const Poly& f, const std::vector<Scalar>& point);

/// Parses "X^2*Y - 3", "(1/2)*X + i*Y", "2X(Y+1)^3".  Identifiers are ring
/// variables or the domain generator.
Poly parse_poly(const PolyRing& r, std::string_view text);

/// Degree -> homogeneous component; empty for zero.
std::map<long, Poly> homogeneous_components(const Poly& f);
/// f lives in n variables; target has n+1 variables and the new one sits at
/// `position`.  The result is homogeneous of degree deg f.
Poly homogenize(const Poly& f, const PolyRing& target, std::size_t position);
/// Sets variable `index` to 1; target has the remaining variables in order.
Poly dehomogenize(const Poly& f, std::size_t index, const PolyRing& target);
/// Variables other than i, lowercased (T1 -> t1), same domain.
PolyRing chart_ring(const PolyRing& graded, std::size_t i);

struct ContentPrimitive {
  Poly content;
  Poly primitive;
};
/// Over ZZ: integer content with a positive leading primitive part.  With
/// `main_var` in a two-variable ring over a field: content in k[S] of f as a
/// polynomial in the main variable, primitive part with monic content.
ContentPrimitive content_primitive(const Poly& f, std::optional<std::size_t> main_var = std::nullopt);

/// f must involve only `var`.
UniPoly to_univariate(const Poly& f, std::size_t var);
Poly from_univariate(const UniPoly& u, const PolyRing& r, std::size_t var);

/// Largest exponent of any single variable in f.
unsigned max_exponent(const Poly& f);

}  // namespace schemex
