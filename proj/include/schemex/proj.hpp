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

// Projective schemes through their chart atlas.  Proj B is never enumerated
// as a set of homogeneous primes (except on the projective line over a
// field); every question is answered on the affine charts D+(T_i).

#pragma once

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "schemex/presented.hpp"

namespace schemex {

/// base[T0..Tn] / I with the standard grading, I given by homogeneous
/// generators.
class GradedAlgebra {
 public:
  /// Throws NotHomogeneous for an inhomogeneous generator.
  GradedAlgebra(PolyRing ring, std::vector<Poly> relations);
  /// base[T0..Tn], variables named prefix0..prefixn.
  static GradedAlgebra projective_space(const Domain& base, std::size_t n, const std::string& prefix = "T");

  const PolyRing& ring() const { return ring_; }
  const Domain& base() const { return ring_.domain(); }
  const std::vector<Poly>& relations() const { return relations_; }
  /// n for base[T0..Tn].
  std::size_t dimension() const { return ring_.nvars() - 1; }
  PresentedAlgebra algebra() const { return PresentedAlgebra(ring_, relations_); }

  /// Same presentation with coefficients pushed to `target`.
  GradedAlgebra base_change(const Domain& target) const;
  std::string to_string() const;

 private:
  PolyRing ring_;
  std::vector<Poly> relations_;
};

/// "QQ[T0,T1,T2]/(T0*T2-T1^2)" or "P^2(GF(5))" (variables T0..Tn).
GradedAlgebra parse_graded(std::string_view text);

/// Every T_i nilpotent in B, i.e. B_+ is contained in the nilradical.
bool proj_is_empty(const GradedAlgebra& b);

/// D+(T_i) = Spec base[t_j]/(g_l), g_l the dehomogenized relations.
struct ProjChart {
  std::size_t index;
  PresentedAlgebra ring;       // variables: the lowercased T_j, j != i
  std::vector<std::size_t> graded_index;  // chart variable k is T_{graded_index[k]} / T_i

  /// T_i^deg(f_l) * g_l(T/T_i) recovers f_l / T_i^m for each relation.
  bool verify(const GradedAlgebra& b) const;
  std::string to_string() const;
};

/// Throws NilpotentCoordinate when T_i is nilpotent in B.
ProjChart proj_chart(const GradedAlgebra& b, std::size_t i);
/// Every chart with T_i not nilpotent.
std::vector<ProjChart> proj_atlas(const GradedAlgebra& b);

/// num / den in a chart ring; den is a monomial times a unit in practice.
struct ChartElement {
  Poly num;
  Poly den;

  static ChartElement of(const Poly& f);
  std::string to_string() const;
};

/// Rewrites an element of chart i as an element of chart j through the
/// ratios T_l / T_i = t_l / t_i; common monomial factors are cancelled.
/// Throws DenominatorVanishes when the new denominator is zero on chart j.
ChartElement chart_transition(const GradedAlgebra& b, std::size_t i, std::size_t j, const ChartElement& e);
/// a = b on chart i, by cross multiplication.
bool chart_equal(const ProjChart& chart, const ChartElement& a, const ChartElement& b);

/// Homogeneous coordinates over a field, first nonzero coordinate 1.
struct ProjPoint {
  Domain field;
  std::vector<Scalar> coords;

  std::size_t dimension() const { return coords.size() - 1; }
  bool in_chart(std::size_t i) const { return !field.is_zero(coords[i]); }
  bool operator==(const ProjPoint& o) const { return field == o.field && coords == o.coords; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Throws AllZero, NonFieldBase.
ProjPoint point_normalize(const Domain& field, std::vector<Scalar> coords);
/// Coordinates of "[1:2]", "[0:3:1]" as written (no normalization).
std::vector<Scalar> parse_coordinates(const Domain& field, std::string_view text);
ProjPoint parse_proj_point(const Domain& field, std::string_view text);
/// Every point of P^n over a finite field, [0:..:0:1] first.
std::vector<ProjPoint> projective_points(const Domain& field, std::size_t n);
/// Points of Proj B over the (finite) base field.
std::vector<ProjPoint> rational_points(const GradedAlgebra& b);

ProjPoint segre(const ProjPoint& p, const ProjPoint& q);
/// [s0:s1] -> [s0^2 : s0 s1 : s1^2].
ProjPoint conic(const ProjPoint& p);
/// [s_0..s_n] -> [s_i s_j]_{ij}, (i, j) in lexicographic order.
ProjPoint veronese(const ProjPoint& p);

/// A morphism of projective spaces given by homogeneous forms of one degree.
struct ProjectiveMap {
  std::string name;
  PolyRing source;                // base[S...] (several factors for Segre)
  PolyRing target;                // base[Z...]
  std::vector<Poly> components;   // one form per target variable
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j) of Zij; empty for the conic

  /// Generators of the kernel of base[Z] -> base[S], by elimination.
  std::vector<Poly> kernel() const;
};

/// P^n x P^m -> P^(nm+n+m); source S0..Sn, T0..Tm, target Zij.
ProjectiveMap segre_map(const Domain& base, std::size_t n, std::size_t m);
/// P^1 -> P^2; source S0, S1, target T0, T1, T2.
ProjectiveMap conic_map(const Domain& base);
/// P^n -> P^(n^2+2n); source S0..Sn, target Zij.
ProjectiveMap veronese_map(const Domain& base, std::size_t n);

/// Closed form of the image ideals: the 2x2 minors Zij Zi'j' - Zij' Zi'j
/// (plus Zij - Zji for the Veronese), and T0 T2 - T1^2 for the conic.
std::vector<Poly> segre_ideal(const ProjectiveMap& segre_map);
std::vector<Poly> veronese_ideal(const ProjectiveMap& veronese_map);
std::vector<Poly> conic_ideal(const ProjectiveMap& conic_map);

struct IdealComparison {
  std::vector<Poly> computed;
  std::vector<Poly> expected;
  bool computed_in_radical_of_expected;
  bool expected_in_radical_of_computed;

  bool equal_radicals() const { return computed_in_radical_of_expected && expected_in_radical_of_computed; }
};

/// Kernel of the map against a closed form, by mutual radical membership.
IdealComparison compare_image_ideal(const ProjectiveMap& map, const std::vector<Poly>& expected);

/// O(d)(P^n_A): the degree-d monomials of A[T0..Tn] for d >= 0, nothing for
/// d < 0.
struct TwistSections {
  std::size_t n;
  long d;
  std::vector<Poly> basis;

  std::size_t rank() const { return basis.size(); }
};

TwistSections twist_sections(const Domain& base, std::size_t n, long d);

/// A section of O(d) on D+(T0) written as g(t1..tn) (trivialized by T0^d)
/// extends to all of P^n when every transition g * (T0/Tj)^d is regular on
/// D+(Tj).
bool section_extends(std::size_t n, long d, const Domain& base, const Poly& g);

/// Transition units (T_j / T_i)^d of O(d) on D+(T_i) cap D+(T_j): a section
/// s_i = F / T_i^d on chart i satisfies s_i = f_ij s_j.
struct TwistCocycle {
  std::size_t n;
  long d;
  PolyRing ring;  // base[T0..Tn]

  /// Homogeneous fraction of degree 0, as (num, den).
  std::pair<Poly, Poly> transition(std::size_t i, std::size_t j) const;
  /// f_ii = 1, f_ij f_ji = 1 and f_ij f_jk = f_ik, symbolically.
  bool verify() const;
  std::string to_string() const;
};

TwistCocycle twist_cocycle(const Domain& base, std::size_t n, long d);
/// The cocycle of O(d1) tensor O(d2): transitions multiply.
bool tensor_matches(const TwistCocycle& a, const TwistCocycle& b, const TwistCocycle& sum);

/// V(F) for a homogeneous F, chart by chart.
struct ChartLocus {
  std::size_t index;
  PresentedAlgebra chart;
  std::vector<Poly> ideal;  // in the chart ring
  bool empty;
};

struct SectionZeroLocus {
  GradedAlgebra space;
  Poly section;
  std::vector<ChartLocus> charts;

  bool empty() const;
  /// Points over the finite base field, each counted once.
  std::vector<ProjPoint> rational_points() const;
};

/// Throws NotHomogeneous.
SectionZeroLocus section_zero_locus(const GradedAlgebra& b, const Poly& f);

/// Homogeneous primes of P^1_k: the generic point and the closed points
/// V(F), F irreducible of degree <= max_degree (T0 first).
struct HomogeneousPrime {
  std::string label;
  std::optional<Poly> generator;  // none for the generic point
};

std::vector<HomogeneousPrime> projective_line_primes(const Domain& field, unsigned max_degree);

}  // namespace schemex
