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

// Presheaves on finite topological spaces with finite section sets, and the
// structure sheaf of a finite ring.  Everything is decided by enumeration.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schemex/presented.hpp"

namespace schemex {

using OpenSet = std::uint32_t;  // bit x set when point x belongs to the set

class FiniteSpace {
 public:
  /// Checks that the family contains the empty set and the whole space and is
  /// closed under unions and intersections.  At most 20 points.
  FiniteSpace(std::vector<std::string> points, std::vector<OpenSet> opens);
  static FiniteSpace discrete(std::vector<std::string> points);
  /// The opens are the subsets closed under generization; closure[x] is the
  /// set of specializations of x (x included).
  static FiniteSpace from_closures(std::vector<std::string> points, const std::vector<OpenSet>& closure);

  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  OpenSet whole() const { return static_cast<OpenSet>((std::uint64_t{1} << points_.size()) - 1); }
  /// Sorted by cardinality, then by mask; opens()[0] is empty, the last is
  /// the whole space.
  const std::vector<OpenSet>& opens() const { return opens_; }
  bool is_open(OpenSet u) const { return index_.count(u) > 0; }
  /// Throws InvalidArgument for a non-open set.
  std::size_t open_index(OpenSet u) const;
  /// Smallest open containing x.
  OpenSet minimal_open(std::size_t x) const { return minimal_[x]; }

  /// Open covers of u, as lists of open indices.  All of them when at most
  /// 12 nonempty opens lie inside u; otherwise the cover by minimal opens
  /// and every two-element cover (the minimal-open cover refines all others).
  std::vector<std::vector<std::size_t>> covers(OpenSet u) const;
  std::string describe(OpenSet u) const;

 private:
  std::vector<std::string> points_;
  std::vector<OpenSet> opens_;
  std::map<OpenSet, std::size_t> index_;
  std::vector<OpenSet> minimal_;
};

/// A commutative ring with finitely many elements, given by its tables.
struct FiniteRing {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> add, mul;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<Poly> polys;  // normal forms when built from a presented algebra

  std::size_t size() const { return labels.size(); }
  std::size_t neg(std::size_t a) const;
  std::size_t sub(std::size_t a, std::size_t b) const { return add[a][neg(b)]; }
  std::size_t pow(std::size_t a, unsigned e) const;
  std::optional<std::size_t> inverse(std::size_t a) const;
  bool is_unit(std::size_t a) const { return inverse(a).has_value(); }
  std::vector<std::size_t> units() const;
  /// Throws InvalidArgument when the label is unknown.
  std::size_t index_of(const std::string& label) const;
  /// Ring axioms, exhaustively.
  bool is_ring() const;

  static FiniteRing integers_mod(long n);
  /// Finite base (ZZ/n without variables, or a finite field) and a finite
  /// dimensional quotient.  Throws InfiniteSpectrum otherwise.
  static FiniteRing from_algebra(const PresentedAlgebra& a);
  static FiniteRing product(const FiniteRing& a, const FiniteRing& b);
  /// A / I for I given by a membership mask, with the projection A -> A/I.
  static std::pair<FiniteRing, std::vector<std::size_t>> quotient(const FiniteRing& a, const std::vector<bool>& ideal);
};

/// Is `map` (indices of b for each element of a) a unital ring homomorphism?
bool is_ring_homomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<std::size_t>& map);

/// A presheaf of finite sets, optionally of finite rings, on a finite space.
class FinitePresheaf {
 public:
  using Restriction = std::function<std::size_t(std::size_t u, std::size_t v, std::size_t s)>;

  /// sections[u] lists the sections over opens()[u]; restrict(u, v, s) is
  /// the restriction of section s from open u to open v (v inside u).
  /// Identity and composition are checked exhaustively.
  FinitePresheaf(FiniteSpace space, std::vector<std::vector<std::string>> sections, const Restriction& restrict);
  /// Ring-valued version; restrictions must be ring homomorphisms.
  FinitePresheaf(FiniteSpace space, std::vector<FiniteRing> rings, const Restriction& restrict);

  const FiniteSpace& space() const { return space_; }
  const std::vector<std::string>& sections(std::size_t u) const { return sections_[u]; }
  std::size_t restrict(std::size_t u, std::size_t v, std::size_t s) const;
  bool has_rings() const { return !rings_.empty(); }
  const FiniteRing& ring(std::size_t u) const { return rings_.at(u); }

  /// Sections over the minimal open of x (the direct limit in a finite space).
  std::size_t stalk_open(std::size_t x) const { return space_.open_index(space_.minimal_open(x)); }
  const std::vector<std::string>& stalk(std::size_t x) const { return sections(stalk_open(x)); }

  /// Compatible families on the cover (one section per member), found by
  /// backtracking.
  std::vector<std::vector<std::size_t>> compatible_families(const std::vector<std::size_t>& cover) const;
  /// Unique gluing for every open and every cover from FiniteSpace::covers.
  bool is_sheaf() const;
  /// The first (open, cover) where gluing fails, described in words.
  std::optional<std::string> sheaf_defect() const;

 private:
  FiniteSpace space_;
  std::vector<std::vector<std::string>> sections_;
  std::vector<FiniteRing> rings_;
  std::vector<std::vector<std::vector<std::size_t>>> restrict_;  // [u][v][s], empty when v is not inside u
};

struct Sheafification {
  FinitePresheaf sheaf;  // sections: families of germs (g_x), x in U, with g_y = g_x|U_y for y in U_x
  std::vector<std::vector<std::size_t>> comparison;  // pi_U: presheaf section -> sheaf section

  /// pi induces a bijection on the stalk at x.
  bool stalk_bijective(std::size_t x) const;
};

Sheafification sheafify(const FinitePresheaf& f);

/// phi: F -> G given open by open; naturality is checked.
struct PresheafMorphism {
  FinitePresheaf source;
  FinitePresheaf target;
  std::vector<std::vector<std::size_t>> maps;

  bool is_natural() const;
};

struct SheafImage {
  std::vector<std::vector<std::size_t>> presheaf_image;  // target sections hit, per open
  std::vector<std::vector<std::size_t>> sheaf_image;     // target sections locally hit, per open
};

/// The target must be a sheaf; the image sheaf consists of the sections
/// whose germ at every point comes from the source.
SheafImage sheaf_image(const PresheafMorphism& phi);

/// The structure sheaf of a finite ring: points are the primitive
/// idempotents (Spec of a finite ring is discrete), the presheaf is
/// U -> S(U)^{-1} A and the sheaf is its sheafification.
struct StructureSheaf {
  FiniteRing ring;
  std::vector<std::size_t> idempotents;  // primitive, one per point
  FiniteSpace space;
  std::shared_ptr<const FinitePresheaf> presheaf;
  std::shared_ptr<const Sheafification> sheaf;
  std::vector<std::vector<std::size_t>> localization_maps;  // A -> S(U)^{-1} A, per open

  const FiniteRing& sections(OpenSet u) const { return sheaf->sheaf.ring(space.open_index(u)); }
  /// D(f): the points where f is not in the prime.
  OpenSet basic_open(std::size_t f) const;
  /// Image of a in Gamma(u).
  std::size_t global_to(OpenSet u, std::size_t a) const;
};

StructureSheaf structure_sheaf(const FiniteRing& a, std::vector<std::string> labels = {});
/// Point labels come from the spectrum catalogue.  Throws InfiniteSpectrum.
StructureSheaf structure_sheaf(const PresentedAlgebra& a);

/// A_f computed directly: A modulo the elements killed by a power of f.
std::pair<FiniteRing, std::vector<std::size_t>> localize(const FiniteRing& a, std::size_t f);

/// The canonical A -> Gamma(D(f)) is a ring map, onto, with kernel the
/// f-power torsion; hence A_f ~ Gamma(D(f)).
struct LocalizationCertificate {
  std::size_t f;
  std::size_t localization_size;
  std::size_t sections_size;
  bool homomorphism;
  bool surjective;
  bool kernel_is_torsion;

  bool verify() const { return homomorphism && surjective && kernel_is_torsion && localization_size == sections_size; }
};

LocalizationCertificate certify_basic_open(const StructureSheaf& o, std::size_t f);

/// Units f_ij in O(U_i cap U_j) on a finite cover of the whole space.
struct UnitCocycle {
  std::vector<OpenSet> cover;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> f;  // all ordered pairs, f_ii included

  std::size_t at(std::size_t i, std::size_t j) const { return f.at({i, j}); }
};

/// f_ii = 1, f_ij f_ji = 1, f_ij f_jk = f_ik on triple overlaps, all units.
bool is_cocycle(const StructureSheaf& o, const UnitCocycle& c);
/// f_ij = a_i / a_j on the overlaps, for units a_i in O(U_i).
UnitCocycle coboundary(const StructureSheaf& o, const std::vector<OpenSet>& cover, const std::vector<std::size_t>& a);
/// The cocycle with f_01 = u on a two-element cover.
UnitCocycle two_cover_cocycle(const StructureSheaf& o, OpenSet u0, OpenSet u1, std::size_t u);
UnitCocycle multiply(const StructureSheaf& o, const UnitCocycle& a, const UnitCocycle& b);
/// Units a_i with c = coboundary(a), by exhaustive search.
std::optional<std::vector<std::size_t>> trivialization(const StructureSheaf& o, const UnitCocycle& c);
bool cohomologous(const StructureSheaf& o, const UnitCocycle& a, const UnitCocycle& b);

/// The rank-one sheaf glued from O|U_i along a cocycle: sections over V are
/// families (s_i) in O(V cap U_i) with s_i = f_ij s_j on the overlaps.
class TwistedSheaf {
 public:
  const StructureSheaf& base() const { return *o_; }
  const UnitCocycle& cocycle() const { return c_; }
  /// Sections over an open, each a family of indices into O(V cap U_i).
  std::vector<std::vector<std::size_t>> sections(OpenSet v) const;
  /// a * s for a in O(v).
  std::vector<std::size_t> act(OpenSet v, std::size_t a, const std::vector<std::size_t>& s) const;
  std::vector<std::size_t> restrict(OpenSet v, OpenSet w, const std::vector<std::size_t>& s) const;
  /// Over every open V inside U_i, s -> s_i is a bijection onto O(V).
  bool locally_trivial() const;

 private:
  friend TwistedSheaf twist_by_cocycle(const TwistedSheaf& l0, const UnitCocycle& c);
  friend TwistedSheaf trivial_bundle(std::shared_ptr<const StructureSheaf> o, const std::vector<OpenSet>& cover);
  TwistedSheaf(std::shared_ptr<const StructureSheaf> o, UnitCocycle c) : o_(std::move(o)), c_(std::move(c)) {}
  std::shared_ptr<const StructureSheaf> o_;
  UnitCocycle c_;
};

/// O itself, described on the given cover (the trivial cocycle).
TwistedSheaf trivial_bundle(std::shared_ptr<const StructureSheaf> o, const std::vector<OpenSet>& cover);
/// L0 glued with the extra cocycle c on the same cover.  Throws
/// NonInvertibleUnit and InvalidArgument.
TwistedSheaf twist_by_cocycle(const TwistedSheaf& l0, const UnitCocycle& c);

/// The cocycle read back from a rank-one sheaf: pick generators t_i of
/// L(U_i) and solve t_j = h_ij t_i on the overlaps.
UnitCocycle cocycle_of(const TwistedSheaf& l);

/// Ordered pairs (U0, U1) of opens covering the whole space.
std::vector<std::pair<OpenSet, OpenSet>> two_covers(const FiniteSpace& s);

}  // namespace schemex
