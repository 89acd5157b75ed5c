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

#include "schemex/proj.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "schemex/spectrum.hpp"

namespace schemex {

namespace {

std::vector<std::string> indexed(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Divides num and den by their common monomial factor.
ChartElement cancel_monomials(const Poly& num, const Poly& den) {
  const std::size_t n = num.ring().nvars();
  Monomial g;
  bool first = true;
  for (const Poly* p : {&num, &den})
    for (auto& t : p->terms()) {
      if (first) {
        g = t.m;
        first = false;
      }
      for (std::size_t k = 0; k < n; ++k) g[k] = std::min(g[k], t.m[k]);
    }
  auto divide = [&](const Poly& p) {
    std::vector<Term> terms;
    for (auto& t : p.terms()) {
      Monomial m = t.m;
      for (std::size_t k = 0; k < n; ++k) m[k] -= g[k];
      terms.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(p.ring(), std::move(terms));
  };
  Poly a = first ? num : divide(num);
  Poly b = first ? den : divide(den);
  const Domain& k = b.domain();
  if (b.is_constant() && !b.is_zero() && k.is_unit(b.constant_coeff())) {
    Scalar u = k.inv(b.constant_coeff());
    a = a.scale(u);
    b = b.scale(u);
  }
  return ChartElement{a, b};
}

std::string parenthesized(const Poly& p) {
  std::string s = p.to_string();
  return p.terms().size() > 1 || s.find('*') != std::string::npos ? "(" + s + ")" : s;
}

PresentedAlgebra chart_algebra(const GradedAlgebra& b, std::size_t i) {
  PolyRing cr = chart_ring(b.ring(), i);
  std::vector<Poly> rels;
  for (auto& f : b.relations()) rels.push_back(dehomogenize(f, i, cr));
  return PresentedAlgebra(cr, rels);
}

}  // namespace

// ---------------------------------------------------------------------------
// Graded algebras

GradedAlgebra::GradedAlgebra(PolyRing ring, std::vector<Poly> relations) : ring_(std::move(ring)) {
  if (ring_.nvars() == 0) fail(ErrorCode::InvalidArgument, "a graded algebra needs at least one variable");
  for (auto& f : relations) {
    if (f.ring() != ring_) fail(ErrorCode::InvalidArgument, f.to_string() + " is not in " + ring_.name());
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
    relations_.push_back(f);
  }
}

GradedAlgebra GradedAlgebra::projective_space(const Domain& base, std::size_t n, const std::string& prefix) {
  return GradedAlgebra(PolyRing(base, indexed(prefix, n)), {});
}

GradedAlgebra GradedAlgebra::base_change(const Domain& target) const {
  PolyRing r = ring_.with_domain(target);
  std::vector<Poly> rels;
  for (auto& f : relations_) rels.push_back(map_coefficients(f, r));
  return GradedAlgebra(r, rels);
}

std::string GradedAlgebra::to_string() const { return algebra().to_string(); }

GradedAlgebra parse_graded(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("P^", 0) == 0) {
    std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')') fail(ErrorCode::SyntaxError, "expected P^n(<domain>), got " + s);
    std::size_t n = 0;
    try {
      n = std::stoul(s.substr(2, open - 2));
    } catch (const std::exception&) {
      fail(ErrorCode::SyntaxError, "bad dimension in " + s);
    }
    return GradedAlgebra::projective_space(parse_domain(s.substr(open + 1, s.size() - open - 2)), n);
  }
  PresentedAlgebra a = parse_algebra(text);
  return GradedAlgebra(a.ring(), a.relations());
}

bool proj_is_empty(const GradedAlgebra& b) {
  Ideal rel{PresentedAlgebra(b.ring(), {}), b.relations()};
  for (std::size_t i = 0; i < b.ring().nvars(); ++i)
    if (!radical_membership(rel, Poly::variable(b.ring(), i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Charts

ProjChart proj_chart(const GradedAlgebra& b, std::size_t i) {
  if (i >= b.ring().nvars()) fail(ErrorCode::InvalidArgument, "no coordinate T" + std::to_string(i));
  Ideal rel{PresentedAlgebra(b.ring(), {}), b.relations()};
  if (radical_membership(rel, Poly::variable(b.ring(), i)))
    fail(ErrorCode::NilpotentCoordinate, b.ring().vars()[i] + " is nilpotent in " + b.to_string());
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < b.ring().nvars(); ++j)
    if (j != i) idx.push_back(j);
  return ProjChart{i, chart_algebra(b, i), idx};
}

std::vector<ProjChart> proj_atlas(const GradedAlgebra& b) {
  std::vector<ProjChart> out;
  for (std::size_t i = 0; i < b.ring().nvars(); ++i) {
    try {
      out.push_back(proj_chart(b, i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NilpotentCoordinate) throw;
    }
  }
  return out;
}

bool ProjChart::verify(const GradedAlgebra& b) const {
  if (ring.relations().size() != b.relations().size()) return false;
  Poly ti = Poly::variable(b.ring(), index);
  for (std::size_t l = 0; l < b.relations().size(); ++l) {
    const Poly& f = b.relations()[l];
    const Poly& g = ring.relations()[l];
    if (g.is_zero()) return false;
    long m = f.total_degree();
    long e = g.total_degree();
    if (e > m) return false;
    if (homogenize(g, b.ring(), index) * ti.pow(static_cast<unsigned>(m - e)) != f) return false;
  }
  return true;
}

std::string ProjChart::to_string() const { return "D+(T" + std::to_string(index) + ") = Spec " + ring.to_string(); }

ChartElement ChartElement::of(const Poly& f) { return ChartElement{f, Poly::from_int(f.ring(), 1)}; }

std::string ChartElement::to_string() const {
  if (den.is_constant() && den.domain().is_one(den.constant_coeff())) return num.to_string();
  return parenthesized(num) + "/" + parenthesized(den);
}

ChartElement chart_transition(const GradedAlgebra& b, std::size_t i, std::size_t j, const ChartElement& e) {
  const std::size_t n = b.ring().nvars();
  if (i >= n || j >= n) fail(ErrorCode::InvalidArgument, "chart index out of range");
  if (e.num.ring().nvars() + 1 != n || e.den.ring() != e.num.ring())
    fail(ErrorCode::InvalidArgument, "element is not in a chart ring of " + b.to_string());
  if (e.den.is_zero()) fail(ErrorCode::DenominatorVanishes, "zero denominator");
  if (i == j) return e;
  PresentedAlgebra target = chart_algebra(b, j);
  if (e.num.is_zero()) return ChartElement::of(Poly(target.ring()));
  // num/den = (Fn / Ti^N) / (Fd / Ti^D) = Fn Ti^D / (Fd Ti^N), both of degree N + D
  Poly ti = Poly::variable(b.ring(), i);
  auto N = static_cast<unsigned>(e.num.total_degree());
  auto D = static_cast<unsigned>(e.den.total_degree());
  Poly fn = homogenize(e.num, b.ring(), i) * ti.pow(D);
  Poly fd = homogenize(e.den, b.ring(), i) * ti.pow(N);
  ChartElement out = cancel_monomials(dehomogenize(fn, j, target.ring()), dehomogenize(fd, j, target.ring()));
  if (target.is_zero_element(out.den))
    fail(ErrorCode::DenominatorVanishes, e.to_string() + " has a vanishing denominator on chart " + std::to_string(j));
  return out;
}

bool chart_equal(const ProjChart& chart, const ChartElement& a, const ChartElement& b) {
  return chart.ring.is_zero_element(a.num * b.den - b.num * a.den);
}

// ---------------------------------------------------------------------------
// Points

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + field.to_string(coords[i]);
  return s + "]";
}

ProjPoint point_normalize(const Domain& field, std::vector<Scalar> coords) {
  if (!field.is_field()) fail(ErrorCode::NonFieldBase, "projective points need a field, got " + field.name());
  auto it = std::find_if(coords.begin(), coords.end(), [&](const Scalar& c) { return !field.is_zero(c); });
  if (it == coords.end()) fail(ErrorCode::AllZero, "all homogeneous coordinates are zero");
  Scalar u = field.inv(*it);
  for (auto& c : coords) c = field.mul(c, u);
  return ProjPoint{field, std::move(coords)};
}

std::vector<Scalar> parse_coordinates(const Domain& field, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(ErrorCode::SyntaxError, "expected [a0:...:an], got " + s);
  PolyRing constants(field, {});
  std::vector<Scalar> coords;
  std::size_t start = 1;
  while (true) {
    std::size_t colon = s.find(':', start);
    std::size_t end = colon == std::string::npos ? s.size() - 1 : colon;
    Poly c = parse_poly(constants, s.substr(start, end - start));
    coords.push_back(c.constant_coeff());
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return coords;
}

ProjPoint parse_proj_point(const Domain& field, std::string_view text) {
  return point_normalize(field, parse_coordinates(field, text));
}

std::vector<ProjPoint> projective_points(const Domain& field, std::size_t n) {
  if (!field.is_field() || !field.is_finite())
    fail(ErrorCode::InfiniteDomain, "point enumeration needs a finite field, got " + field.name());
  auto elems = field.elements();
  std::vector<ProjPoint> out;
  for (std::size_t k = n + 1; k-- > 0;) {
    // [0:..:0:1:*:..:*] with the 1 at position k
    std::vector<std::vector<Scalar>> tails{{}};
    for (std::size_t i = k + 1; i <= n; ++i) {
      std::vector<std::vector<Scalar>> next;
      for (auto& t : tails)
        for (auto& a : elems) {
          auto w = t;
          w.push_back(a);
          next.push_back(std::move(w));
        }
      tails = std::move(next);
    }
    for (auto& t : tails) {
      std::vector<Scalar> c(k, field.zero());
      c.push_back(field.one());
      c.insert(c.end(), t.begin(), t.end());
      out.push_back(ProjPoint{field, std::move(c)});
    }
  }
  return out;
}

std::vector<ProjPoint> rational_points(const GradedAlgebra& b) {
  std::vector<ProjPoint> out;
  for (auto& p : projective_points(b.base(), b.dimension())) {
    bool on = true;
    for (auto& f : b.relations()) on = on && b.base().is_zero(evaluate(f, p.coords));
    if (on) out.push_back(p);
  }
  return out;
}

ProjPoint segre(const ProjPoint& p, const ProjPoint& q) {
  if (p.field != q.field) fail(ErrorCode::InvalidArgument, "Segre product of points over different fields");
  std::vector<Scalar> c;
  for (auto& s : p.coords)
    for (auto& t : q.coords) c.push_back(p.field.mul(s, t));
  return point_normalize(p.field, std::move(c));
}

ProjPoint conic(const ProjPoint& p) {
  if (p.dimension() != 1) fail(ErrorCode::InvalidArgument, "the conic map starts from P^1");
  const Domain& k = p.field;
  return point_normalize(k, {k.mul(p.coords[0], p.coords[0]), k.mul(p.coords[0], p.coords[1]), k.mul(p.coords[1], p.coords[1])});
}

ProjPoint veronese(const ProjPoint& p) { return segre(p, p); }

// ---------------------------------------------------------------------------
// Maps and image ideals

std::vector<Poly> ProjectiveMap::kernel() const {
  std::vector<std::string> vars = target.vars();
  for (auto& v : source.vars()) {
    if (target.index_of(v)) fail(ErrorCode::VariableClash, v + " names both a source and a target coordinate");
    vars.push_back(v);
  }
  PolyRing all(target.domain(), vars);
  std::vector<Poly> src;
  for (std::size_t i = 0; i < source.nvars(); ++i) src.push_back(Poly::variable(all, target.nvars() + i));
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < components.size(); ++k)
    gens.push_back(Poly::variable(all, k) - substitute(components[k], all, src));
  return eliminate(all, gens, target);
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) { return "Z" + std::to_string(i) + std::to_string(j); }

void check_small(std::size_t n) {
  if (n > 9) fail(ErrorCode::InvalidArgument, "coordinate indices above 9 are not supported");
}

}  // namespace

ProjectiveMap segre_map(const Domain& base, std::size_t n, std::size_t m) {
  check_small(n);
  check_small(m);
  auto vars = indexed("S", n);
  auto tv = indexed("T", m);
  vars.insert(vars.end(), tv.begin(), tv.end());
  PolyRing src(base, vars);
  std::vector<std::string> zs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Poly> comps;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      zs.push_back(pair_name(i, j));
      pairs.emplace_back(i, j);
      comps.push_back(Poly::variable(src, i) * Poly::variable(src, n + 1 + j));
    }
  return ProjectiveMap{"segre", src, PolyRing(base, zs), comps, pairs};
}

ProjectiveMap conic_map(const Domain& base) {
  PolyRing src(base, {"S0", "S1"});
  Poly s0 = Poly::variable(src, 0), s1 = Poly::variable(src, 1);
  return ProjectiveMap{"conic", src, PolyRing(base, {"T0", "T1", "T2"}), {s0 * s0, s0 * s1, s1 * s1}, {}};
}

ProjectiveMap veronese_map(const Domain& base, std::size_t n) {
  check_small(n);
  PolyRing src(base, indexed("S", n));
  std::vector<std::string> zs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Poly> comps;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      zs.push_back(pair_name(i, j));
      pairs.emplace_back(i, j);
      comps.push_back(Poly::variable(src, i) * Poly::variable(src, j));
    }
  return ProjectiveMap{"veronese", src, PolyRing(base, zs), comps, pairs};
}

namespace {

std::vector<Poly> minors(const ProjectiveMap& map) {
  auto z = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < map.pairs.size(); ++k)
      if (map.pairs[k] == std::make_pair(i, j)) return Poly::variable(map.target, k);
    fail(ErrorCode::InvalidArgument, "no coordinate " + pair_name(i, j));
  };
  std::size_t n = 0, m = 0;
  for (auto& [i, j] : map.pairs) {
    n = std::max(n, i);
    m = std::max(m, j);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t i2 = i + 1; i2 <= n; ++i2)
      for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t j2 = j + 1; j2 <= m; ++j2) out.push_back(z(i, j) * z(i2, j2) - z(i, j2) * z(i2, j));
  return out;
}

}  // namespace

std::vector<Poly> segre_ideal(const ProjectiveMap& map) {
  if (map.pairs.empty()) fail(ErrorCode::InvalidArgument, "not a Segre map");
  return minors(map);
}

std::vector<Poly> veronese_ideal(const ProjectiveMap& map) {
  if (map.pairs.empty()) fail(ErrorCode::InvalidArgument, "not a Veronese map");
  auto out = minors(map);
  for (std::size_t k = 0; k < map.pairs.size(); ++k) {
    auto [i, j] = map.pairs[k];
    if (i >= j) continue;
    for (std::size_t l = 0; l < map.pairs.size(); ++l)
      if (map.pairs[l] == std::make_pair(j, i)) out.push_back(Poly::variable(map.target, k) - Poly::variable(map.target, l));
  }
  return out;
}

std::vector<Poly> conic_ideal(const ProjectiveMap& map) {
  if (map.target.nvars() != 3) fail(ErrorCode::InvalidArgument, "not the conic map");
  return {parse_poly(map.target, map.target.vars()[0] + "*" + map.target.vars()[2] + "-" + map.target.vars()[1] + "^2")};
}

IdealComparison compare_image_ideal(const ProjectiveMap& map, const std::vector<Poly>& expected) {
  IdealComparison c{map.kernel(), expected, true, true};
  PresentedAlgebra amb(map.target, {});
  for (auto& f : c.computed) c.computed_in_radical_of_expected = c.computed_in_radical_of_expected && radical_membership(Ideal{amb, expected}, f);
  for (auto& f : expected) c.expected_in_radical_of_computed = c.expected_in_radical_of_computed && radical_membership(Ideal{amb, c.computed}, f);
  return c;
}

// ---------------------------------------------------------------------------
// Twisting sheaves

TwistSections twist_sections(const Domain& base, std::size_t n, long d) {
  TwistSections out{n, d, {}};
  if (d < 0) return out;
  PolyRing r(base, indexed("T", n));
  Monomial m(n + 1, 0);
  // exponent vectors of total degree d, first variable descending
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      m[i] = left;
      out.basis.push_back(Poly::monomial(r, m, base.one()));
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, static_cast<unsigned>(d));
  return out;
}

bool section_extends(std::size_t n, long d, const Domain& base, const Poly& g) {
  GradedAlgebra pn = GradedAlgebra::projective_space(base, n);
  if (g.ring().nvars() != n) fail(ErrorCode::InvalidArgument, g.to_string() + " is not on the chart D+(T0) of P^" + std::to_string(n));
  if (g.is_zero()) return true;
  // on D+(T0), s_0 = g; on D+(Tj), s_j = (T0/Tj)^d g = t0^d g
  auto e = static_cast<unsigned>(d < 0 ? -d : d);
  for (std::size_t j = 1; j <= n; ++j) {
    ChartElement t = chart_transition(pn, 0, j, ChartElement::of(g));
    Poly t0e = Poly::variable(t.num.ring(), 0).pow(e);
    ChartElement s = d >= 0 ? cancel_monomials(t.num * t0e, t.den) : cancel_monomials(t.num, t.den * t0e);
    if (!s.den.is_constant()) return false;
  }
  return true;
}

std::pair<Poly, Poly> TwistCocycle::transition(std::size_t i, std::size_t j) const {
  Poly ti = Poly::variable(ring, i), tj = Poly::variable(ring, j);
  auto e = static_cast<unsigned>(d < 0 ? -d : d);
  if (d >= 0) return {tj.pow(e), ti.pow(e)};
  return {ti.pow(e), tj.pow(e)};
}

bool TwistCocycle::verify() const {
  const std::size_t m = n + 1;
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = transition(i, i);
    if (a != b) return false;
    for (std::size_t j = 0; j < m; ++j) {
      auto [nij, dij] = transition(i, j);
      auto [nji, dji] = transition(j, i);
      if (nij * nji != dij * dji) return false;
      for (std::size_t k = 0; k < m; ++k) {
        auto [njk, djk] = transition(j, k);
        auto [nik, dik] = transition(i, k);
        if (nij * njk * dik != dij * djk * nik) return false;
      }
    }
  }
  return true;
}

std::string TwistCocycle::to_string() const {
  std::string s;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      auto [a, b] = transition(i, j);
      if (!s.empty()) s += "; ";
      s += "f_" + std::to_string(i) + std::to_string(j) + " = " + ChartElement{a, b}.to_string();
    }
  return s.empty() ? "trivial" : s;
}

TwistCocycle twist_cocycle(const Domain& base, std::size_t n, long d) {
  return TwistCocycle{n, d, PolyRing(base, indexed("T", n))};
}

bool tensor_matches(const TwistCocycle& a, const TwistCocycle& b, const TwistCocycle& sum) {
  if (a.n != b.n || a.n != sum.n) return false;
  for (std::size_t i = 0; i <= a.n; ++i)
    for (std::size_t j = 0; j <= a.n; ++j) {
      auto [na, da] = a.transition(i, j);
      auto [nb, db] = b.transition(i, j);
      auto [ns, ds] = sum.transition(i, j);
      if (na * nb * ds != da * db * ns) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Zero loci of sections

SectionZeroLocus section_zero_locus(const GradedAlgebra& b, const Poly& f) {
  if (f.ring() != b.ring()) fail(ErrorCode::InvalidArgument, f.to_string() + " is not in " + b.ring().name());
  if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
  SectionZeroLocus out{b, f, {}};
  for (auto& chart : proj_atlas(b)) {
    Poly g = dehomogenize(f, chart.index, chart.ring.ring());
    Ideal v{chart.ring, {g}};
    out.charts.push_back(ChartLocus{chart.index, chart.ring, {g}, is_zero_ring(v.quotient())});
  }
  return out;
}

bool SectionZeroLocus::empty() const {
  return std::all_of(charts.begin(), charts.end(), [](const ChartLocus& c) { return c.empty; });
}

std::vector<ProjPoint> SectionZeroLocus::rational_points() const {
  std::vector<ProjPoint> out;
  for (auto& p : schemex::rational_points(space))
    if (space.base().is_zero(evaluate(section, p.coords))) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// The projective line

std::vector<HomogeneousPrime> projective_line_primes(const Domain& field, unsigned max_degree) {
  if (!field.is_field()) fail(ErrorCode::NonFieldBase, "homogeneous primes are catalogued over fields only");
  PolyRing r(field, {"T0", "T1"});
  std::vector<HomogeneousPrime> out{{"eta", std::nullopt}, {"x_{T0}", Poly::variable(r, 0)}};
  auto line = SpecCatalogue::recognize(PresentedAlgebra::polynomial(field, {"t1"}));
  for (auto& x : line.points(SpecBound{10, max_degree, 2})) {
    if (!x.closed) continue;
    Poly h = homogenize(x.ideal.front(), r, 0);
    out.push_back(HomogeneousPrime{"x_{" + h.to_string() + "}", h});
  }
  return out;
}

}  // namespace schemex
