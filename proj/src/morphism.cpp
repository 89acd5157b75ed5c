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

#include "schemex/morphism.hpp"

#include <algorithm>

namespace schemex {

namespace {

AlgebraMorphism checked(PresentedAlgebra source, PresentedAlgebra target, std::vector<Poly> images) {
  AlgebraMorphism m(std::move(source), std::move(target), std::move(images));
  if (!m.is_well_defined())
    fail(ErrorCode::InvalidMorphism, "a relation of " + m.source().to_string() + " does not map to zero");
  return m;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

RingMorphism::RingMorphism(PresentedAlgebra source, PresentedAlgebra target, std::vector<Poly> images)
    : map_(checked(std::move(source), std::move(target), std::move(images))) {}

RingMorphism RingMorphism::structure_map(const PresentedAlgebra& source, const PresentedAlgebra& target) {
  std::vector<Poly> images;
  for (auto& v : source.vars()) {
    if (!target.ring().index_of(v)) fail(ErrorCode::InvalidMorphism, "no variable " + v + " in " + target.to_string());
    images.push_back(Poly::variable(target.ring(), v));
  }
  return RingMorphism(source, target, std::move(images));
}

std::string RingMorphism::to_string() const {
  std::string s = source().to_string() + " -> " + target().to_string();
  bool structural = true;
  for (std::size_t i = 0; i < images().size(); ++i)
    structural = structural && images()[i].to_string() == source().vars()[i];
  if (structural) return s;
  s += "; ";
  for (std::size_t i = 0; i < images().size(); ++i) s += (i ? ", " : "") + images()[i].to_string();
  return s;
}

RingMorphism parse_morphism(std::string_view text) {
  std::size_t arrow = text.find("->");
  if (arrow == std::string_view::npos) fail(ErrorCode::SyntaxError, "a morphism is written 'A -> B'");
  std::string_view rest = text.substr(arrow + 2);
  std::size_t semi = rest.find(';');
  PresentedAlgebra a = parse_algebra(trim(text.substr(0, arrow)));
  PresentedAlgebra b = parse_algebra(trim(rest.substr(0, semi)));
  if (semi == std::string_view::npos) return RingMorphism::structure_map(a, b);
  std::vector<Poly> images;
  std::string_view list = rest.substr(semi + 1);
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    images.push_back(b.element(trim(list.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  return RingMorphism(a, b, std::move(images));
}

// ---------------------------------------------------------------------------
// Preimages

namespace {

Domain prime_field_of(const Domain& d) {
  return d.characteristic() == 0 ? Domain::rationals() : Domain::prime_field(d.characteristic());
}

Poly dense_poly(const PolyRing& r, std::size_t var, const DenseVec& v) {
  Poly out(r);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    Monomial m(r.nvars(), 0);
    m[var] = static_cast<unsigned>(j);
    out = out + Poly::monomial(r, m, r.domain().from_rational(v[j]));
  }
  return out;
}

// Kernel of F[vars] -> K, X_i -> u_i, F the prime field of K.
std::vector<Poly> kernel_over_prime_field(const std::vector<std::string>& vars, const Domain& K, const std::vector<Scalar>& u) {
  Domain F = prime_field_of(K);
  PolyRing sub(F, vars);
  if (vars.empty()) return {};
  if (K.kind() == DomainKind::Rationals || K.kind() == DomainKind::PrimeField) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      out.push_back(Poly::variable(sub, i) - Poly::constant(sub, F.coerce(K, u[i])));
    return out;
  }
  std::string alpha = fresh_variable(vars, {"alpha"});
  std::vector<std::string> taken = vars;
  taken.push_back(alpha);
  std::string zeta = fresh_variable(taken, {"zeta"});
  std::vector<std::string> wv{alpha, zeta};
  wv.insert(wv.end(), vars.begin(), vars.end());
  PolyRing w(F, wv);
  std::vector<Poly> gens;
  Poly dens = Poly::from_int(w, 1);
  if (K.kind() != DomainKind::FunctionField) gens.push_back(dense_poly(w, 0, K.extension()));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Poly num = dense_poly(w, 0, u[i].num);
    Poly den = u[i].den.empty() ? Poly::from_int(w, 1) : dense_poly(w, 0, u[i].den);
    gens.push_back(Poly::variable(w, 2 + i) * den - num);
    dens = dens * den;
  }
  gens.push_back(Poly::variable(w, 1) * dens - Poly::from_int(w, 1));
  return eliminate(w, gens, sub);
}

// ZZ-coefficient generator of the same prime as g over QQ (primitive part)
// or as g over F_p (representatives in [0, p)).
Poly to_integer_poly(const Poly& g, const PolyRing& zr) {
  const Domain& d = g.domain();
  Integer den = 1;
  if (d.characteristic() == 0)
    for (auto& t : g.terms()) den = lcm(den, Integer(d.as_rational(t.c).get_den()));
  std::vector<Term> terms;
  for (auto& t : g.terms()) {
    Integer v = d.characteristic() == 0 ? Integer(d.as_rational(t.c) * den) : d.as_integer(t.c);
    terms.push_back(Term{t.m, zr.domain().from_integer(v)});
  }
  Poly p = Poly::from_terms(zr, std::move(terms));
  return d.characteristic() == 0 ? content_primitive(p).primitive : p;
}

SpecPoint fallback_point(const SpecCatalogue& s, const std::vector<Poly>& ideal, bool closed) {
  SpecPoint x;
  std::string gens;
  for (std::size_t i = 0; i < ideal.size(); ++i) gens += (i ? ", " : "") + ideal[i].to_string();
  x.label = "x_{" + gens + "}";
  x.ideal = ideal;
  x.closed = closed;
  x.residue_name = "Frac(" + s.ring().ring().name() + "/(" + gens + "))";
  return x;
}

}  // namespace

Scalar Preimage::transport(const Scalar& c, const Domain& kappa_q) const {
  if (!point.residue) fail(ErrorCode::ResidueFieldNotRepresentable, "kappa(" + point.label + ") is not representable");
  return embed_residue(*point.residue, c, kappa_q, generator_image);
}

namespace {

// phi^{-1}(q) by elimination from (relations of B, q, a_i - phi(a_i)).
std::vector<Poly> contracted_ideal(const RingMorphism& phi, const SpecPoint& q) {
  const PresentedAlgebra& a = phi.source();
  const PresentedAlgebra& b = phi.target();
  std::vector<std::string> vars = b.vars(), renamed;
  for (std::size_t i = 0; i < a.vars().size(); ++i) {
    renamed.push_back(fresh_variable(vars, {a.vars()[i] + "_src"}));
    vars.push_back(renamed.back());
  }
  PolyRing w(b.base(), vars);
  PolyRing sub(b.base(), renamed);
  std::vector<Poly> into_w;
  for (std::size_t i = 0; i < b.vars().size(); ++i) into_w.push_back(Poly::variable(w, i));
  std::vector<Poly> gens;
  for (auto& g : b.relations()) gens.push_back(substitute(g, w, into_w));
  for (auto& g : q.ideal) gens.push_back(substitute(g, w, into_w));
  for (std::size_t i = 0; i < a.vars().size(); ++i)
    gens.push_back(Poly::variable(w, b.vars().size() + i) - substitute(phi.images()[i], w, into_w));
  std::vector<Poly> back;
  for (std::size_t i = 0; i < a.vars().size(); ++i) back.push_back(Poly::variable(a.ring(), i));
  std::vector<Poly> out;
  for (auto& g : eliminate(w, gens, sub)) out.push_back(substitute(g, a.ring(), back));
  return out;
}

}  // namespace

Preimage preimage_point(const RingMorphism& phi, const SpecPoint& q) {
  SpecCatalogue s = SpecCatalogue::recognize(phi.source());
  if (!q.residue) {
    if (!(phi.source().base() == phi.target().base() && phi.target().base().is_field()))
      fail(ErrorCode::ResidueFieldNotRepresentable, "kappa(" + q.label + ") is not representable");
    std::vector<Poly> ideal = contracted_ideal(phi, q);
    auto x = s.point_of_ideal(ideal);
    return Preimage{x ? *x : fallback_point(s, ideal, false), std::nullopt};
  }
  const Domain& K = *q.residue;
  SpecCatalogue t = SpecCatalogue::recognize(phi.target());
  std::vector<Scalar> u;
  for (auto& img : phi.images()) u.push_back(t.evaluate(img, q));

  const PolyRing& r = s.ring().ring();
  const Domain& k = r.domain();
  const Integer p = K.characteristic();
  std::optional<SpecPoint> x;
  switch (s.base_family()) {
    case SpecFamily::Field:
      x = s.points().front();
      break;
    case SpecFamily::Integers:
    case SpecFamily::IntegersMod:
      x = p == 0 ? s.find("eta") : s.point_of_ideal({Poly::constant(r, k.from_integer(p))});
      break;
    case SpecFamily::IntegersLine: {
      std::vector<Poly> ideal;
      if (p != 0) ideal.push_back(Poly::constant(r, k.from_integer(p)));
      for (auto& g : kernel_over_prime_field(r.vars(), K, u)) ideal.push_back(to_integer_poly(g, r));
      x = s.point_of_ideal(ideal);
      if (!x) x = fallback_point(s, ideal, p != 0);
      break;
    }
    case SpecFamily::FieldLine:
    case SpecFamily::FieldPlane: {
      std::vector<Poly> ideal;
      if (k == K) {
        for (std::size_t i = 0; i < u.size(); ++i) ideal.push_back(Poly::variable(r, i) - Poly::constant(r, u[i]));
      } else if (k == prime_field_of(K)) {
        for (auto& g : kernel_over_prime_field(r.vars(), K, u)) ideal.push_back(map_coefficients(g, r));
      } else {
        fail(ErrorCode::Unsupported, "preimages over " + k.name() + " need kappa(q) = " + k.name());
      }
      x = s.point_of_ideal(ideal);
      if (!x) x = fallback_point(s, ideal, K.kind() != DomainKind::FunctionField);
      break;
    }
    default:
      fail(ErrorCode::NotCatalogued, "preimages in " + s.ring().to_string() + " are not computed");
  }
  if (!x) fail(ErrorCode::InvalidArgument, "no point of " + s.ring().to_string() + " lies under " + q.label);
  Preimage out{*x, std::nullopt};
  if (x->residue && x->residue->has_generator()) {
    Scalar g = x->residue->generator();
    for (std::size_t i = 0; i < x->images.size(); ++i)
      if (x->images[i] == g) out.generator_image = u[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fibers

namespace {

// Drops every variable pinned to a constant by a relation v - c.
PresentedAlgebra drop_pinned(PolyRing r, std::vector<Poly> rels) {
  for (;;) {
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Poly& g) { return g.is_zero(); }), rels.end());
    for (auto& g : rels)
      if (g.is_constant()) return PresentedAlgebra(r, {Poly::from_int(r, 1)});
    std::optional<std::size_t> pinned;
    Scalar value;
    for (auto& g : rels) {
      auto sup = g.support();
      if (g.total_degree() != 1 || sup.size() != 1) continue;
      Monomial m(r.nvars(), 0);
      m[sup[0]] = 1;
      pinned = sup[0];
      value = r.domain().neg(r.domain().div(g.constant_coeff(), g.coeff(m)));
      break;
    }
    if (!pinned) return PresentedAlgebra(r, rels);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < r.nvars(); ++i)
      if (i != *pinned) vars.push_back(r.vars()[i]);
    PolyRing r2(r.domain(), vars);
    std::vector<Poly> images;
    for (std::size_t i = 0, j = 0; i < r.nvars(); ++i)
      images.push_back(i == *pinned ? Poly::constant(r2, value) : Poly::variable(r2, j++));
    for (auto& g : rels) g = substitute(g, r2, images);
    r = r2;
  }
}

}  // namespace

FiberDescription fiber(const RingMorphism& phi, const SpecPoint& x, const SpecBound& bound) {
  const PresentedAlgebra& b = phi.target();
  const PresentedAlgebra& a = phi.source();
  std::optional<PresentedAlgebra> ring;
  std::string method;
  if (x.residue && x.residue->is_field() && Domain::has_canonical_map(b.base(), *x.residue)) {
    const Domain& K = *x.residue;
    PolyRing r(K, b.vars());
    std::vector<Poly> rels;
    for (auto& g : b.relations()) rels.push_back(map_coefficients(g, r));
    for (std::size_t i = 0; i < a.vars().size(); ++i)
      rels.push_back(map_coefficients(phi.images()[i], r) - Poly::constant(r, x.images.at(i)));
    ring = drop_pinned(r, rels);
    method = "residue field";
  } else if (x.closed) {
    std::vector<Poly> rels = b.relations();
    for (auto& g : x.ideal) rels.push_back(phi.apply(g));
    ring = PresentedAlgebra(b.ring(), rels);
    method = "closed point";
  } else {
    fail(ErrorCode::ResidueFieldNotRepresentable, "the fiber over " + x.label + " needs kappa = " + x.residue_name);
  }
  FiberDescription out{x, *ring, method, std::nullopt, false};
  if (is_zero_ring(*ring)) {
    out.points = std::vector<SpecPoint>{};
    out.complete = true;
    return out;
  }
  try {
    SpecCatalogue c = SpecCatalogue::recognize(*ring);
    out.points = c.points(bound);
    out.complete = c.finite_spectrum();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCatalogued && e.code() != ErrorCode::FactorizationUnavailable) throw;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Going up

std::string GoingUpReport::to_string() const {
  std::string s;
  for (auto& r : rows)
    s += r.source_label + " <- " + (r.above ? *r.above : std::string("(none)")) + " [" + std::to_string(r.fiber_points) + "]\n";
  return s + (surjective_on_sample ? "surjective on the sample" : "not surjective on the sample");
}

GoingUpReport going_up_check(const RingMorphism& phi, const std::vector<IntegralEquation>& equations, long prime_bound) {
  const PresentedAlgebra& b = phi.target();
  const std::size_t n = b.vars().size();
  std::vector<bool> covered(n, false);
  for (auto& eq : equations) {
    if (eq.target_var >= n) fail(ErrorCode::InvalidArgument, "no target variable with that index");
    Poly y = Poly::variable(b.ring(), eq.target_var);
    Poly lhs = y.pow(static_cast<unsigned>(eq.lower_coeffs.size()));
    for (std::size_t k = 0; k < eq.lower_coeffs.size(); ++k) lhs = lhs + phi.apply(eq.lower_coeffs[k]) * y.pow(static_cast<unsigned>(k));
    bool holds = false;
    try {
      holds = b.is_zero_element(lhs);
    } catch (const Error&) {
      fail(ErrorCode::IntegralityNotWitnessed, "cannot reduce " + lhs.to_string() + " in " + b.to_string());
    }
    if (!holds) fail(ErrorCode::IntegralityNotWitnessed, lhs.to_string() + " is not zero in " + b.to_string());
    covered[eq.target_var] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!covered[j]) fail(ErrorCode::IntegralityNotWitnessed, "no monic equation for " + b.vars()[j]);

  GoingUpReport report;
  SpecBound bound{prime_bound, 1, 1};
  SpecCatalogue s = SpecCatalogue::recognize(phi.source());
  for (auto& x : s.points(bound)) {
    GoingUpRow row{x.label, std::nullopt, 0};
    FiberDescription f = fiber(phi, x, bound);
    if (f.points && !f.points->empty()) {
      row.fiber_points = f.points->size();
      row.above = f.points->front().label;
    } else {
      report.surjective_on_sample = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace schemex
