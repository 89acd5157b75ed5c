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

#include "schemex/spectrum.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <set>

namespace schemex {

std::string_view family_name(SpecFamily f) {
  switch (f) {
    case SpecFamily::Field: return "field";
    case SpecFamily::Integers: return "ZZ";
    case SpecFamily::IntegersMod: return "ZZ/n";
    case SpecFamily::FieldLine: return "k[T]";
    case SpecFamily::IntegersLine: return "ZZ[T]";
    case SpecFamily::FieldPlane: return "k[S,T]";
    case SpecFamily::Quotient: return "quotient";
    case SpecFamily::Localization: return "localization";
    case SpecFamily::Product: return "product";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Residue field helpers

namespace {

bool is_prime_field(const Domain& d) {
  return d.kind() == DomainKind::Rationals || d.kind() == DomainKind::PrimeField;
}

Domain prime_field_of(const Domain& d) {
  return d.characteristic() == 0 ? Domain::rationals() : Domain::prime_field(d.characteristic());
}

DenseVec dense_of(const UniPoly& u) {
  DenseVec v;
  for (auto& c : u.c) v.push_back(u.dom.as_rational(c));
  return v;
}

bool is_constant_scalar(const Domain& k, const Scalar& a) {
  (void)k;
  return a.num.size() <= 1 && a.den.size() <= 1;
}

}  // namespace

std::optional<UniPoly> minimal_polynomial(const Domain& k, const Scalar& a) {
  switch (k.kind()) {
    case DomainKind::Rationals:
    case DomainKind::PrimeField:
      return UniPoly(k, {k.neg(a), k.one()});
    case DomainKind::FunctionField: {
      if (!is_constant_scalar(k, a)) return std::nullopt;
      Domain c = prime_field_of(k);
      Rational v = a.num.empty() ? Rational(0) : a.num[0];
      if (!a.den.empty()) v /= a.den[0];
      return UniPoly(c, {c.neg(c.from_rational(v)), c.one()});
    }
    case DomainKind::NumberField:
    case DomainKind::FiniteField: {
      Domain f = prime_field_of(k);
      const std::size_t d = k.extension_degree();
      std::vector<std::vector<Scalar>> cols;
      Scalar p = k.one();
      for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Scalar> col(d, f.zero());
        for (std::size_t j = 0; j < p.num.size(); ++j) col[j] = f.from_rational(p.num[j]);
        cols.push_back(col);
        auto dep = linalg::first_dependency(f, cols);
        if (dep) return UniPoly(f, *dep);
        p = k.mul(p, a);
      }
      fail(ErrorCode::InvalidArgument, "no dependency among powers");
    }
    default:
      fail(ErrorCode::UnsupportedDomain, "minimal polynomials need a field, got " + k.name());
  }
}

Scalar embed_residue(const Domain& from, const Scalar& c, const Domain& to, const std::optional<Scalar>& gen) {
  if (!gen && from == to) return c;
  if (!from.has_generator()) return to.coerce(from, c);
  if (!gen) fail(ErrorCode::InvalidArgument, "embedding " + from.name() + " needs the image of its generator");
  auto eval = [&](const DenseVec& v) {
    Scalar acc = to.zero();
    for (std::size_t j = v.size(); j-- > 0;) acc = to.add(to.mul(acc, *gen), to.from_rational(v[j]));
    return acc;
  };
  Scalar n = eval(c.num);
  if (c.den.empty()) return n;
  return to.div(n, eval(c.den));
}

// ---------------------------------------------------------------------------
// Point constructors

namespace {

Poly uni_to_poly(const UniPoly& u, const PolyRing& r, std::size_t var) {
  // coefficients may live in a smaller domain than r's
  Poly out(r);
  for (std::size_t j = 0; j < u.c.size(); ++j) {
    if (u.dom.is_zero(u.c[j])) continue;
    Monomial m(r.nvars(), 0);
    m[var] = static_cast<unsigned>(j);
    out = out + Poly::monomial(r, m, r.domain().coerce(u.dom, u.c[j]));
  }
  return out;
}

UniPoly lift_mod_p(const UniPoly& u) {
  // GF(p) coefficients to ZZ representatives in [0, p)
  Domain z = Domain::integers();
  UniPoly out(z);
  for (auto& c : u.c) out.c.push_back(z.from_integer(u.dom.as_integer(c)));
  out.trim();
  return out;
}

SpecPoint generic_point(const PresentedAlgebra& a, SpecFamily fam) {
  SpecPoint x;
  x.label = "eta";
  x.closed = false;
  const Domain& d = a.base();
  switch (fam) {
    case SpecFamily::Field:
      x.label = "(0)";
      x.closed = true;
      x.residue = d;
      break;
    case SpecFamily::Integers:
      x.residue = Domain::rationals();
      break;
    case SpecFamily::FieldLine:
    case SpecFamily::IntegersLine: {
      const std::string& t = a.vars()[0];
      Domain k = fam == SpecFamily::IntegersLine ? Domain::rationals() : d;
      if (is_prime_field(k)) {
        Domain kt = Domain::function_field(k.characteristic(), t);
        x.residue = kt;
        x.images = {kt.generator()};
      }
      x.residue_name = k.name() + "(" + t + ")";
      break;
    }
    case SpecFamily::FieldPlane:
      x.residue_name = d.name() + "(" + a.vars()[0] + "," + a.vars()[1] + ")";
      break;
    default:
      break;
  }
  if (x.residue && x.residue_name.empty()) x.residue_name = x.residue->name();
  return x;
}

SpecPoint integer_prime(const PresentedAlgebra& a, const Integer& p) {
  SpecPoint x;
  x.label = "x_" + p.get_str();
  x.ideal = {Poly::constant(a.ring(), a.base().from_integer(p))};
  x.residue = Domain::prime_field(p);
  x.residue_name = x.residue->name();
  x.closed = true;
  return x;
}

// Closed point x_P of k[T], P monic irreducible over k.
SpecPoint line_point(const PresentedAlgebra& a, const UniPoly& P) {
  const std::string& t = a.vars()[0];
  const Domain& k = a.base();
  SpecPoint x;
  x.label = "x_{" + P.to_string(t) + "}";
  x.ideal = {uni_to_poly(P, a.ring(), 0)};
  x.closed = true;
  if (P.degree() == 1) {
    x.residue = k;
    x.images = {k.neg(P.c[0])};
  } else if (is_prime_field(k)) {
    DenseVec m = dense_of(P);
    Domain K = k.kind() == DomainKind::Rationals ? Domain::number_field(m, t) : Domain::finite_field(k.characteristic(), m, t);
    x.residue = K;
    x.images = {K.generator()};
  }
  x.residue_name = x.residue ? x.residue->name() : k.name() + "[" + t + "]/(" + P.to_string(t) + ")";
  return x;
}

// Horizontal prime (P) of ZZ[T], P primitive irreducible of positive degree.
SpecPoint zt_horizontal(const PresentedAlgebra& a, const UniPoly& P) {
  const std::string& t = a.vars()[0];
  SpecPoint x;
  x.label = "y_{eta," + P.to_string(t) + "}";
  x.ideal = {uni_to_poly(P, a.ring(), 0)};
  x.closed = false;
  Domain q = Domain::rationals();
  UniPoly Pq(q);
  for (auto& c : P.c) Pq.c.push_back(q.coerce(P.dom, c));
  Pq = monic(Pq);
  if (Pq.degree() == 1) {
    x.residue = q;
    x.images = {q.neg(Pq.c[0])};
  } else {
    Domain K = Domain::number_field(dense_of(Pq), t);
    x.residue = K;
    x.images = {K.generator()};
  }
  x.residue_name = x.residue->name();
  return x;
}

SpecPoint zt_vertical(const PresentedAlgebra& a, const Integer& p) {
  const std::string& t = a.vars()[0];
  SpecPoint x;
  x.label = "y_{" + p.get_str() + ",eta}";
  x.ideal = {Poly::constant(a.ring(), a.base().from_integer(p))};
  x.closed = false;
  Domain kt = Domain::function_field(p, t);
  x.residue = kt;
  x.images = {kt.generator()};
  x.residue_name = kt.name();
  return x;
}

// Closed point (p, P) of ZZ[T], P monic irreducible over GF(p).
SpecPoint zt_closed(const PresentedAlgebra& a, const Integer& p, const UniPoly& P) {
  const std::string& t = a.vars()[0];
  SpecPoint x;
  x.label = "y_{" + p.get_str() + "," + P.to_string(t) + "}";
  x.ideal = {Poly::constant(a.ring(), a.base().from_integer(p)), uni_to_poly(lift_mod_p(P), a.ring(), 0)};
  x.closed = true;
  Domain fp = Domain::prime_field(p);
  if (P.degree() == 1) {
    x.residue = fp;
    x.images = {fp.neg(P.c[0])};
  } else {
    Domain K = Domain::finite_field(p, dense_of(P), t);
    x.residue = K;
    x.images = {K.generator()};
  }
  x.residue_name = x.residue->name();
  return x;
}

SpecPoint plane_rational_point(const PresentedAlgebra& a, const Scalar& s, const Scalar& t) {
  const Domain& k = a.base();
  const PolyRing& r = a.ring();
  Poly S = Poly::variable(r, 0), T = Poly::variable(r, 1);
  Poly g1 = S - Poly::constant(r, s), g2 = T - Poly::constant(r, t);
  SpecPoint x;
  x.label = "x_{" + g1.to_string() + ", " + g2.to_string() + "}";
  x.ideal = {g1, g2};
  x.closed = true;
  x.residue = k;
  x.images = {s, t};
  x.residue_name = k.name();
  return x;
}

// Height-one prime (P) of k[S,T], P irreducible.
SpecPoint plane_curve(const PresentedAlgebra& a, const Poly& P) {
  const Domain& k = a.base();
  const PolyRing& r = a.ring();
  SpecPoint x;
  x.label = "x_{" + P.to_string() + "}";
  x.ideal = {P};
  x.closed = false;
  // kappa is representable when P is linear in one variable alone.
  auto sup = P.support();
  if (is_prime_field(k) && sup.size() == 1 && P.total_degree() == 1) {
    std::size_t fixed = sup[0], free = 1 - sup[0];
    Domain kf = Domain::function_field(k.characteristic(), r.vars()[free]);
    x.residue = kf;
    x.images.assign(2, kf.zero());
    Scalar root = k.neg(k.div(P.constant_coeff(), P.lead().c));
    x.images[fixed] = kf.coerce(k, root);
    x.images[free] = kf.generator();
    x.residue_name = kf.name();
  } else {
    x.residue_name = "Frac(" + r.name() + "/(" + P.to_string() + "))";
  }
  return x;
}

// Monic polynomials over k of degree d: all of them for finite k, integer
// coefficients in [-h, h] otherwise.
std::vector<UniPoly> monic_candidates(const Domain& k, unsigned d, long h) {
  std::vector<UniPoly> out;
  std::vector<Scalar> vals;
  if (k.is_finite()) {
    vals = k.elements();
  } else {
    for (long v = -h; v <= h; ++v) vals.push_back(k.from_int(v));
  }
  std::size_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= vals.size();
    if (total > 200000) fail(ErrorCode::Unsupported, "enumeration bound too large for " + k.name());
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Scalar> c;
    std::size_t rest = idx;
    for (unsigned i = 0; i < d; ++i) {
      c.push_back(vals[rest % vals.size()]);
      rest /= vals.size();
    }
    c.push_back(k.one());
    out.emplace_back(k, c);
  }
  return out;
}

std::vector<UniPoly> irreducible_monic(const Domain& k, unsigned maxdeg, long h) {
  std::vector<UniPoly> out;
  for (unsigned d = 1; d <= maxdeg; ++d)
    for (auto& u : monic_candidates(k, d, h))
      if (d == 1 || is_irreducible(u)) out.push_back(u);
  std::stable_sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
  return out;
}

// Primitive irreducible P in ZZ[T] with positive leading coefficient.
std::vector<UniPoly> horizontal_candidates(unsigned maxdeg, long h) {
  Domain z = Domain::integers();
  std::vector<UniPoly> out;
  for (unsigned d = 1; d <= maxdeg; ++d) {
    std::vector<long> c(d + 1, -h);
    for (;;) {
      if (c[d] > 0) {
        Integer g = 0;
        for (long v : c) g = gcd(g, Integer(v));
        if (g == 1) {
          UniPoly u = UniPoly::from_ints(z, c);
          UniPoly uq = UniPoly::from_ints(Domain::rationals(), c);
          if (u.degree() == static_cast<long>(d) && (d == 1 || is_irreducible(uq))) out.push_back(u);
        }
      }
      std::size_t i = 0;
      while (i <= d && ++c[i] > h) c[i++] = -h;
      if (i > d) break;
    }
  }
  return out;
}

// Distinct primitive irreducible factors over ZZ of a primitive f in ZZ[T].
std::vector<UniPoly> primitive_factors(const UniPoly& f) {
  Domain q = Domain::rationals(), z = Domain::integers();
  UniPoly fq(q);
  for (auto& c : f.c) fq.c.push_back(q.coerce(z, c));
  std::vector<UniPoly> out;
  if (fq.degree() < 1) return out;
  for (auto& [g, e] : factor_univariate(fq).factors) {
    Integer den = 1;
    for (auto& c : g.c) den = lcm(den, Integer(q.as_rational(c).get_den()));
    std::vector<Integer> ints;
    Integer cont = 0;
    for (auto& c : g.c) {
      Integer v = Integer(q.as_rational(c) * den);
      ints.push_back(v);
      cont = gcd(cont, v);
    }
    UniPoly u(z);
    for (auto& v : ints) u.c.push_back(z.from_integer(v / cont));
    u.trim();
    out.push_back(u);
  }
  return out;
}

UniPoly to_fp(const Poly& f, const Integer& p) {
  Domain fp = Domain::prime_field(p);
  UniPoly u = to_univariate(f, 0);
  UniPoly out(fp);
  for (auto& c : u.c) out.c.push_back(fp.coerce(u.dom, c));
  out.trim();
  return out;
}

Integer integer_gcd_of(const std::vector<Poly>& gens, const Domain& d) {
  Integer g = 0;
  for (auto& f : gens) g = gcd(g, d.as_integer(f.constant_coeff()));
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalogue

SpecCatalogue SpecCatalogue::recognize(const PresentedAlgebra& a) {
  const Domain& d = a.base();
  const std::size_t n = a.ring().nvars();
  auto fam = [&]() -> std::optional<SpecFamily> {
    if (n == 0) {
      if (d.is_field()) return SpecFamily::Field;
      if (d.kind() == DomainKind::Integers) return SpecFamily::Integers;
      if (d.kind() == DomainKind::IntegersMod) return SpecFamily::IntegersMod;
    }
    if (n == 1 && d.is_field()) return SpecFamily::FieldLine;
    if (n == 1 && d.kind() == DomainKind::Integers) return SpecFamily::IntegersLine;
    if (n == 2 && d.is_field()) return SpecFamily::FieldPlane;
    return std::nullopt;
  }();
  if (!fam) fail(ErrorCode::NotCatalogued, a.to_string() + " is not in the catalogue");
  if (a.relations().empty()) return SpecCatalogue(*fam, a);
  if (*fam == SpecFamily::IntegersMod)
    fail(ErrorCode::NotCatalogued, "quotients of ZZ/n are presented as ZZ/m directly");
  SpecCatalogue q(SpecFamily::Quotient, a);
  q.parent_ = std::make_shared<SpecCatalogue>(SpecCatalogue(*fam, PresentedAlgebra(a.ring(), {})));
  return q;
}

SpecCatalogue SpecCatalogue::localization(const SpecCatalogue& parent, const Poly& f) {
  SpecCatalogue s(SpecFamily::Localization, localize(parent.ring(), f));
  s.parent_ = std::make_shared<SpecCatalogue>(parent);
  s.inverted_ = f;
  return s;
}

SpecCatalogue SpecCatalogue::product(const std::vector<SpecCatalogue>& parts) {
  std::vector<PresentedAlgebra> rings;
  for (auto& p : parts) rings.push_back(p.ring());
  SpecCatalogue s(SpecFamily::Product, schemex::product(rings));
  s.parts_ = parts;
  return s;
}

SpecFamily SpecCatalogue::base_family() const { return family_ == SpecFamily::Quotient ? parent_->family_ : family_; }

bool SpecCatalogue::finite_spectrum() const {
  switch (family_) {
    case SpecFamily::Field:
    case SpecFamily::IntegersMod:
      return true;
    case SpecFamily::Quotient: {
      SpecFamily b = parent_->family_;
      if (b == SpecFamily::Field || b == SpecFamily::Integers) return true;
      if (b == SpecFamily::FieldLine) {
        UniPoly g(ring_.base());
        for (auto& r : ring_.relations()) g = gcd(g, to_univariate(r, 0));
        return !g.is_zero();
      }
      return false;
    }
    case SpecFamily::Localization:
      return parent_->finite_spectrum();
    case SpecFamily::Product:
      return std::all_of(parts_.begin(), parts_.end(), [](const SpecCatalogue& p) { return p.finite_spectrum(); });
    default:
      return false;
  }
}

std::vector<SpecPoint> SpecCatalogue::base_points(const SpecBound& b) const {
  const PresentedAlgebra& a = ring_;
  const Domain& d = a.base();
  std::vector<SpecPoint> out;
  switch (family_) {
    case SpecFamily::Field:
      out.push_back(generic_point(a, family_));
      break;
    case SpecFamily::Integers:
      out.push_back(generic_point(a, family_));
      for (auto& p : primes_up_to(b.primes)) out.push_back(integer_prime(a, p));
      break;
    case SpecFamily::IntegersMod:
      for (auto& [p, e] : factor_integer(d.modulus())) out.push_back(integer_prime(a, p));
      break;
    case SpecFamily::FieldLine:
      out.push_back(generic_point(a, family_));
      for (auto& P : irreducible_monic(d, std::max(1u, b.degree), b.height)) out.push_back(line_point(a, P));
      break;
    case SpecFamily::IntegersLine:
      out.push_back(generic_point(a, family_));
      for (auto& P : horizontal_candidates(std::max(1u, b.degree), b.height)) out.push_back(zt_horizontal(a, P));
      for (auto& p : primes_up_to(b.primes)) {
        out.push_back(zt_vertical(a, p));
        for (auto& P : irreducible_monic(Domain::prime_field(p), std::max(1u, b.degree), 0)) out.push_back(zt_closed(a, p, P));
      }
      break;
    case SpecFamily::FieldPlane: {
      out.push_back(generic_point(a, family_));
      std::vector<Scalar> vals;
      if (d.is_finite()) {
        vals = d.elements();
      } else {
        for (long v = -b.height; v <= b.height; ++v) vals.push_back(d.from_int(v));
      }
      const PolyRing& r = a.ring();
      for (std::size_t v = 0; v < 2; ++v)
        for (auto& c : vals) out.push_back(plane_curve(a, Poly::variable(r, v) - Poly::constant(r, c)));
      for (auto& s : vals)
        for (auto& t : vals) out.push_back(plane_rational_point(a, s, t));
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<SpecPoint> SpecCatalogue::component_points() const {
  // Points of V(relations) that a bounded enumeration of the ambient may miss.
  std::vector<SpecPoint> out;
  const PresentedAlgebra& a = ring_;
  const Domain& d = a.base();
  const auto& rels = a.relations();
  switch (parent_->family_) {
    case SpecFamily::Integers: {
      Integer g = integer_gcd_of(rels, d);
      if (g != 0)
        for (auto& [p, e] : factor_integer(abs(g))) out.push_back(integer_prime(a, p));
      break;
    }
    case SpecFamily::FieldLine: {
      UniPoly g(d);
      for (auto& r : rels) g = gcd(g, to_univariate(r, 0));
      if (!g.is_zero() && g.degree() > 0)
        for (auto& [P, e] : factor_univariate(g).factors) out.push_back(line_point(a, P));
      break;
    }
    case SpecFamily::IntegersLine: {
      Integer cont = 0;
      for (auto& r : rels) cont = gcd(cont, d.as_integer(content_primitive(r).content.constant_coeff()));
      if (cont > 1)
        for (auto& [p, e] : factor_integer(cont)) out.push_back(zt_vertical(a, p));
      // horizontal components: factors of the gcd over QQ
      PolyRing q = a.ring().with_domain(Domain::rationals());
      UniPoly g(Domain::rationals());
      for (auto& r : rels) g = gcd(g, to_univariate(map_coefficients(r, q), 0));
      if (g.degree() >= 1) {
        Integer den = 1;
        for (auto& c : g.c) den = lcm(den, Integer(g.dom.as_rational(c).get_den()));
        UniPoly gz(Domain::integers());
        for (auto& c : g.c) gz.c.push_back(Domain::integers().from_integer(Integer(g.dom.as_rational(c) * den)));
        gz.trim();
        for (auto& P : primitive_factors(gz)) {
          SpecPoint x = zt_horizontal(a, P);
          bool all = true;
          for (auto& r : rels) all = all && parent_->vanishes(r, x);
          if (all) out.push_back(x);
        }
      } else if (!g.is_zero()) {
        // 1 in the QQ-ideal: the closed points over the primes dividing it
        PresentedAlgebra aq(q, [&] {
          std::vector<Poly> v;
          for (auto& r : rels) v.push_back(map_coefficients(r, q));
          return v;
        }());
        auto cof = lift(q, aq.relations(), Poly::from_int(q, 1));
        Integer D = 1;
        if (cof)
          for (auto& c : *cof)
            for (auto& t : c.terms()) D = lcm(D, Integer(q.domain().as_rational(t.c).get_den()));
        for (auto& [p, e] : factor_integer(D)) {
          UniPoly gp(Domain::prime_field(p));
          for (auto& r : rels) gp = gcd(gp, to_fp(r, p));
          if (gp.is_zero()) {
            out.push_back(zt_vertical(a, p));
          } else if (gp.degree() > 0) {
            for (auto& [P, e2] : factor_univariate(gp).factors) out.push_back(zt_closed(a, p, P));
          }
        }
      }
      break;
    }
    case SpecFamily::FieldPlane:
      if (rels.size() == 1 && (d.kind() == DomainKind::Rationals || d.kind() == DomainKind::PrimeField))
        for (auto& [P, e] : factor_bivariate(rels[0]))
          if (P.total_degree() > 0) out.push_back(plane_curve(a, P));
      break;
    default:
      break;
  }
  return out;
}

std::vector<SpecPoint> SpecCatalogue::points(const SpecBound& b) const {
  switch (family_) {
    case SpecFamily::Quotient: {
      std::vector<SpecPoint> out;
      std::set<std::string> seen;
      auto keep = [&](SpecPoint x) {
        for (auto& r : ring_.relations())
          if (!parent_->vanishes(r, x)) return;
        if (seen.insert(x.label).second) out.push_back(std::move(x));
      };
      // Components first: for finite spectra they are the complete list.
      for (auto& x : component_points()) keep(x);
      if (!finite_spectrum() || parent_->family_ == SpecFamily::Field)
        for (auto& x : parent_->points(b)) keep(x);
      return out;
    }
    case SpecFamily::Localization: {
      std::vector<SpecPoint> out;
      const PolyRing& r = ring_.ring();
      for (auto& x : parent_->points(b)) {
        if (parent_->vanishes(*inverted_, x)) continue;
        SpecPoint y = x;
        for (auto& g : y.ideal) g = embed(g, r);
        if (y.residue) y.images.push_back(y.residue->inv(parent_->evaluate(*inverted_, x)));
        out.push_back(std::move(y));
      }
      return out;
    }
    case SpecFamily::Product: {
      std::vector<SpecPoint> out;
      const PolyRing& r = ring_.ring();
      const std::size_t nparts = parts_.size();
      std::size_t offset = nparts;
      for (std::size_t k = 0; k < nparts; ++k) {
        const std::size_t nv = parts_[k].ring_.ring().nvars();
        std::vector<Poly> imgs;
        for (std::size_t i = 0; i < nv; ++i) imgs.push_back(Poly::variable(r, offset + i));
        for (auto& x : parts_[k].points(b)) {
          SpecPoint y = x;
          y.label = "f" + std::to_string(k + 1) + ":" + x.label;
          y.ideal.clear();
          y.ideal.push_back(Poly::from_int(r, 1) - Poly::variable(r, k));
          for (auto& g : x.ideal) y.ideal.push_back(substitute(g, r, imgs));
          if (x.residue) {
            const Domain& K = *x.residue;
            y.images.assign(r.nvars(), K.zero());
            y.images[k] = K.one();
            for (std::size_t i = 0; i < nv; ++i) y.images[offset + i] = x.images[i];
          }
          out.push_back(std::move(y));
        }
        offset += nv;
      }
      return out;
    }
    default:
      return base_points(b);
  }
}

Scalar SpecCatalogue::evaluate(const Poly& f, const SpecPoint& x) const {
  if (f.ring() != ring_.ring()) fail(ErrorCode::InvalidArgument, f.to_string() + " is not in " + ring_.to_string());
  if (!x.residue)
    fail(ErrorCode::ResidueFieldNotRepresentable, "the residue field " + x.residue_name + " is not representable");
  const Domain& K = *x.residue;
  Scalar acc = K.zero();
  for (auto& t : f.terms()) {
    Scalar v = K.coerce(f.domain(), t.c);
    for (std::size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i]) v = K.mul(v, K.pow(x.images.at(i), t.m[i]));
    acc = K.add(acc, v);
  }
  return acc;
}

bool SpecCatalogue::vanishes(const Poly& f, const SpecPoint& x) const {
  if (x.residue) return x.residue->is_zero(evaluate(f, x));
  if (!ring_.base().is_field()) fail(ErrorCode::Undecidable, "membership in " + x.label + " is not decided");
  std::vector<Poly> gens = x.ideal;
  gens.insert(gens.end(), ring_.relations().begin(), ring_.relations().end());
  return groebner(ring_.ring(), gens).contains(f);
}

std::optional<SpecPoint> SpecCatalogue::find(const std::string& label, const SpecBound& bound) const {
  for (auto& x : points(bound))
    if (x.label == label) return x;
  return std::nullopt;
}

std::optional<SpecPoint> SpecCatalogue::point_of_ideal(const std::vector<Poly>& ideal) const {
  std::vector<Poly> gens;
  for (auto& g : ideal)
    if (!g.is_zero()) gens.push_back(g);
  if (family_ == SpecFamily::Quotient) {
    auto x = parent_->point_of_ideal(gens);
    if (!x) return std::nullopt;
    for (auto& r : ring_.relations())
      if (!parent_->vanishes(r, *x)) return std::nullopt;
    return x;
  }
  if (family_ == SpecFamily::Localization || family_ == SpecFamily::Product) {
    ZariskiClosed z{*this, gens};
    for (auto& x : points(SpecBound{}))
      if (same_closed_set(z, closure(*this, x))) return x;
    return std::nullopt;
  }
  const PresentedAlgebra& a = ring_;
  const Domain& d = a.base();
  if (gens.empty()) {
    if (family_ == SpecFamily::IntegersMod) return std::nullopt;
    return generic_point(a, family_);
  }
  switch (family_) {
    case SpecFamily::Integers:
    case SpecFamily::IntegersMod: {
      Integer g = integer_gcd_of(gens, d);
      if (family_ == SpecFamily::IntegersMod) g = gcd(g, d.modulus());
      if (g > 1 && is_prime(g)) return integer_prime(a, g);
      return std::nullopt;
    }
    case SpecFamily::FieldLine: {
      UniPoly g(d);
      for (auto& f : gens) g = gcd(g, to_univariate(f, 0));
      if (g.degree() >= 1 && is_irreducible(g)) return line_point(a, monic(g));
      return std::nullopt;
    }
    case SpecFamily::IntegersLine: {
      std::vector<Poly> consts, polys;
      for (auto& f : gens) (f.is_constant() ? consts : polys).push_back(f);
      if (!consts.empty()) {
        Integer p = abs(integer_gcd_of(consts, d));
        if (!is_prime(p)) return std::nullopt;
        UniPoly g(Domain::prime_field(p));
        for (auto& f : polys) g = gcd(g, to_fp(f, p));
        if (g.is_zero()) return zt_vertical(a, p);
        if (g.degree() >= 1 && is_irreducible(g)) return zt_closed(a, p, monic(g));
        return std::nullopt;
      }
      if (polys.size() != 1) return std::nullopt;
      auto cp = content_primitive(polys[0]);
      if (cp.content.to_string() != "1" && cp.content.to_string() != "-1") return std::nullopt;
      UniPoly u = to_univariate(cp.primitive, 0);
      if (u.degree() < 1) return std::nullopt;
      if (d.as_integer(u.lead()) < 0) u = -u;
      auto fs = primitive_factors(u);
      if (fs.size() != 1 || fs[0] != u) return std::nullopt;
      return zt_horizontal(a, u);
    }
    case SpecFamily::FieldPlane: {
      if (gens.size() == 1) {
        auto fs = factor_bivariate(gens[0]);
        if (fs.size() == 1 && fs[0].second == 1 && fs[0].first.total_degree() > 0) return plane_curve(a, fs[0].first);
        return std::nullopt;
      }
      GroebnerBasis gb = groebner(a.ring(), gens);
      auto sm = gb.standard_monomials();
      if (!sm || sm->size() != 1) return std::nullopt;
      // quotient is k: a rational point
      Poly S = Poly::variable(a.ring(), 0), T = Poly::variable(a.ring(), 1);
      return plane_rational_point(a, gb.reduce(S).constant_coeff(), gb.reduce(T).constant_coeff());
    }
    case SpecFamily::Field:
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Closed sets

bool ZariskiClosed::contains(const SpecPoint& x) const {
  for (auto& g : ideal)
    if (!owner.vanishes(g, x)) return false;
  return true;
}

std::vector<SpecPoint> ZariskiClosed::points(const SpecBound& bound) const {
  std::vector<SpecPoint> out;
  for (auto& x : owner.points(bound))
    if (contains(x)) out.push_back(x);
  return out;
}

std::string ZariskiClosed::to_string() const {
  if (ideal.empty()) return "V(0)";
  std::string s = "V(";
  for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? ", " : "") + ideal[i].to_string();
  return s + ")";
}

ZariskiClosed closure(const SpecCatalogue& s, const SpecPoint& x) { return ZariskiClosed{s, x.ideal}; }

bool same_closed_set(const ZariskiClosed& a, const ZariskiClosed& b) {
  const PresentedAlgebra& r = a.owner.ring();
  for (auto& f : a.ideal)
    if (!radical_membership(Ideal{r, b.ideal}, f)) return false;
  for (auto& g : b.ideal)
    if (!radical_membership(Ideal{r, a.ideal}, g)) return false;
  return true;
}

std::optional<SpecPoint> irreducible_generic_point(const ZariskiClosed& z) {
  const SpecCatalogue& s = z.owner;
  const PresentedAlgebra& a = s.ring();
  const Domain& d = a.base();
  std::vector<Poly> gens;
  for (auto& g : a.relations()) gens.push_back(g);
  for (auto& g : z.ideal)
    if (!g.is_zero()) gens.push_back(g);
  SpecFamily fam = s.base_family();
  if (s.family() == SpecFamily::Localization || s.family() == SpecFamily::Product)
    fail(ErrorCode::Undecidable, "irreducibility is not decided on " + std::string(family_name(s.family())) + " catalogues");
  auto as_point = [&](const std::vector<Poly>& ideal) { return s.point_of_ideal(ideal); };
  switch (fam) {
    case SpecFamily::Field:
      if (gens.empty()) return as_point({});
      return std::nullopt;
    case SpecFamily::Integers:
    case SpecFamily::IntegersMod: {
      Integer g = integer_gcd_of(gens, d);
      if (fam == SpecFamily::IntegersMod) g = gcd(g, d.modulus());
      if (g == 0) return as_point({});
      auto f = factor_integer(abs(g));
      if (f.size() != 1) return std::nullopt;
      return as_point({Poly::constant(a.ring(), d.from_integer(f[0].first))});
    }
    case SpecFamily::FieldLine: {
      UniPoly g(d);
      for (auto& f : gens) g = gcd(g, to_univariate(f, 0));
      if (g.is_zero()) return as_point({});
      if (g.degree() == 0) return std::nullopt;
      auto f = factor_univariate(g);
      if (f.factors.size() != 1) return std::nullopt;
      return as_point({uni_to_poly(f.factors[0].first, a.ring(), 0)});
    }
    case SpecFamily::IntegersLine: {
      if (gens.empty()) return as_point({});
      std::vector<Poly> consts, polys;
      for (auto& f : gens) (f.is_constant() ? consts : polys).push_back(f);
      PolyRing q = a.ring().with_domain(Domain::rationals());
      std::vector<Poly> gq;
      for (auto& f : gens) gq.push_back(map_coefficients(f, q));
      auto cof = lift(q, gq, Poly::from_int(q, 1));
      if (cof) {
        // V(I) lies over the primes dividing an integer of I.
        Integer D = 1;
        for (auto& c : *cof)
          for (auto& t : c.terms()) D = lcm(D, Integer(q.domain().as_rational(t.c).get_den()));
        std::optional<SpecPoint> found;
        int nonempty = 0;
        for (auto& [p, e] : factor_integer(D)) {
          UniPoly gp(Domain::prime_field(p));
          for (auto& f : gens) gp = gcd(gp, to_fp(f, p));
          if (!gp.is_zero() && gp.degree() == 0) continue;
          ++nonempty;
          if (gp.is_zero()) {
            found = zt_vertical(a, p);
          } else {
            auto fs = factor_univariate(gp);
            if (fs.factors.size() != 1) return std::nullopt;
            found = zt_closed(a, p, fs.factors[0].first);
          }
        }
        if (nonempty != 1) return std::nullopt;
        return found;
      }
      if (gens.size() != 1) fail(ErrorCode::Undecidable, "irreducibility of " + z.to_string() + " is not decided");
      auto cp = content_primitive(gens[0]);
      Integer c = abs(d.as_integer(cp.content.lead().c));
      UniPoly u = to_univariate(cp.primitive, 0);
      std::size_t count = factor_integer(c).size();
      std::vector<UniPoly> fs = u.degree() >= 1 ? primitive_factors(u) : std::vector<UniPoly>{};
      count += fs.size();
      if (count != 1) return std::nullopt;
      if (!fs.empty()) return zt_horizontal(a, fs[0]);
      return zt_vertical(a, factor_integer(c)[0].first);
    }
    case SpecFamily::FieldPlane: {
      if (gens.empty()) return as_point({});
      if (gens.size() == 1) {
        auto fs = factor_bivariate(gens[0]);
        if (fs.size() != 1) return std::nullopt;
        if (fs[0].first.total_degree() == 0) return std::nullopt;
        return plane_curve(a, fs[0].first);
      }
      GroebnerBasis gb = groebner(a.ring(), gens);
      if (gb.is_unit()) return std::nullopt;
      if (auto x = s.point_of_ideal(gb.basis())) return x;
      fail(ErrorCode::Undecidable, "irreducibility of " + z.to_string() + " is not decided");
    }
    default:
      fail(ErrorCode::Undecidable, "irreducibility of " + z.to_string() + " is not decided");
  }
}

std::vector<std::pair<Poly, unsigned>> factor_bivariate(const Poly& f) {
  const PolyRing& r = f.ring();
  const Domain& k = r.domain();
  if (r.nvars() != 2 || !is_prime_field(k))
    fail(ErrorCode::FactorizationUnavailable, "bivariate factorization needs QQ[S,T] or GF(p)[S,T]");
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor zero");
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.is_constant()) return out;
  auto cp = content_primitive(f, 1);
  // content in k[S]
  UniPoly c = to_univariate(cp.content, 0);
  if (c.degree() >= 1)
    for (auto& [g, e] : factor_univariate(c).factors) out.emplace_back(from_univariate(g, r, 0).monic(), e);
  Poly pp = cp.primitive;
  if (pp.degree_in(1) >= 1) {
    Domain K = Domain::function_field(k.characteristic(), r.vars()[0]);
    // pp as a polynomial in T over k(S)
    std::vector<Scalar> coeffs(pp.degree_in(1) + 1, K.zero());
    for (auto& t : pp.terms()) {
      DenseVec v(t.m[0] + 1, Rational(0));
      v[t.m[0]] = k.as_rational(t.c);
      coeffs[t.m[1]] = K.add(coeffs[t.m[1]], K.from_dense(v));
    }
    UniPoly u(K, coeffs);
    for (auto& [g, e] : factor_univariate(u).factors) {
      // clear denominators, then take the primitive part over k[S]
      DenseVec den{Rational(1)};
      for (auto& cc : g.c)
        if (!cc.den.empty()) {
          // lcm of dense polynomials over k via product / gcd
          PolyRing s1(k, {r.vars()[0]});
          UniPoly a(k), b(k);
          for (auto& q : den) a.c.push_back(k.from_rational(q));
          for (auto& q : cc.den) b.c.push_back(k.from_rational(q));
          a.trim();
          b.trim();
          UniPoly l = divmod(a * b, gcd(a, b)).first;
          den.clear();
          for (auto& q : l.c) den.push_back(k.as_rational(q));
        }
      Poly h(r);
      for (std::size_t j = 0; j < g.c.size(); ++j) {
        Scalar cj = K.mul(g.c[j], K.from_dense(den));
        if (K.is_zero(cj)) continue;
        for (std::size_t i = 0; i < cj.num.size(); ++i)
          if (cj.num[i] != 0) h = h + Poly::monomial(r, Monomial{static_cast<unsigned>(i), static_cast<unsigned>(j)}, k.from_rational(cj.num[i]));
      }
      out.emplace_back(content_primitive(h, 1).primitive.monic(), e);
    }
  }
  return out;
}

std::vector<ZariskiClosed> irreducible_components(const SpecCatalogue& s, const Poly& f,
                                                  const std::optional<std::vector<Poly>>& supplied) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "V(0) is the whole space");
  std::vector<Poly> factors;
  const PresentedAlgebra& a = s.ring();
  if (supplied) {
    Poly prod = Poly::from_int(a.ring(), 1);
    for (auto& g : *supplied) prod = prod * g;
    Scalar c = a.base().div(f.lead().c, prod.lead().c);
    if (prod.scale(c) != f) fail(ErrorCode::InvalidArgument, "the supplied factors do not multiply to " + f.to_string());
    for (auto& g : *supplied)
      if (!g.is_constant() && std::find(factors.begin(), factors.end(), g.monic()) == factors.end()) factors.push_back(g.monic());
  } else {
    switch (s.family()) {
      case SpecFamily::Integers:
        for (auto& [p, e] : factor_integer(abs(a.base().as_integer(f.constant_coeff()))))
          factors.push_back(Poly::constant(a.ring(), a.base().from_integer(p)));
        break;
      case SpecFamily::FieldLine:
        for (auto& [g, e] : factor_univariate(to_univariate(f, 0)).factors) factors.push_back(from_univariate(g, a.ring(), 0));
        break;
      case SpecFamily::IntegersLine: {
        auto cp = content_primitive(f);
        for (auto& [p, e] : factor_integer(abs(a.base().as_integer(cp.content.lead().c))))
          factors.push_back(Poly::constant(a.ring(), a.base().from_integer(p)));
        UniPoly u = to_univariate(cp.primitive, 0);
        if (u.degree() >= 1)
          for (auto& P : primitive_factors(u)) factors.push_back(uni_to_poly(P, a.ring(), 0));
        break;
      }
      case SpecFamily::FieldPlane:
        for (auto& [g, e] : factor_bivariate(f)) factors.push_back(g);
        break;
      default:
        fail(ErrorCode::FactorizationUnavailable, "no factorization path on " + a.to_string() + "; supply the factors");
    }
  }
  std::vector<ZariskiClosed> out;
  for (auto& g : factors) out.push_back(ZariskiClosed{s, {g}});
  return out;
}

std::optional<std::vector<UniPoly>> closed_fiber_factors(const Poly& p0, long p) {
  UniPoly u = to_fp(p0, Integer(p));
  if (u.is_zero()) return std::nullopt;
  std::vector<UniPoly> out;
  if (u.degree() == 0) return out;
  for (auto& [g, e] : factor_univariate(u).factors) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Dimension and partitions of unity

namespace {

// Largest set of variables containing no leading monomial of the basis.
long initial_ideal_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring().nvars();
  if (n > 20) fail(ErrorCode::Unsupported, "too many variables for the dimension count");
  std::vector<unsigned long> supports;
  for (auto& g : gb.basis()) {
    unsigned long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead().m[i]) s |= 1ul << i;
    supports.push_back(s);
  }
  long best = 0;
  for (unsigned long set = 0; set < (1ul << n); ++set) {
    bool independent = true;
    for (auto s : supports) independent = independent && (s & ~set) != 0;
    if (independent) best = std::max<long>(best, __builtin_popcountl(set));
  }
  return best;
}

}  // namespace

KrullDimension krull_dimension(const PresentedAlgebra& a) {
  const Domain& d = a.base();
  if (is_zero_ring(a)) return KrullDimension{true, 0};
  const long n = static_cast<long>(a.ring().nvars());
  if (d.is_field()) return KrullDimension{false, initial_ideal_dimension(a.groebner_basis())};
  if (d.kind() == DomainKind::IntegersMod) {
    long best = -1;
    for (auto& [p, e] : factor_integer(d.modulus())) {
      KrullDimension k = krull_dimension(specialize(a, Domain::prime_field(p)));
      if (!k.minus_infinity) best = std::max(best, k.value);
    }
    return KrullDimension{false, best};
  }
  // ZZ base
  if (a.relations().empty()) return KrullDimension{false, n + 1};
  PresentedAlgebra q = specialize(a, Domain::rationals());
  if (is_zero_ring(q)) {
    // An integer D lies in I and A = A/D.
    auto cof = lift(q.ring(), q.relations(), Poly::from_int(q.ring(), 1));
    Integer D = 1;
    for (auto& c : *cof)
      for (auto& t : c.terms()) D = lcm(D, Integer(q.base().as_rational(t.c).get_den()));
    long best = -1;
    for (auto& [p, e] : factor_integer(D)) {
      KrullDimension k = krull_dimension(specialize(a, Domain::prime_field(p)));
      if (!k.minus_infinity) best = std::max(best, k.value);
    }
    return KrullDimension{false, best};
  }
  if (a.relations().size() == 1) return KrullDimension{false, n};  // hypersurface with a char-0 component
  if (n == 1) return KrullDimension{false, 1};                      // nonzero ideal of ZZ[T], not in torsion only
  fail(ErrorCode::Unsupported, "Krull dimension over ZZ is not implemented for " + a.to_string());
}

std::optional<std::vector<Poly>> partition_of_unity(const PresentedAlgebra& a, const std::vector<Poly>& fs) {
  const Domain& d = a.base();
  const PolyRing& r = a.ring();
  if (d.is_field()) {
    std::vector<Poly> gens = a.relations();
    gens.insert(gens.end(), fs.begin(), fs.end());
    auto c = lift(r, gens, Poly::from_int(r, 1));
    if (!c) return std::nullopt;
    return std::vector<Poly>(c->end() - static_cast<long>(fs.size()), c->end());
  }
  if (r.nvars() == 0 && a.relations().empty()) {
    // extended gcd over ZZ (or ZZ/n through ZZ representatives)
    Integer g = d.kind() == DomainKind::IntegersMod ? d.modulus() : Integer(0);
    std::vector<Integer> coef(fs.size(), 0);
    Integer gm = 0;  // coefficient of the modulus, discarded
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Integer v = d.as_integer(fs[i].constant_coeff());
      Integer s, t, h;
      mpz_gcdext(h.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      for (auto& c : coef) c *= s;
      gm *= s;
      coef[i] = t;
      g = h;
    }
    if (abs(g) != 1) return std::nullopt;
    std::vector<Poly> out;
    for (auto& c : coef) out.push_back(Poly::constant(r, d.from_integer(c * g)));
    return out;
  }
  fail(ErrorCode::Undecidable, "partitions of unity over " + a.to_string() + " are not computed");
}

}  // namespace schemex
