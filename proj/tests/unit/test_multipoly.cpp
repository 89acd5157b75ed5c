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

#include <random>

#include "doctest.h"
#include "schemex/multipoly.hpp"

using namespace schemex;

namespace {

Poly random_poly(const PolyRing& r, unsigned maxdeg, int nterms, std::mt19937_64& g) {
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(r.nvars(), 0);
    unsigned budget = static_cast<unsigned>(g() % (maxdeg + 1));
    for (unsigned b = 0; b < budget; ++b) ++m[g() % r.nvars()];
    terms.push_back(Term{m, r.domain().from_int(static_cast<long>(g() % 19) - 9)});
  }
  return Poly::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("parsing and printing") {
  PolyRing r(Domain::rationals(), {"X", "Y"});
  Poly f = parse_poly(r, "X^2*Y - 3");
  CHECK(f.to_string() == "X^2*Y - 3");
  CHECK(parse_poly(r, "2X(Y+1)^2").to_string() == "2*X*Y^2 + 4*X*Y + 2*X");
  CHECK(parse_poly(r, "-X^2").to_string() == "-X^2");
  CHECK(parse_poly(r, "X/2 - 1/3").to_string() == "1/2*X - 1/3");
  CHECK(parse_poly(r, "(X - Y)*(X + Y)") == parse_poly(r, "X^2 - Y^2"));
  CHECK_THROWS_AS(parse_poly(r, "X + Z"), Error);
  CHECK_THROWS_AS(parse_poly(r, "X +"), Error);
  CHECK_THROWS_AS(parse_poly(r, "X / Y"), Error);

  PolyRing ri(Domain::number_field({1, 0, 1}, "i"), {"X"});
  CHECK(parse_poly(ri, "(X - i)*(X + i)").to_string() == "X^2 + 1");
  CHECK(parse_poly(ri, "(1 + i)*X").to_string() == "(i + 1)*X");

  PolyRing rz(Domain::integers(), {"X"});
  CHECK(parse_poly(rz, "6*X^2 + 18*X - 3").to_string() == "6*X^2 + 18*X - 3");
  CHECK_THROWS_AS(parse_poly(rz, "X/2"), Error);
}

TEST_CASE("term orders") {
  PolyRing g(Domain::rationals(), {"X", "Y", "Z"});
  PolyRing l = g.with_order(TermOrder::Lex);
  Poly f = parse_poly(g, "X*Z + Y^2 + X^2 + Z^3");
  CHECK(f.to_string() == "Z^3 + X^2 + Y^2 + X*Z");
  CHECK(f.reorder(l).to_string() == "X^2 + X*Z + Y^2 + Z^3");
  PolyRing b = g.with_order(TermOrder::Block, 1);
  CHECK(f.reorder(b).to_string() == "X^2 + X*Z + Z^3 + Y^2");
  CHECK(f == f.reorder(l));
}

TEST_CASE("homogeneous components") {
  PolyRing tau(Domain::rationals(), {"t1", "t2"});
  auto comps = homogeneous_components(parse_poly(tau, "t1^3 - t2 + 7"));
  REQUIRE(comps.size() == 3);
  CHECK(comps.at(3).to_string() == "t1^3");
  CHECK(comps.at(1).to_string() == "-t2");
  CHECK(comps.at(0).to_string() == "7");
  CHECK(homogeneous_components(Poly(tau)).empty());
  PolyRing xy(Domain::rationals(), {"X", "Y"});
  auto h = homogeneous_components(parse_poly(xy, "X^2*Y + X*Y^2"));
  REQUIRE(h.size() == 1);
  CHECK(h.count(3) == 1);
}

TEST_CASE("homogenize and dehomogenize") {
  PolyRing T(Domain::rationals(), {"T0", "T1", "T2"});
  PolyRing tau = chart_ring(T, 0);
  CHECK(tau.vars() == std::vector<std::string>{"t1", "t2"});
  Poly f = parse_poly(tau, "t1^3 - t2 + 7");
  Poly F = homogenize(f, T, 0);
  CHECK(F == parse_poly(T, "T1^3 - T0^2*T2 + 7*T0^3"));
  CHECK(dehomogenize(F, 0, tau) == f);
  Poly g = parse_poly(tau, "t1^2 - 3*t1 + t2^4");
  CHECK(homogenize(g, T, 0) == parse_poly(T, "T0^2*T1^2 - 3*T0^3*T1 + T2^4"));
  CHECK(homogenize(Poly::from_int(tau, 5), T, 0) == Poly::from_int(T, 5));
  CHECK(dehomogenize(parse_poly(T, "T0*T2 - T1^2"), 0, tau) == parse_poly(tau, "t2 - t1^2"));
  CHECK(dehomogenize(parse_poly(T, "T1^4"), 1, chart_ring(T, 1)).to_string() == "1");
  CHECK_THROWS_AS(dehomogenize(parse_poly(T, "T0 + T1^2"), 0, tau), Error);
  CHECK_THROWS_AS(homogenize(Poly(tau), T, 0), Error);
}

TEST_CASE("content and primitive part") {
  PolyRing z(Domain::integers(), {"T"});
  auto a = content_primitive(parse_poly(z, "2*T - 1"));
  CHECK(a.content.to_string() == "1");
  CHECK(a.primitive.to_string() == "2*T - 1");
  auto b = content_primitive(parse_poly(z, "6*T + 18"));
  CHECK(b.content.to_string() == "6");
  CHECK(b.primitive.to_string() == "T + 3");
  auto c = content_primitive(parse_poly(z, "T^2 + 1"));
  CHECK(c.content.to_string() == "1");
  CHECK_THROWS_AS(content_primitive(Poly(z)), Error);

  PolyRing st(Domain::rationals(), {"S", "T"});
  Poly f = parse_poly(st, "S^2*T + S*T^2 - S");
  auto d = content_primitive(f, 1);
  CHECK(d.content.to_string() == "S");
  CHECK(d.primitive == parse_poly(st, "S*T + T^2 - 1"));
  CHECK(d.content * d.primitive == f);
}

TEST_CASE("property: ring axioms and grading") {
  std::mt19937_64 g(5);
  for (const Domain& d : {Domain::rationals(), Domain::prime_field(5), Domain::integers()}) {
    PolyRing r(d, {"A", "B", "C", "D"});
    for (int trial = 0; trial < 25; ++trial) {
      Poly a = random_poly(r, 4, 4, g), b = random_poly(r, 4, 4, g), c = random_poly(r, 3, 3, g);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      Poly sum(r);
      for (auto& [deg, h] : homogeneous_components(a)) {
        CHECK(h.is_homogeneous());
        CHECK(h.total_degree() == deg);
        sum = sum + h;
      }
      CHECK(sum == a);
    }
  }
}

TEST_CASE("property: dehomogenize after homogenize is the identity") {
  std::mt19937_64 g(9);
  PolyRing T(Domain::rationals(), {"T0", "T1", "T2", "T3"});
  for (std::size_t pos = 0; pos < 4; ++pos) {
    PolyRing tau = chart_ring(T, pos);
    for (int trial = 0; trial < 20; ++trial) {
      Poly f = random_poly(tau, 6, 5, g);
      if (f.is_zero()) continue;
      Poly F = homogenize(f, T, pos);
      CHECK(F.is_homogeneous());
      CHECK(F.total_degree() == f.total_degree());
      CHECK(dehomogenize(F, pos, tau) == f);
      // homogenize after dehomogenize on forms not divisible by the variable
      Poly G = random_poly(T, 4, 4, g);
      auto comps = homogeneous_components(G);
      if (comps.empty()) continue;
      Poly top = comps.rbegin()->second;
      bool divisible = true;
      for (auto& t : top.terms()) divisible = divisible && t.m[pos] > 0;
      if (divisible) continue;
      CHECK(homogenize(dehomogenize(top, pos, tau), T, pos) == top);
    }
  }
}

TEST_CASE("substitution and evaluation") {
  PolyRing s(Domain::rationals(), {"S0", "S1"});
  PolyRing t(Domain::rationals(), {"T0", "T1", "T2"});
  Poly conic = parse_poly(t, "T0*T2 - T1^2");
  Poly img = substitute(conic, s, {parse_poly(s, "S0^2"), parse_poly(s, "S0*S1"), parse_poly(s, "S1^2")});
  CHECK(img.is_zero());
  Domain q = Domain::rationals();
  CHECK(evaluate(conic, {q.from_int(4), q.from_int(6), q.from_int(9)}) == q.zero());
  PolyRing big(Domain::rationals(), {"Y", "S0", "S1"});
  Poly e = embed(parse_poly(s, "S0 + 2*S1"), big);
  CHECK(e.to_string() == "S0 + 2*S1");
  PolyRing f5(Domain::prime_field(5), {"S0", "S1"});
  CHECK(map_coefficients(parse_poly(PolyRing(Domain::integers(), {"S0", "S1"}), "6*S0 + 10*S1"), f5).to_string() == "S0");
}
