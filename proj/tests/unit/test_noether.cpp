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
#include "schemex/noether.hpp"
#include "schemex/spectrum.hpp"

using namespace schemex;

namespace {

Poly random_poly(const PolyRing& r, unsigned maxdeg, int nterms, std::mt19937_64& g) {
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(r.nvars(), 0);
    unsigned budget = static_cast<unsigned>(g() % (maxdeg + 1));
    for (unsigned b = 0; b < budget; ++b) ++m[g() % r.nvars()];
    terms.push_back(Term{m, r.domain().from_int(static_cast<long>(g() % 9) - 4)});
  }
  return Poly::from_terms(r, std::move(terms));
}

// Every point of GF(p)^n, as scalar vectors.
std::vector<std::vector<Scalar>> all_points(const Domain& k, std::size_t n) {
  std::vector<std::vector<Scalar>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Scalar>> next;
    for (auto& v : out)
      for (auto& a : k.elements()) {
        auto w = v;
        w.push_back(a);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("normalization of the zero ideal and of XY - 1") {
  PolyRing r3(Domain::rationals(), {"X1", "X2", "X3"});
  auto z = noether_normalize(r3, {});
  CHECK(z.d() == 3);
  CHECK(z.trace.empty());
  CHECK(z.y[2].to_string() == "X3");

  PolyRing r(Domain::rationals(), {"X", "Y"});
  auto res = noether_normalize(r, {parse_poly(r, "X*Y-1")});
  CHECK(res.d() == 1);
  REQUIRE(res.trace.size() == 1);
  const auto& s = res.trace[0];
  CHECK(s.prime == 2);
  CHECK(s.exponents == std::vector<Integer>{2});
  CHECK(s.degree == 3);
  CHECK(s.equation == parse_poly(s.equation.ring(), "X^3 - Z2*X + 1"));
  CHECK(res.y[0] == parse_poly(r, "Y + X^2"));
  CHECK(s.verify());
  CHECK(res.verify());
  CHECK(s.to_string() == "P = X*Y - 1, p = 2, Z2 = Y + X^2, X^3 - X*Z2 + 1 = 0");

  CHECK_THROWS_AS(noether_normalize(r, {parse_poly(r, "X"), parse_poly(r, "X-1")}), Error);
  PolyRing zr(Domain::integers(), {"X"});
  CHECK_THROWS_AS(noether_normalize(zr, {parse_poly(zr, "2*X")}), Error);
}

TEST_CASE("a tampered certificate fails") {
  PolyRing r(Domain::rationals(), {"X", "Y"});
  auto res = noether_normalize(r, {parse_poly(r, "X^2*Y+Y^3-1")});
  REQUIRE(res.verify());
  auto bad = res.trace[0];
  bad.equation = bad.equation + Poly::variable(bad.equation.ring(), 1);
  CHECK_FALSE(bad.verify());
  auto collide = res.trace[0];
  collide.exponents = {Integer(1)};
  CHECK_FALSE(collide.verify());
}

TEST_CASE("hypersurfaces normalize to n - 1 variables") {
  std::mt19937_64 g(99);
  for (Domain k : {Domain::rationals(), Domain::prime_field(5), Domain::prime_field(7)}) {
    int done = 0;
    while (done < 25) {
      std::size_t n = 1 + g() % 3;
      std::vector<std::string> vars{"X", "Y", "Z"};
      vars.resize(n);
      PolyRing r(k, vars);
      Poly f = random_poly(r, 3, 4, g);
      if (f.is_constant()) continue;
      auto res = noether_normalize(r, {f});
      CHECK(res.d() == n - 1);
      CHECK(res.verify());
      ++done;
    }
  }
}

TEST_CASE("normalization agrees with the Krull dimension") {
  // a linear form and a quadric; two random quadrics in three variables push
  // the substituted degrees past what elimination handles quickly
  std::mt19937_64 g(7);
  int done = 0;
  while (done < 20) {
    std::vector<std::string> vars{"X", "Y", "Z"};
    vars.resize(2 + done % 2);
    PolyRing r(Domain::prime_field(5), vars);
    std::vector<Poly> gens{random_poly(r, 1, 3, g), random_poly(r, 2, 3, g)};
    if (groebner(r, gens).is_unit()) continue;
    auto res = noether_normalize(r, gens);
    CHECK(res.verify());
    CHECK(static_cast<long>(res.d()) == krull_dimension(PresentedAlgebra(r, gens)).value);
    ++done;
  }
}

TEST_CASE("maximal ideals") {
  auto q2 = PresentedAlgebra::polynomial(Domain::rationals(), {"X", "Y"});
  auto m = is_maximal(Ideal{q2, {q2.element("X-1"), q2.element("Y+2")}});
  CHECK(m.maximal);
  CHECK(m.dimension == 1);

  auto q1 = PresentedAlgebra::polynomial(Domain::rationals(), {"X"});
  auto c = is_maximal(Ideal{q1, {q1.element("X^2+1")}});
  CHECK(c.maximal);
  CHECK(c.dimension == 2);

  auto line = is_maximal(Ideal{q2, {q2.element("X")}});
  CHECK_FALSE(line.maximal);
  CHECK(line.reason == MaximalityReason::InfiniteDimension);
  CHECK(line.free_variable == "Y");

  auto split = is_maximal(Ideal{q2, {q2.element("X^2-2"), q2.element("Y^2-2")}});
  CHECK_FALSE(split.maximal);
  REQUIRE(split.zero_divisors);
  auto [a, b] = *split.zero_divisors;
  PresentedAlgebra quo = Ideal{q2, {q2.element("X^2-2"), q2.element("Y^2-2")}}.quotient();
  CHECK_FALSE(quo.is_zero_element(a));
  CHECK_FALSE(quo.is_zero_element(b));
  CHECK(quo.is_zero_element(a * b));

  auto biquad = is_maximal(Ideal{q2, {q2.element("X^2-2"), q2.element("Y^2-3")}});
  CHECK(biquad.maximal);
  CHECK(biquad.dimension == 4);

  CHECK(is_maximal(Ideal{q2, {q2.element("1")}}).reason == MaximalityReason::UnitIdeal);
  CHECK_THROWS_AS(is_maximal(Ideal{PresentedAlgebra::polynomial(Domain::integers(), {"X"}), {}}), Error);
}

TEST_CASE("maximality against root counts over small fields") {
  // (f) in GF(p)[X], deg f <= 3: maximal iff f has no root
  for (long p : {2L, 3L, 5L}) {
    auto a = PresentedAlgebra::polynomial(Domain::prime_field(p), {"X"});
    const Domain& k = a.base();
    for (long c0 = 0; c0 < p; ++c0)
      for (long c1 = 0; c1 < p; ++c1)
        for (long c2 = 0; c2 < p; ++c2) {
          UniPoly f = UniPoly::from_ints(k, {c0, c1, c2, 1});
          bool root = false;
          for (auto& x : k.elements()) root = root || k.is_zero(evaluate(f, x));
          auto cert = is_maximal(Ideal{a, {from_univariate(f, a.ring(), 0)}});
          CHECK(cert.maximal == !root);
        }
  }
  // point ideals are maximal with residue dimension 1
  auto b = PresentedAlgebra::polynomial(Domain::prime_field(5), {"X", "Y", "Z"});
  for (auto& pt : all_points(b.base(), 3)) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(Poly::variable(b.ring(), i) - Poly::constant(b.ring(), pt[i]));
    auto cert = is_maximal(Ideal{b, gens});
    CHECK(cert.maximal);
    CHECK(cert.dimension == 1);
  }
}

TEST_CASE("common zeros") {
  PolyRing r(Domain::rationals(), {"X"});
  auto v = has_common_zero(r, {parse_poly(r, "X^2+1"), parse_poly(r, "X+2")});
  CHECK_FALSE(v.common_zero);
  REQUIRE(v.certificate);
  Poly s = (*v.certificate)[0] * parse_poly(r, "X^2+1") + (*v.certificate)[1] * parse_poly(r, "X+2");
  CHECK(s == Poly::from_int(r, 1));
  CHECK(has_common_zero(r, {}).common_zero);
  CHECK(has_common_zero(r, {parse_poly(r, "X^2+1")}).common_zero);

  // 50 random systems over GF(3): consistent with the Groebner basis, with
  // rational points when there are any, and with the Bezout certificate
  std::mt19937_64 g(42);
  PolyRing f3(Domain::prime_field(3), {"X", "Y"});
  auto pts = all_points(f3.domain(), 2);
  for (int k = 0; k < 50; ++k) {
    std::vector<Poly> ps;
    for (int j = 0; j < 2 + static_cast<int>(g() % 2); ++j) ps.push_back(random_poly(f3, 2, 3, g));
    auto verdict = has_common_zero(f3, ps);
    CHECK(verdict.common_zero == !groebner(f3, ps).is_unit());
    bool rational_zero = false;
    for (auto& pt : pts) {
      bool all = true;
      for (auto& p : ps) all = all && f3.domain().is_zero(evaluate(p, pt));
      rational_zero = rational_zero || all;
    }
    if (rational_zero) CHECK(verdict.common_zero);
    if (!verdict.common_zero) {
      Poly sum(f3);
      for (std::size_t i = 0; i < ps.size(); ++i) sum = sum + (*verdict.certificate)[i] * ps[i];
      CHECK(sum == Poly::from_int(f3, 1));
    }
  }
}
