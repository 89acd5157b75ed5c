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
#include <set>

#include "doctest.h"
#include "schemex/proj.hpp"

using namespace schemex;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Poly random_form(const PolyRing& r, unsigned deg, std::mt19937_64& g) {
  std::vector<Term> terms;
  for (int k = 0; k < 3; ++k) {
    Monomial m(r.nvars(), 0);
    for (unsigned b = 0; b < deg; ++b) ++m[g() % r.nvars()];
    terms.push_back(Term{m, r.domain().from_int(static_cast<long>(g() % 7) - 3)});
  }
  return Poly::from_terms(r, terms);
}

}  // namespace

TEST_CASE("charts") {
  auto p2 = GradedAlgebra::projective_space(Domain::rationals(), 2);
  auto c0 = proj_chart(p2, 0);
  CHECK(c0.ring.to_string() == "QQ[t1,t2]");
  CHECK(c0.graded_index == std::vector<std::size_t>{1, 2});

  auto conic = parse_graded("QQ[T0,T1,T2]/(T0*T2-T1^2)");
  auto k0 = proj_chart(conic, 0);
  CHECK(k0.ring.to_string() == "QQ[t1,t2]/(-t1^2 + t2)");
  CHECK(k0.verify(conic));
  CHECK(k0.to_string() == "D+(T0) = Spec QQ[t1,t2]/(-t1^2 + t2)");
  CHECK(proj_atlas(conic).size() == 3);

  auto p0 = GradedAlgebra::projective_space(Domain::integers(), 0);
  CHECK(proj_chart(p0, 0).ring.to_string() == "ZZ");

  CHECK_THROWS_AS(parse_graded("QQ[T0,T1]/(T0^2-T1)"), Error);
  auto fat = parse_graded("QQ[T0,T1]/(T0^2)");
  try {
    proj_chart(fat, 0);
    FAIL("expected NilpotentCoordinate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NilpotentCoordinate);
  }
  CHECK(proj_atlas(fat).size() == 1);
  CHECK_FALSE(proj_is_empty(fat));
}

TEST_CASE("Proj A[T]/(T^k) is empty") {
  for (int k = 1; k <= 4; ++k) {
    auto b = parse_graded("GF(3)[T]/(T^" + std::to_string(k) + ")");
    CHECK(proj_is_empty(b));
    CHECK(proj_atlas(b).empty());
  }
  CHECK_FALSE(proj_is_empty(parse_graded("GF(3)[T]")));
}

TEST_CASE("dehomogenized charts homogenize back") {
  std::mt19937_64 g(5);
  for (int round = 0; round < 30; ++round) {
    std::size_t n = 2 + g() % 2;
    std::vector<std::string> vars{"T0", "T1", "T2"};
    vars.resize(n);
    PolyRing r(Domain::prime_field(7), vars);
    std::vector<Poly> rels;
    for (int k = 0; k < 2; ++k) {
      Poly f = random_form(r, 1 + static_cast<unsigned>(g() % 3), g);
      if (!f.is_zero()) rels.push_back(f);
    }
    GradedAlgebra b(r, rels);
    for (auto& chart : proj_atlas(b)) {
      CHECK(chart.verify(b));
      for (auto& gl : chart.ring.relations())
        CHECK(dehomogenize(homogenize(gl, r, chart.index), chart.index, chart.ring.ring()) == gl);
    }
  }
}

TEST_CASE("chart transitions") {
  auto p1 = GradedAlgebra::projective_space(Domain::rationals(), 1);
  PolyRing c0 = proj_chart(p1, 0).ring.ring();
  auto t = chart_transition(p1, 0, 1, ChartElement::of(parse_poly(c0, "t1")));
  CHECK(t.to_string() == "1/t0");
  auto back = chart_transition(p1, 1, 0, t);
  CHECK(back.to_string() == "t1");
  CHECK(chart_transition(p1, 0, 1, ChartElement::of(parse_poly(c0, "3"))).to_string() == "3");

  auto p2 = GradedAlgebra::projective_space(Domain::rationals(), 2);
  auto ch0 = proj_chart(p2, 0);
  PolyRing r0 = ch0.ring.ring();
  ChartElement q{parse_poly(r0, "t2"), parse_poly(r0, "t1")};
  auto q1 = chart_transition(p2, 0, 1, q);
  CHECK(q1.to_string() == "t2");
  CHECK(chart_equal(ch0, chart_transition(p2, 1, 0, q1), q));

  // round trips through every other chart
  std::mt19937_64 g(11);
  for (int k = 0; k < 40; ++k) {
    std::size_t i = g() % 3, j = g() % 3;
    PolyRing ri = proj_chart(p2, i).ring.ring();
    Poly num = random_form(ri, static_cast<unsigned>(g() % 3), g);
    if (num.is_zero()) continue;
    ChartElement e{num, Poly::variable(ri, g() % 2).pow(static_cast<unsigned>(g() % 3))};
    auto there = chart_transition(p2, i, j, e);
    CHECK(chart_equal(proj_chart(p2, i), chart_transition(p2, j, i, there), e));
  }

  auto conic = parse_graded("QQ[T0,T1,T2]/(T0*T2-T1^2)");
  PolyRing k0 = proj_chart(conic, 0).ring.ring();
  // denominators that vanish on the target chart are rejected
  CHECK_THROWS_AS(chart_transition(conic, 0, 2, ChartElement{parse_poly(k0, "1"), parse_poly(k0, "0")}), Error);
  try {
    chart_transition(conic, 0, 1, ChartElement{parse_poly(k0, "1"), parse_poly(k0, "t2 - t1^2")});
    FAIL("expected DenominatorVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorVanishes);
  }
}

TEST_CASE("points") {
  auto qq = Domain::rationals();
  CHECK(point_normalize(qq, {qq.from_int(2), qq.from_int(4)}).to_string() == "[1:2]");
  auto f7 = Domain::prime_field(7);
  CHECK(point_normalize(f7, {f7.zero(), f7.from_int(3)}).to_string() == "[0:1]");
  CHECK_THROWS_AS(point_normalize(f7, {f7.zero(), f7.zero()}), Error);
  CHECK_THROWS_AS(point_normalize(Domain::integers(), {Domain::integers().one()}), Error);
  auto raw = parse_coordinates(f7, "[0:3:6]");
  CHECK(f7.to_string(raw[2]) == "6");
  auto p = parse_proj_point(f7, "[0:3:6]");
  CHECK(p.to_string() == "[0:1:2]");
  CHECK_FALSE(p.in_chart(0));
  CHECK(p.in_chart(1));
  CHECK(parse_proj_point(qq, "[2:4]") == parse_proj_point(qq, "[1/2:1]"));
}

TEST_CASE("counting points of P^n over finite fields") {
  for (long q : {2L, 3L, 5L}) {
    auto k = Domain::prime_field(q);
    auto elems = k.elements();
    for (std::size_t n = 0; n <= 2; ++n) {
      // oracle: normalize every nonzero tuple and count the distinct results
      std::set<std::string> seen;
      std::vector<std::vector<Scalar>> tuples{{}};
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::vector<Scalar>> next;
        for (auto& t : tuples)
          for (auto& a : elems) {
            auto w = t;
            w.push_back(a);
            next.push_back(w);
          }
        tuples = next;
      }
      for (auto& t : tuples) {
        bool zero = true;
        for (auto& a : t) zero = zero && k.is_zero(a);
        if (!zero) seen.insert(point_normalize(k, t).to_string());
      }
      long expected = 0;
      for (std::size_t i = 0; i <= n; ++i) expected = expected * q + 1;  // (q^(n+1) - 1)/(q - 1)
      CHECK(static_cast<long>(seen.size()) == expected);
      auto pts = projective_points(k, n);
      CHECK(static_cast<long>(pts.size()) == expected);
      std::set<std::string> listed;
      for (auto& x : pts) listed.insert(x.to_string());
      CHECK(listed == seen);
    }
  }
}

TEST_CASE("Segre, conic and Veronese on points") {
  auto qq = Domain::rationals();
  CHECK(segre(parse_proj_point(qq, "[1:2]"), parse_proj_point(qq, "[3:5]")).to_string() == "[1:5/3:2:10/3]");
  CHECK(segre(parse_proj_point(qq, "[1:0]"), parse_proj_point(qq, "[1:0]")).to_string() == "[1:0:0:0]");
  CHECK(conic(parse_proj_point(qq, "[2:3]")) == point_normalize(qq, {qq.from_int(4), qq.from_int(6), qq.from_int(9)}));
  CHECK(conic(parse_proj_point(qq, "[1:0]")).to_string() == "[1:0:0]");

  for (long q : {2L, 3L, 5L}) {
    auto k = Domain::prime_field(q);
    auto sm = segre_map(k, 1, 1);
    auto vm = veronese_map(k, 1);
    auto cm = conic_map(k);
    auto sq = segre_ideal(sm);
    auto vq = veronese_ideal(vm);
    auto cq = conic_ideal(cm);
    for (auto& a : projective_points(k, 1)) {
      for (auto& f : vq) CHECK(k.is_zero(evaluate(f, veronese(a).coords)));
      for (auto& f : cq) CHECK(k.is_zero(evaluate(f, conic(a).coords)));
      for (auto& b : projective_points(k, 1))
        for (auto& f : sq) CHECK(k.is_zero(evaluate(f, segre(a, b).coords)));
    }
    // the quadric has exactly (q + 1)^2 points, all of them hit
    CHECK(rational_points(GradedAlgebra(sm.target, sq)).size() == static_cast<std::size_t>((q + 1) * (q + 1)));
  }
}

TEST_CASE("image ideals") {
  auto qq = Domain::rationals();
  auto sm = segre_map(qq, 1, 1);
  auto sq = segre_ideal(sm);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].to_string() == "-Z01*Z10 + Z00*Z11");
  auto s = compare_image_ideal(sm, sq);
  CHECK(s.equal_radicals());
  REQUIRE(s.computed.size() == 1);
  CHECK(s.computed[0] == sq[0].monic());

  auto cm = conic_map(qq);
  auto c = compare_image_ideal(cm, conic_ideal(cm));
  CHECK(c.equal_radicals());
  REQUIRE(c.computed.size() == 1);
  CHECK(c.computed[0] == parse_poly(cm.target, "T1^2 - T0*T2"));

  auto vm = veronese_map(qq, 1);
  auto vq = veronese_ideal(vm);
  CHECK(vq.size() == 2);
  CHECK(vq[1].to_string() == "Z01 - Z10");
  CHECK(compare_image_ideal(vm, vq).equal_radicals());

  // a wrong closed form is caught
  CHECK_FALSE(compare_image_ideal(vm, sq.empty() ? vq : std::vector<Poly>{parse_poly(vm.target, "Z00*Z11 - Z01*Z10")})
                  .computed_in_radical_of_expected);
}

TEST_CASE("sections of O(d)") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (long d = -3; d <= 4; ++d) {
      auto s = twist_sections(Domain::integers(), n, d);
      CHECK(static_cast<long>(s.rank()) == (d < 0 ? 0 : binomial(static_cast<long>(n) + d, d)));
      for (auto& f : s.basis) CHECK(f.total_degree() == d);
    }
  }
  auto o = twist_sections(Domain::rationals(), 2, 0);
  REQUIRE(o.rank() == 1);
  CHECK(o.basis[0].to_string() == "1");

  // independent count: chart monomials of degree <= d + 2 that extend
  for (std::size_t n = 1; n <= 3; ++n) {
    PolyRing c = chart_ring(GradedAlgebra::projective_space(Domain::rationals(), n).ring(), 0);
    for (long d = -2; d <= 3; ++d) {
      long extend = 0;
      long bound = std::max(0L, d + 2);
      std::vector<Monomial> mons{Monomial(n, 0)};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Monomial> next;
        for (auto& m : mons)
          for (long e = 0; e <= bound; ++e) {
            auto w = m;
            w[i] = static_cast<unsigned>(e);
            next.push_back(w);
          }
        mons = next;
      }
      for (auto& m : mons) {
        long deg = 0;
        for (auto e : m) deg += e;
        if (deg > bound) continue;
        extend += section_extends(n, d, Domain::rationals(), Poly::monomial(c, m, c.domain().one()));
      }
      CHECK_MESSAGE(extend == (d < 0 ? 0 : binomial(static_cast<long>(n) + d, d)), "n = " << n << ", d = " << d);
    }
    // global functions are the constants
    CHECK(section_extends(n, 0, Domain::rationals(), parse_poly(c, "7")));
    CHECK_FALSE(section_extends(n, 0, Domain::rationals(), parse_poly(c, "t1 + 1")));
  }
}

TEST_CASE("the twisting cocycle") {
  auto qq = Domain::rationals();
  for (std::size_t n = 0; n <= 3; ++n)
    for (long d = -3; d <= 3; ++d) CHECK(twist_cocycle(qq, n, d).verify());
  CHECK(twist_cocycle(qq, 1, 0).to_string() == "f_01 = 1; f_10 = 1");
  CHECK(twist_cocycle(qq, 1, 1).to_string() == "f_01 = T1/T0; f_10 = T0/T1");
  CHECK(twist_cocycle(qq, 0, 5).to_string() == "trivial");
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      CHECK(tensor_matches(twist_cocycle(qq, 2, a), twist_cocycle(qq, 2, b), twist_cocycle(qq, 2, a + b)));
      if (b != 0) CHECK_FALSE(tensor_matches(twist_cocycle(qq, 2, a), twist_cocycle(qq, 2, b), twist_cocycle(qq, 2, a)));
    }
}

TEST_CASE("zero loci of sections") {
  auto f5 = Domain::prime_field(5);
  auto p1 = GradedAlgebra::projective_space(f5, 1);
  auto v = section_zero_locus(p1, Poly::variable(p1.ring(), 0));
  CHECK_FALSE(v.empty());
  REQUIRE(v.charts.size() == 2);
  CHECK(v.charts[0].empty);
  CHECK_FALSE(v.charts[1].empty);
  auto pts = v.rational_points();
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].to_string() == "[0:1]");

  auto p2 = GradedAlgebra::projective_space(f5, 2);
  auto c = section_zero_locus(p2, parse_poly(p2.ring(), "T0*T2 - T1^2"));
  CHECK(c.rational_points().size() == 6);
  CHECK(c.charts[0].ideal[0].to_string() == "4*t1^2 + t2");

  auto none = section_zero_locus(p2, parse_poly(p2.ring(), "3"));
  CHECK(none.empty());
  CHECK_THROWS_AS(section_zero_locus(p2, parse_poly(p2.ring(), "T0 + 1")), Error);

  // V(T_i) is a copy of P^(n-1)
  auto v2 = section_zero_locus(p2, Poly::variable(p2.ring(), 2));
  CHECK(v2.rational_points().size() == 6);
}

TEST_CASE("base change commutes with charts") {
  auto b = parse_graded("ZZ[T0,T1,T2]/(T0*T2-T1^2, 2*T0*T1-3*T2^2)");
  for (long p : {5L, 7L, 11L}) {
    auto k = Domain::prime_field(p);
    auto bk = b.base_change(k);
    for (auto& chart : proj_atlas(bk)) {
      PresentedAlgebra down = specialize(proj_chart(b, chart.index).ring, k);
      CHECK(down.to_string() == chart.ring.to_string());
    }
  }
}

TEST_CASE("homogeneous primes of the projective line") {
  auto pr = projective_line_primes(Domain::prime_field(2), 1);
  std::vector<std::string> labels;
  for (auto& x : pr) labels.push_back(x.label);
  CHECK(labels == std::vector<std::string>{"eta", "x_{T0}", "x_{T1}", "x_{T0 + T1}"});
  auto pr2 = projective_line_primes(Domain::prime_field(2), 2);
  CHECK(pr2.size() == 5);  // adds T1^2 + T0*T1 + T0^2
}
