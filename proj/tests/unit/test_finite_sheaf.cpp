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
#include "schemex/finite_sheaf.hpp"
#include "support/sheaf_fixtures.hpp"

using namespace schemex;
using namespace schemex::testing;

TEST_CASE("finite spaces") {
  auto dvr = FiniteSpace::from_closures({"eta", "s"}, {0b11, 0b10});
  CHECK(dvr.opens() == std::vector<OpenSet>{0b00, 0b01, 0b11});
  CHECK(dvr.minimal_open(1) == 0b11);
  CHECK(FiniteSpace::discrete({"a", "b", "c"}).opens().size() == 8);
  CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {0, 0b01, 0b10}), Error);
  CHECK(dvr.covers(0).size() == 1);
  CHECK(dvr.describe(0b11) == "{eta,s}");
}

TEST_CASE("finite rings") {
  for (auto& r : example_rings()) CHECK(r.is_ring());
  auto a = FiniteRing::from_algebra(parse_algebra("GF(5)[e]/(e^2)"));
  CHECK(a.size() == 25);
  CHECK(a.units().size() == 20);
  CHECK(FiniteRing::integers_mod(12).units().size() == 4);
  CHECK_THROWS_AS(FiniteRing::from_algebra(parse_algebra("QQ[X]/(X^2)")), Error);
  auto z = FiniteRing::integers_mod(12);
  auto [q, p] = localize(z, 2);
  CHECK(q.size() == 3);
  CHECK(is_ring_homomorphism(z, q, p));
}

TEST_CASE("sheafification of random presheaves preserves stalks") {
  std::mt19937_64 g(20261016);
  int non_sheaves = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto sp = random_space(g, 1 + g() % 5);
    auto f = random_presheaf(g, sp);
    non_sheaves += !f.is_sheaf();
    auto s = sheafify(f);
    for (std::size_t x = 0; x < sp.size(); ++x) CHECK(s.stalk_bijective(x));
    CHECK(s.sheaf.is_sheaf());
    CHECK(s.sheaf.sections(0).size() == 1);
  }
  CHECK(non_sheaves > 10);
}

TEST_CASE("sheafification examples") {
  SUBCASE("constant presheaf on two discrete points") {
    auto sp = FiniteSpace::discrete({"a", "b"});
    auto f = constant_presheaf(sp, 3);
    CHECK_FALSE(f.is_sheaf());
    auto s = sheafify(f);
    CHECK(s.sheaf.sections(sp.open_index(0b11)).size() == 9);
    CHECK(s.sheaf.sections(0).size() == 1);
  }
  SUBCASE("a presheaf living on the whole space only") {
    auto sp = FiniteSpace::from_closures({"eta", "s"}, {0b11, 0b10});
    std::vector<std::vector<std::string>> secs{{"0"}, {"0"}, {"0", "1", "2"}};
    FinitePresheaf f(sp, secs, [](std::size_t u, std::size_t v, std::size_t s) { return u == v ? s : 0; });
    auto s = sheafify(f);
    CHECK(s.sheaf.sections(sp.open_index(0b11)).size() == 3);
    CHECK(s.sheaf.sections(sp.open_index(0b01)).size() == 1);
    CHECK(f.is_sheaf());
  }
  SUBCASE("a sheaf is its own sheafification") {
    auto o = structure_sheaf(FiniteRing::integers_mod(30));
    auto s = sheafify(o.sheaf->sheaf);
    for (std::size_t u = 0; u < o.space.opens().size(); ++u) {
      std::set<std::size_t> img(s.comparison[u].begin(), s.comparison[u].end());
      CHECK(img.size() == o.sheaf->sheaf.sections(u).size());
      CHECK(img.size() == s.sheaf.sections(u).size());
    }
  }
}

TEST_CASE("sheaf images") {
  // a, b open; c, d closed, each in the closure of both
  auto sp = FiniteSpace::from_closures({"a", "b", "c", "d"}, {0b1101, 0b1110, 0b0100, 0b1000});
  REQUIRE(sp.opens().size() == 7);
  auto g = sheafify(constant_presheaf(sp, 2));
  const FinitePresheaf& target = g.sheaf;
  const auto& opens = sp.opens();
  const OpenSet v1 = 0b0111, v2 = 0b1011;

  SUBCASE("stalk-surjective map with a strict presheaf image") {
    std::vector<std::vector<std::string>> secs;
    for (OpenSet u : opens) {
      std::vector<std::string> s;
      for (int x = 0; x < ((u & ~v1) == 0 ? 2 : 1); ++x)
        for (int y = 0; y < ((u & ~v2) == 0 ? 2 : 1); ++y) s.push_back(std::to_string(x) + std::to_string(y));
      secs.push_back(s);
    }
    FinitePresheaf src(sp, secs, [&](std::size_t u, std::size_t v, std::size_t s) {
      auto it = std::find(secs[v].begin(), secs[v].end(), secs[u][s]);
      return static_cast<std::size_t>(it - secs[v].begin());
    });
    std::vector<std::vector<std::size_t>> maps(opens.size());
    for (std::size_t u = 0; u < opens.size(); ++u)
      for (auto& lab : secs[u]) maps[u].push_back(g.comparison[u][((lab[0] - '0') + (lab[1] - '0')) % 2]);
    auto im = sheaf_image(PresheafMorphism{src, target, maps});
    std::size_t whole = sp.open_index(sp.whole());
    CHECK(im.presheaf_image[whole].size() == 1);
    CHECK(im.sheaf_image[whole].size() == 2);
    CHECK(target.sections(whole).size() == 2);
  }
  SUBCASE("injective map") {
    std::vector<std::vector<std::size_t>> maps(opens.size());
    for (std::size_t u = 0; u < opens.size(); ++u)
      for (std::size_t s = 0; s < target.sections(u).size(); ++s) maps[u].push_back(s);
    auto im = sheaf_image(PresheafMorphism{target, target, maps});
    CHECK(im.presheaf_image == im.sheaf_image);
  }
  SUBCASE("zero map") {
    auto zero = constant_presheaf(sp, 1);
    std::vector<std::vector<std::size_t>> maps(opens.size());
    for (std::size_t u = 0; u < opens.size(); ++u) maps[u].push_back(g.comparison[u][0]);
    auto im = sheaf_image(PresheafMorphism{zero, target, maps});
    for (auto& s : im.sheaf_image) CHECK(s.size() == 1);
  }
}

TEST_CASE("structure sheaves of finite rings") {
  for (auto& a : example_rings()) {
    auto o = structure_sheaf(a);
    CAPTURE(a.name);
    CHECK(o.sheaf->sheaf.is_sheaf());
    CHECK(o.sections(0).size() == 1);
    CHECK(o.sections(o.space.whole()).size() == a.size());
    for (std::size_t f = 0; f < a.size(); ++f) {
      auto cert = certify_basic_open(o, f);
      CHECK(cert.verify());
      CHECK(cert.sections_size == fraction_oracle(a, f));
    }
  }
  auto z12 = structure_sheaf(parse_algebra("ZZ/12"));
  CHECK(z12.space.points() == std::vector<std::string>{"x_2", "x_3"});
  // inverting 2 kills the 2-primary part, inverting 3 the 3-primary part
  CHECK(z12.sections(z12.basic_open(2)).size() == 3);
  CHECK(z12.sections(z12.basic_open(3)).size() == 4);
  auto dual = structure_sheaf(parse_algebra("GF(5)[e]/(e^2)"));
  CHECK(dual.space.size() == 1);
  auto prod = structure_sheaf(FiniteRing::product(FiniteRing::integers_mod(7), FiniteRing::integers_mod(5)));
  REQUIRE(prod.space.size() == 2);
  CHECK(prod.sections(0b01).size() * prod.sections(0b10).size() == 35);
  CHECK_THROWS_AS(structure_sheaf(parse_algebra("ZZ")), Error);
}

TEST_CASE("unit cocycles and twists") {
  SUBCASE("minus one on D(2), D(3) is a coboundary") {
    auto o = std::make_shared<const StructureSheaf>(structure_sheaf(FiniteRing::integers_mod(36)));
    OpenSet d2 = o->basic_open(2), d3 = o->basic_open(3);
    OpenSet all = o->space.whole();
    auto c = two_cover_cocycle(*o, all, d3, o->sections(all & d3).neg(o->sections(all & d3).one));
    CHECK(is_cocycle(*o, c));
    CHECK(trivialization(*o, c).has_value());
    CHECK(coboundary(*o, c.cover, {o->global_to(all, 1), o->global_to(d3, 35)}).f == c.f);
    CHECK((d2 | d3) == all);
  }
  for (auto& a : example_rings()) {
    CAPTURE(a.name);
    auto o = std::make_shared<const StructureSheaf>(structure_sheaf(a));
    for (auto [u0, u1] : two_covers(o->space)) {
      auto l0 = trivial_bundle(o, {u0, u1});
      CHECK(l0.locally_trivial());
      const FiniteRing& overlap = o->sections(u0 & u1);
      auto units = overlap.units();
      for (auto u : units) {
        auto c = two_cover_cocycle(*o, u0, u1, u);
        auto l = twist_by_cocycle(l0, c);
        CHECK(l.locally_trivial());
        CHECK(cohomologous(*o, cocycle_of(l), c));
        // twisting by c then c' is twisting by c c'
        auto c2 = two_cover_cocycle(*o, u0, u1, units[units.size() / 2]);
        CHECK(twist_by_cocycle(l, c2).cocycle().f == multiply(*o, c, c2).f);
      }
      // a coboundary does not change the class
      auto cb = coboundary(*o, {u0, u1}, {o->sections(u0).units().back(), o->sections(u1).units().front()});
      CHECK(cohomologous(*o, cb, l0.cocycle()));
    }
  }
  auto o = std::make_shared<const StructureSheaf>(structure_sheaf(FiniteRing::integers_mod(12)));
  auto l0 = trivial_bundle(o, {o->space.whole()});
  UnitCocycle bad{{o->space.whole()}, {{{0, 0}, 2}}};
  CHECK_THROWS_AS(twist_by_cocycle(l0, bad), Error);
}
