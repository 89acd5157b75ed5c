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

#include <map>
#include <random>

#include "doctest.h"
#include "schemex/groebner.hpp"

using namespace schemex;

namespace {

std::vector<Poly> parse_all(const PolyRing& r, std::initializer_list<const char*> xs) {
  std::vector<Poly> out;
  for (auto* x : xs) out.push_back(parse_poly(r, x));
  return out;
}

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

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned deg) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  for (;;) {
    unsigned s = 0;
    for (auto e : m) s += e;
    if (s <= deg) out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] > deg) m[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Independent oracle: f lies in the F_p-span of {m * g_i : deg(m g_i) <= D}.
// Only sound as a lower bound, so tests compare in the direction where the
// Groebner answer implies a bounded certificate.
bool in_span_mod_p(const std::vector<Poly>& gens, const Poly& f, unsigned D, long p) {
  const PolyRing& r = f.ring();
  std::map<Monomial, std::size_t> col;
  std::vector<std::map<std::size_t, long>> rows;
  auto to_row = [&](const Poly& q) {
    std::map<std::size_t, long> row;
    for (auto& t : q.terms()) {
      auto it = col.emplace(t.m, col.size()).first;
      long v = std::stol(r.domain().to_string(t.c));
      row[it->second] = ((v % p) + p) % p;
    }
    return row;
  };
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    for (auto& m : monomials_up_to(r.nvars(), D)) {
      Poly h = g.mul_term(m, r.domain().one());
      if (h.total_degree() <= static_cast<long>(D)) rows.push_back(to_row(h));
    }
  }
  auto target = to_row(f);
  // Gaussian elimination on rows, then reduce target.
  std::map<std::size_t, std::map<std::size_t, long>> pivots;
  auto inv = [&](long a) {
    long r0 = 1, e = p - 2, b = a;
    while (e) {
      if (e & 1) r0 = r0 * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r0;
  };
  auto reduce = [&](std::map<std::size_t, long> row) {
    for (;;) {
      while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
      if (row.empty()) return row;
      auto pv = pivots.find(row.begin()->first);
      if (pv == pivots.end()) return row;
      long c = row.begin()->second;
      for (auto& [k, v] : pv->second) row[k] = ((row[k] - c * v) % p + p) % p;
    }
  };
  for (auto& row : rows) {
    auto red = reduce(row);
    if (red.empty()) continue;
    long c = inv(red.begin()->second);
    for (auto& [k, v] : red) v = v * c % p;
    pivots[red.begin()->first] = red;
  }
  return reduce(target).empty();
}

}  // namespace

TEST_CASE("unit ideal and simple bases") {
  PolyRing x(Domain::rationals(), {"X"});
  auto gb = groebner(x, parse_all(x, {"X^2 + 1", "X + 2"}));
  CHECK(gb.is_unit());
  REQUIRE(gb.basis().size() == 1);
  CHECK(gb.basis()[0].to_string() == "1");
  CHECK(groebner(x, {}).is_zero_ideal());
  CHECK(groebner(x, {Poly(x)}).is_zero_ideal());

  PolyRing xy(Domain::rationals(), {"X", "Y"});
  auto h = groebner(xy, parse_all(xy, {"X*Y - 1", "X^2 - Y"}));
  CHECK(h.contains(parse_poly(xy, "Y^3 - 1")));
  CHECK(!h.contains(parse_poly(xy, "Y - 1")));
  auto sm = h.standard_monomials();
  REQUIRE(sm);
  CHECK(sm->size() == 3);

  auto c = groebner(xy, parse_all(xy, {"X*Y - 1"}));
  CHECK(!c.standard_monomials());
  CHECK(c.reduce(parse_poly(xy, "X^2*Y^2")).to_string() == "1");

  PolyRing zz(Domain::integers(), {"X"});
  CHECK_THROWS_AS(groebner(zz, parse_all(zz, {"2*X"})), Error);
}

TEST_CASE("reduced basis is canonical") {
  PolyRing r(Domain::rationals(), {"X", "Y", "Z"});
  auto a = groebner(r, parse_all(r, {"X^2 - Y", "Y^2 - Z", "X*Z - 1"}));
  auto b = groebner(r, parse_all(r, {"X^2 - Y + (X*Z - 1)", "Y^2 - Z", "X*Z - 1 + 3*(Y^2 - Z)"}));
  REQUIRE(a.basis().size() == b.basis().size());
  for (std::size_t i = 0; i < a.basis().size(); ++i) CHECK(a.basis()[i] == b.basis()[i]);
  for (auto& g : a.basis()) CHECK(g.lead().c == r.domain().one());
}

TEST_CASE("lift produces certificates") {
  PolyRing r(Domain::rationals(), {"X", "Y"});
  auto gens = parse_all(r, {"X^2 + 1", "X + 2"});
  auto c = lift(r, gens, Poly::from_int(r, 1));
  REQUIRE(c);
  CHECK((*c)[0] * gens[0] + (*c)[1] * gens[1] == Poly::from_int(r, 1));
  CHECK(!lift(r, parse_all(r, {"X*Y"}), parse_poly(r, "X")));

  std::mt19937_64 g(17);
  PolyRing f7(Domain::prime_field(7), {"A", "B", "C"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gs{random_poly(f7, 3, 3, g), random_poly(f7, 3, 3, g)};
    Poly f = random_poly(f7, 2, 2, g) * gs[0] + random_poly(f7, 2, 2, g) * gs[1];
    auto co = lift(f7, gs, f);
    REQUIRE(co);
    CHECK((*co)[0] * gs[0] + (*co)[1] * gs[1] == f);
  }
}

TEST_CASE("elimination") {
  PolyRing r(Domain::rationals(), {"S", "T", "X", "Y", "Z"});
  auto gens = parse_all(r, {"X - S^2", "Y - S*T", "Z - T^2"});
  PolyRing sub(Domain::rationals(), {"X", "Y", "Z"});
  auto e = eliminate(r, gens, sub);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == parse_poly(sub, "Y^2 - X*Z"));
}

TEST_CASE("property: membership agrees with bounded linear algebra over F5") {
  std::mt19937_64 g(23);
  PolyRing r(Domain::prime_field(5), {"X", "Y"});
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> gs{random_poly(r, 2, 3, g), random_poly(r, 2, 3, g)};
    auto gb = groebner(r, gs);
    Poly f = random_poly(r, 3, 3, g);
    if (trial % 2 == 0) f = random_poly(r, 1, 2, g) * gs[0] + random_poly(r, 1, 2, g) * gs[1];
    bool span = in_span_mod_p(gs, f, 7, 5);
    // A bounded span certificate always implies membership.
    if (span) CHECK(gb.contains(f));
    if (gb.contains(f)) ++positives;
    // Basis elements lie in the ideal, and every generator reduces to zero.
    for (auto& x : gs) CHECK(gb.contains(x));
    for (auto& b : gb.basis()) CHECK(in_span_mod_p(gs, b, 8, 5));
  }
  CHECK(positives >= 20);
}
