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

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "schemex/arith.hpp"

using namespace schemex;

namespace {

UniPoly P(const Domain& d, std::vector<long> c) { return UniPoly::from_ints(d, c); }

// Oracle: f over GF(p) is irreducible iff no monic polynomial of degree
// 1..deg/2 divides it.  Enumerates all such divisors by their coefficient
// digits base p.
bool brute_irreducible(const UniPoly& f) {
  const Domain& d = f.dom;
  long p = d.modulus().get_si();
  for (long k = 1; 2 * k <= f.degree(); ++k) {
    long total = 1;
    for (long i = 0; i < k; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      std::vector<long> c;
      long x = code;
      for (long i = 0; i < k; ++i) {
        c.push_back(x % p);
        x /= p;
      }
      c.push_back(1);
      if (divmod(f, P(d, c)).second.is_zero()) return false;
    }
  }
  return true;
}

UniPoly random_poly(const Domain& d, long deg, std::mt19937_64& g) {
  long p = d.modulus().get_si();
  std::vector<long> c;
  for (long i = 0; i < deg; ++i) c.push_back(static_cast<long>(g() % p));
  c.push_back(1 + static_cast<long>(g() % (p - 1)));
  return P(d, c);
}

std::map<std::string, unsigned> as_multiset(const UniFactorization& f) {
  std::map<std::string, unsigned> m;
  for (auto& [g, e] : f.factors) m[g.to_string()] += e;
  return m;
}

}  // namespace

TEST_CASE("domains and their elements") {
  Domain z12 = Domain::integers_mod(12);
  CHECK(z12.kind() == DomainKind::IntegersMod);
  CHECK_FALSE(z12.is_field());
  Domain z7 = Domain::integers_mod(7);
  CHECK(z7.kind() == DomainKind::PrimeField);
  CHECK(z7.is_field());
  CHECK(z7.name() == "GF(7)");
  CHECK_THROWS_AS(Domain::prime_field(9), Error);

  Domain q = Domain::rationals();
  Scalar h = q.from_rational(Rational(1, 2));
  CHECK(q.to_string(q.add(h, h)) == "1");
  CHECK(q.to_string(q.neg(h)) == "-1/2");

  Domain gf9 = Domain::finite_field(3, {1, 0, 1});
  CHECK(gf9.cardinality() == 9);
  CHECK(gf9.name() == "GF(9,t^2+1)");
  Scalar t = gf9.generator();
  CHECK(gf9.is_one(gf9.neg(gf9.mul(t, t))));
  CHECK(gf9.elements().size() == 9);
  for (auto& [u, v] : gf9.units()) CHECK(gf9.is_one(gf9.mul(u, v)));
  CHECK_THROWS_AS(Domain::finite_field(5, {1, 0, 1}), Error);  // t^2+1 = (t-2)(t-3) mod 5

  Domain qi = Domain::number_field({1, 0, 1}, "i");
  Scalar i = qi.generator();
  CHECK(qi.to_string(qi.mul(i, i)) == "-1");
  CHECK(qi.to_string(qi.inv(qi.add(qi.one(), i))) == "-1/2*i + 1/2");

  Domain ft = Domain::function_field(2, "t");
  Scalar tt = ft.generator();
  Scalar x = ft.div(ft.one(), ft.add(tt, ft.one()));
  CHECK(ft.to_string(x) == "1/(t + 1)");
  CHECK(ft.is_one(ft.mul(x, ft.add(tt, ft.one()))));
}

TEST_CASE("domain units") {
  auto units = domain_units(Domain::integers_mod(12));
  std::vector<long> got;
  for (auto& [u, v] : units) got.push_back(Domain::integers_mod(12).as_integer(u).get_si());
  // oracle: gcd scan
  std::vector<long> want;
  for (long a = 0; a < 12; ++a)
    if (std::gcd(a, 12L) == 1) want.push_back(a);
  CHECK(got == want);
  CHECK(domain_units(Domain::prime_field(7)).size() == 6);
  CHECK(domain_units(Domain::integers_mod(2)).size() == 1);
  CHECK_THROWS_AS(domain_units(Domain::rationals()), Error);
}

TEST_CASE("integer primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  Integer big("170141183460469231731687303715884105727");  // 2^127 - 1
  CHECK(is_prime(big));
  CHECK_FALSE(is_prime(big * 3));
  auto f = factor_integer(Integer(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Integer(2), 3u));
  CHECK(f[1] == std::make_pair(Integer(3), 2u));
  CHECK(f[2] == std::make_pair(Integer(5), 1u));
  auto g = factor_integer(Integer(1000003) * Integer(998244353));
  REQUIRE(g.size() == 2);
  CHECK(g[1].first == 998244353);
}

TEST_CASE("factorization examples over finite fields") {
  Domain f5 = Domain::prime_field(5), f3 = Domain::prime_field(3), f11 = Domain::prime_field(11);
  auto a = factor_univariate(P(f5, {1, 0, 1}));
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].first.to_string("T") == "T + 2");
  CHECK(a.factors[1].first.to_string("T") == "T + 3");
  CHECK(is_irreducible(P(f3, {1, 0, 1})));
  // X^2+3X-6 = (X-4)^2 mod 11
  auto b = factor_univariate(P(f11, {-6, 3, 1}));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].first.to_string("X") == "X + 7");
  CHECK(b.factors[0].second == 2);
  CHECK_FALSE(is_irreducible(P(f11, {-6, 3, 1})));
  // inseparable parts: (X^2+1)^4 over GF(2) = (X+1)^8
  Domain f2 = Domain::prime_field(2);
  auto c = factor_univariate(pow(P(f2, {1, 0, 1}), 4));
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].second == 8);
  CHECK_THROWS_AS(factor_univariate(UniPoly(f5)), Error);
  CHECK_THROWS_AS(factor_univariate(P(Domain::integers_mod(6), {1, 1})), Error);
  CHECK_THROWS_AS(is_irreducible(P(f5, {3})), Error);
}

TEST_CASE("factorization over GF(q)") {
  Domain gf4 = Domain::finite_field(2, {1, 1, 1});
  // X^4 - X splits into the four elements of GF(4)
  auto f = factor_univariate(P(gf4, {0, -1, 0, 0, 1}));
  CHECK(f.factors.size() == 4);
  CHECK(f.expand(gf4) == P(gf4, {0, -1, 0, 0, 1}));
  Domain gf9 = Domain::finite_field(3, {1, 0, 1});
  auto g = factor_univariate(P(gf9, {1, 0, 1}));
  CHECK(g.factors.size() == 2);
  // X^9 - X splits completely over GF(9)
  std::vector<long> c(10, 0);
  c[1] = -1;
  c[9] = 1;
  CHECK(roots(P(gf9, c)).size() == 9);
}

TEST_CASE("property: irreducibility agrees with exhaustive trial division") {
  std::mt19937_64 g(7);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    Domain fp = Domain::prime_field(p);
    for (int trial = 0; trial < 30; ++trial) {
      long deg = 1 + static_cast<long>(g() % 6);
      UniPoly f = random_poly(fp, deg, g);
      CHECK(is_irreducible(f) == brute_irreducible(f));
    }
  }
}

TEST_CASE("property: factor(fg) merges factor(f) and factor(g)") {
  std::mt19937_64 g(11);
  for (long p : {2L, 3L, 7L, 31L, 97L}) {
    Domain fp = Domain::prime_field(p);
    for (int trial = 0; trial < 12; ++trial) {
      UniPoly a = random_poly(fp, 1 + static_cast<long>(g() % 8), g);
      UniPoly b = random_poly(fp, 1 + static_cast<long>(g() % 8), g);
      auto fa = factor_univariate(a), fb = factor_univariate(b), fab = factor_univariate(a * b);
      auto m = as_multiset(fa);
      for (auto& [k, v] : as_multiset(fb)) m[k] += v;
      CHECK(m == as_multiset(fab));
      CHECK(fab.expand(fp) == a * b);
      for (auto& [h, e] : fab.factors)
        if (std::pow(double(p), double(h.degree() / 2)) <= 1e4) CHECK(brute_irreducible(h));
    }
  }
}

TEST_CASE("factorization over QQ") {
  Domain q = Domain::rationals();
  CHECK(is_irreducible(P(q, {-3, 18, 6})));  // discriminant 396 is not a square
  auto f = factor_univariate(P(q, {-2, 0, 1}));
  CHECK(f.factors.size() == 1);
  // (X-1)^2 (X+2) (2X+3) (X^2+X+1)
  UniPoly g = pow(P(q, {-1, 1}), 2) * P(q, {2, 1}) * P(q, {3, 2}) * P(q, {1, 1, 1});
  auto fg = factor_univariate(g);
  CHECK(fg.expand(q) == g);
  REQUIRE(fg.factors.size() == 4);
  CHECK(fg.factors[0].first.to_string("X") == "X - 1");
  CHECK(fg.factors[0].second == 2);
  CHECK(fg.factors[1].first.to_string("X") == "X + 3/2");
  CHECK(fg.factors[2].first.to_string("X") == "X + 2");
  CHECK(fg.factors[3].first.to_string("X") == "X^2 + X + 1");
  // Swinnerton-Dyer style: X^4 - 10X^2 + 1 is irreducible but splits mod every prime
  CHECK(is_irreducible(P(q, {1, 0, -10, 0, 1})));
  // X^8 - 1 = (X-1)(X+1)(X^2+1)(X^4+1)
  CHECK(factor_univariate(P(q, {-1, 0, 0, 0, 0, 0, 0, 0, 1})).factors.size() == 4);
  // product of large-coefficient factors
  UniPoly h = P(q, {12345, -678, 91}) * P(q, {-1000003, 0, 0, 17});
  auto fh = factor_univariate(h);
  CHECK(fh.factors.size() == 2);
  CHECK(fh.expand(q) == h);
  std::vector<long> big(26, 0);
  big[0] = 1;
  big[25] = 1;
  CHECK_THROWS_AS(factor_univariate(P(q, big)), Error);
}

TEST_CASE("property: rational factorization reassembles random products") {
  std::mt19937_64 g(3);
  Domain q = Domain::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly prod = UniPoly::constant(q, q.from_int(static_cast<long>(g() % 5) + 1));
    for (int k = 0; k < 3; ++k) {
      std::vector<long> c;
      long deg = 1 + static_cast<long>(g() % 3);
      for (long i = 0; i <= deg; ++i) c.push_back(static_cast<long>(g() % 21) - 10);
      if (c.back() == 0) c.back() = 1;
      prod = prod * P(q, c);
    }
    auto f = factor_univariate(prod);
    CHECK(f.expand(q) == prod);
    for (auto& [h, e] : f.factors) CHECK(is_irreducible(h));
  }
}

TEST_CASE("factorization over number fields") {
  Domain qi = Domain::number_field({1, 0, 1}, "i");
  auto f = factor_univariate(P(qi, {1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first.to_string("X") == "X - i");
  CHECK(f.factors[1].first.to_string("X") == "X + i");
  CHECK(is_irreducible(P(qi, {-2, 0, 1})));
  // X^4 + 1 = (X^2 - i)(X^2 + i) over QQ(i)
  auto g = factor_univariate(P(qi, {1, 0, 0, 0, 1}));
  CHECK(g.factors.size() == 2);
  CHECK(g.expand(qi) == P(qi, {1, 0, 0, 0, 1}));
  Domain q2 = Domain::number_field({-2, 0, 1}, "s");
  auto h = factor_univariate(P(q2, {4, 0, -6, 0, 1}));  // X^4 - 6X^2 + 4 over QQ(sqrt 2)
  CHECK(h.expand(q2) == P(q2, {4, 0, -6, 0, 1}));
}

TEST_CASE("factorization over function fields") {
  Domain k = Domain::function_field(2, "t");
  Scalar t = k.generator();
  UniPoly x = UniPoly::x(k);
  UniPoly f = x * x - UniPoly::constant(k, t);
  CHECK(is_irreducible(f));
  CHECK(roots(f).empty());
  UniPoly g = x * x - UniPoly::constant(k, k.mul(t, t));
  auto fg = factor_univariate(g);
  REQUIRE(fg.factors.size() == 1);
  CHECK(fg.factors[0].second == 2);  // (X + t)^2 in characteristic 2
  Domain qt = Domain::function_field(0, "S");
  Scalar s = qt.generator();
  UniPoly y = UniPoly::x(qt);
  // S*T - 1 has the root 1/S
  auto r = roots(scale(y, s) - UniPoly::constant(qt, qt.one()));
  REQUIRE(r.size() == 1);
  CHECK(qt.to_string(r[0]) == "1/S");
  // (2T - S)(T + 3/S)
  UniPoly h = (scale(y, qt.from_int(2)) - UniPoly::constant(qt, s)) * (y + UniPoly::constant(qt, qt.div(qt.from_int(3), s)));
  auto fh = factor_univariate(h);
  CHECK(fh.factors.size() == 2);
  CHECK(fh.expand(qt) == h);
}
