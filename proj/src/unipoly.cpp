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

#include <algorithm>

#include "schemex/arith.hpp"

namespace schemex {

UniPoly::UniPoly(Domain d, std::vector<Scalar> coeffs) : dom(std::move(d)), c(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c.empty() && dom.is_zero(c.back())) c.pop_back();
}

UniPoly UniPoly::constant(const Domain& d, const Scalar& a) { return UniPoly(d, {a}); }

UniPoly UniPoly::monomial(const Domain& d, const Scalar& a, std::size_t deg) {
  std::vector<Scalar> v(deg + 1, d.zero());
  v[deg] = a;
  return UniPoly(d, std::move(v));
}

UniPoly UniPoly::from_ints(const Domain& d, const std::vector<long>& coeffs) {
  std::vector<Scalar> v;
  for (long x : coeffs) v.push_back(d.from_int(x));
  return UniPoly(d, std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (dom.is_zero(c[k])) continue;
    Scalar coef = c[k];
    std::string cs = dom.to_string(coef);
    bool negative = !dom.needs_parens(coef) && !cs.empty() && cs[0] == '-';
    if (negative) cs = dom.to_string(dom.neg(coef));
    if (dom.needs_parens(coef)) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (var + (k > 1 ? "^" + std::to_string(k) : ""));
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = cs + "*" + mono;
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const Domain& d = a.dom;
  std::vector<Scalar> v(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = d.add(a.coeff(i), b.coeff(i));
  return UniPoly(d, std::move(v));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Scalar> v;
  for (auto& x : a.c) v.push_back(a.dom.neg(x));
  return UniPoly(a.dom, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const Domain& d = a.dom;
  if (a.is_zero() || b.is_zero()) return UniPoly(d);
  std::vector<Scalar> v(a.c.size() + b.c.size() - 1, d.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (d.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = d.add(v[i + j], d.mul(a.c[i], b.c[j]));
  }
  return UniPoly(d, std::move(v));
}

UniPoly scale(const UniPoly& a, const Scalar& s) {
  std::vector<Scalar> v;
  for (auto& x : a.c) v.push_back(a.dom.mul(x, s));
  return UniPoly(a.dom, std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  const Domain& d = a.dom;
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
  if (!d.is_unit(b.lead())) fail(ErrorCode::NotInvertible, "divisor leading coefficient is not a unit");
  UniPoly r = a;
  if (r.degree() < b.degree()) return {UniPoly(d), r};
  std::vector<Scalar> q(r.c.size() - b.c.size() + 1, d.zero());
  Scalar il = d.inv(b.lead());
  for (long k = r.degree(); k >= b.degree(); --k) {
    if (static_cast<std::size_t>(k) >= r.c.size() || d.is_zero(r.c[k])) continue;
    Scalar f = d.mul(r.c[k], il);
    std::size_t shift = static_cast<std::size_t>(k - b.degree());
    q[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = d.sub(r.c[shift + j], d.mul(f, b.c[j]));
  }
  r.trim();
  return {UniPoly(d, std::move(q)), r};
}

UniPoly monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.dom.inv(a.lead()));
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
  UniPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b) {
  const Domain& d = a.dom;
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(d, d.one()), s1(d);
  UniPoly t0(d), t1 = UniPoly::constant(d, d.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar il = d.inv(r0.lead());
  return {scale(r0, il), scale(s0, il), scale(t0, il)};
}

UniPoly derivative(const UniPoly& a) {
  std::vector<Scalar> v;
  for (std::size_t i = 1; i < a.c.size(); ++i) v.push_back(a.dom.mul(a.dom.from_integer(Integer(static_cast<unsigned long>(i))), a.c[i]));
  return UniPoly(a.dom, std::move(v));
}

UniPoly powmod(const UniPoly& base, const Integer& e, const UniPoly& mod) {
  UniPoly result = UniPoly::constant(base.dom, base.dom.one());
  UniPoly b = divmod(base, mod).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, mod).second;
  }
  return divmod(result, mod).second;
}

Scalar evaluate(const UniPoly& a, const Scalar& x) {
  Scalar acc = a.dom.zero();
  for (std::size_t k = a.c.size(); k-- > 0;) acc = a.dom.add(a.dom.mul(acc, x), a.c[k]);
  return acc;
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
  UniPoly acc(outer.dom);
  for (std::size_t k = outer.c.size(); k-- > 0;) acc = acc * inner + UniPoly::constant(outer.dom, outer.c[k]);
  return acc;
}

UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly r = UniPoly::constant(a.dom, a.dom.one());
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

bool uni_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.c.size(); k-- > 0;) {
    if (a.c[k] != b.c[k]) return scalar_less(a.c[k], b.c[k]);
  }
  return false;
}

UniPoly UniFactorization::expand(const Domain& d) const {
  UniPoly r = UniPoly::constant(d, unit);
  for (auto& [f, m] : factors) r = r * pow(f, m);
  return r;
}

}  // namespace schemex
