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

// Dense univariate polynomials over a prime field (QQ when p == 0, GF(p)
// otherwise).  Internal to the arithmetic layer; coefficients are mpq values
// that are integers in [0, p) for p > 0.

#pragma once

#include <string>
#include <utility>

#include "schemex/arith.hpp"

namespace schemex::dense {

struct Char {
  Integer p;  // 0 means QQ
};

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Rational norm(const Rational& a, const Char& ch) {
  if (ch.p == 0) return a;
  if (a.get_den() == 1) return Rational(mod(a.get_num(), ch.p));
  Integer inv;
  Integer den = mod(a.get_den(), ch.p);
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ch.p.get_mpz_t()) == 0)
    fail(ErrorCode::NotInvertible, "denominator not invertible mod " + ch.p.get_str());
  return Rational(mod(a.get_num() * inv, ch.p));
}

inline Rational inverse(const Rational& a, const Char& ch) {
  if (a == 0) fail(ErrorCode::NotInvertible, "division by zero");
  if (ch.p == 0) return 1 / a;
  Integer inv;
  Integer v = a.get_num();
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), ch.p.get_mpz_t()) == 0)
    fail(ErrorCode::NotInvertible, "not invertible mod " + ch.p.get_str());
  return Rational(inv);
}

inline DenseVec trim(DenseVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline DenseVec reduce(const DenseVec& v, const Char& ch) {
  DenseVec out;
  out.reserve(v.size());
  for (auto& c : v) out.push_back(norm(c, ch));
  return trim(std::move(out));
}

inline DenseVec add(const DenseVec& a, const DenseVec& b, const Char& ch) {
  DenseVec out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational s = (i < a.size() ? a[i] : Rational(0)) + (i < b.size() ? b[i] : Rational(0));
    out[i] = ch.p == 0 ? s : norm(s, ch);
  }
  return trim(std::move(out));
}

inline DenseVec neg(const DenseVec& a, const Char& ch) {
  DenseVec out;
  out.reserve(a.size());
  for (auto& c : a) out.push_back(ch.p == 0 ? Rational(-c) : norm(-c, ch));
  return out;
}

inline DenseVec sub(const DenseVec& a, const DenseVec& b, const Char& ch) { return add(a, neg(b, ch), ch); }

inline DenseVec scale(const DenseVec& a, const Rational& s, const Char& ch) {
  if (s == 0) return {};
  DenseVec out;
  out.reserve(a.size());
  for (auto& c : a) out.push_back(ch.p == 0 ? Rational(c * s) : norm(c * s, ch));
  return trim(std::move(out));
}

inline DenseVec mul(const DenseVec& a, const DenseVec& b, const Char& ch) {
  if (a.empty() || b.empty()) return {};
  DenseVec out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  if (ch.p != 0)
    for (auto& c : out) c = norm(c, ch);
  return trim(std::move(out));
}

inline std::pair<DenseVec, DenseVec> divmod(const DenseVec& a, const DenseVec& b, const Char& ch) {
  if (b.empty()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
  DenseVec r = a;
  if (r.size() < b.size()) return {{}, r};
  DenseVec q(r.size() - b.size() + 1, Rational(0));
  Rational il = inverse(b.back(), ch);
  const long bl = static_cast<long>(b.size()) - 1;
  for (long k = static_cast<long>(r.size()) - 1; k >= bl; --k) {
    if (r[k] == 0) continue;
    Rational f = ch.p == 0 ? Rational(r[k] * il) : norm(r[k] * il, ch);
    std::size_t shift = static_cast<std::size_t>(k - bl);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] -= f * b[j];
      if (ch.p != 0) r[shift + j] = norm(r[shift + j], ch);
    }
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

inline DenseVec rem(const DenseVec& a, const DenseVec& m, const Char& ch) {
  if (a.size() < m.size()) return a;
  return divmod(a, m, ch).second;
}

inline DenseVec monic(const DenseVec& a, const Char& ch) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), ch), ch);
}

inline DenseVec gcd(DenseVec a, DenseVec b, const Char& ch) {
  while (!b.empty()) {
    DenseVec r = divmod(a, b, ch).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, ch);
}

/// Inverse of a modulo m (m irreducible or a coprime to m).
inline DenseVec inverse_mod(const DenseVec& a, const DenseVec& m, const Char& ch) {
  DenseVec r0 = m, r1 = rem(a, m, ch);
  DenseVec s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, ch);
    DenseVec s = sub(s0, mul(q, s1, ch), ch);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) fail(ErrorCode::NotInvertible, "element is not invertible modulo the defining polynomial");
  return rem(scale(s0, inverse(r0[0], ch), ch), m, ch);
}

inline bool is_monomial(const DenseVec& a) {
  int n = 0;
  for (auto& c : a)
    if (c != 0) ++n;
  return n == 1;
}

/// Descending-degree rendering, e.g. "t^2 + 1" (spaced) or "t^2+1".
inline std::string to_string(const DenseVec& a, const std::string& var, bool spaced) {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    const Rational& c = a[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational m = negative ? Rational(-c) : c;
    std::string body;
    if (k == 0) {
      body = m.get_str();
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      body = (m == 1) ? mono : m.get_str() + "*" + mono;
    }
    if (first) {
      out += (negative ? "-" : "") + body;
    } else if (spaced) {
      out += (negative ? " - " : " + ") + body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace schemex::dense
