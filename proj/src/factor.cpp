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

// Univariate factorization.
//
//   finite fields     squarefree + distinct-degree + Cantor-Zassenhaus
//   QQ                Yun squarefree, then Zassenhaus (Hensel lifting mod p^k
//                     and subset recombination) on primitive integer parts
//   QQ[a]/(m)         Trager: shift until the norm is squarefree, factor the
//                     norm over QQ, take gcds
//   k(t)              linear factors by a rational-root search over k[t];
//                     leftovers of degree <= 3 are irreducible

#include <algorithm>
#include <cmath>
#include <random>

#include "dense.hpp"
#include "schemex/arith.hpp"

namespace schemex {

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first

void sort_factors(std::vector<std::pair<UniPoly, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return uni_less(a.first, b.first);
    return a.second < b.second;
  });
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

bool is_one_poly(const UniPoly& a) { return a.degree() == 0 && a.dom.is_one(a.c[0]); }

// ---------------------------------------------------------------------------
// Finite fields

std::mt19937_64& rng() {
  thread_local std::mt19937_64 gen(0x5eedULL);
  return gen;
}

Scalar random_element(const Domain& d) {
  Integer q = d.cardinality();
  Integer idx;
  // q fits comfortably in 64 bits for every field we enumerate or split over
  std::uint64_t r = rng()();
  Integer rr;
  mpz_import(rr.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  idx = rr % q;
  return d.element_at(idx);
}

UniPoly random_poly(const Domain& d, long deg) {
  std::vector<Scalar> v;
  for (long i = 0; i <= deg; ++i) v.push_back(random_element(d));
  return UniPoly(d, std::move(v));
}

/// p-th root of a polynomial in X^p over a finite field.
UniPoly pth_root(const UniPoly& f) {
  const Domain& d = f.dom;
  Integer p = d.characteristic();
  Integer e = d.cardinality() / p;  // a^(q/p) is the p-th root of a
  std::vector<Scalar> v;
  unsigned long pp = p.get_ui();
  for (std::size_t i = 0; i < f.c.size(); i += pp) v.push_back(d.pow(f.c[i], e));
  return UniPoly(d, std::move(v));
}

std::vector<std::pair<UniPoly, unsigned>> sqf_finite(const UniPoly& f0) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = monic(f0);
  if (f.degree() < 1) return out;
  const Domain& d = f.dom;
  unsigned p = static_cast<unsigned>(d.characteristic().get_ui());
  UniPoly df = derivative(f);
  if (df.is_zero()) {
    for (auto& [g, m] : sqf_finite(pth_root(f))) out.emplace_back(g, m * p);
    return out;
  }
  UniPoly c = gcd(f, df);
  UniPoly w = exact_div(f, c);
  unsigned i = 1;
  while (!is_one_poly(w)) {
    UniPoly y = gcd(w, c);
    UniPoly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : sqf_finite(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<UniPoly, unsigned>> ddf(UniPoly f) {
  const Domain& d = f.dom;
  Integer q = d.cardinality();
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly x = UniPoly::x(d);
  UniPoly h = x;
  for (unsigned i = 1; 2 * static_cast<long>(i) <= f.degree(); ++i) {
    h = powmod(h, q, f);
    UniPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

/// Equal-degree splitting: f squarefree monic, all factors of degree k.
void edf(const UniPoly& f, unsigned k, std::vector<UniPoly>& out) {
  if (f.degree() == static_cast<long>(k)) {
    out.push_back(f);
    return;
  }
  const Domain& d = f.dom;
  Integer q = d.cardinality();
  Integer p = d.characteristic();
  for (;;) {
    UniPoly a = random_poly(d, f.degree() - 1);
    if (a.degree() < 1) continue;
    UniPoly b(d);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(m k - 1)) with q = 2^m
      unsigned long mk = static_cast<unsigned long>(mpz_sizeinbase(q.get_mpz_t(), 2) - 1) * k;
      UniPoly t = divmod(a, f).second;
      b = t;
      for (unsigned long i = 1; i < mk; ++i) {
        t = divmod(t * t, f).second;
        b = b + t;
      }
    } else {
      Integer e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), k);
      e = (e - 1) / 2;
      b = powmod(a, e, f) - UniPoly::constant(d, d.one());
    }
    UniPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, k, out);
      edf(exact_div(f, g), k, out);
      return;
    }
  }
}

std::vector<std::pair<UniPoly, unsigned>> factor_finite_monic(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  for (auto& [part, mult] : sqf_finite(f)) {
    for (auto& [g, k] : ddf(part)) {
      std::vector<UniPoly> pieces;
      edf(g, k, pieces);
      for (auto& pc : pieces) out.emplace_back(monic(pc), mult);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic zero squarefree decomposition (Yun)

std::vector<std::pair<UniPoly, unsigned>> sqf_yun(const UniPoly& f0) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly f = monic(f0);
  if (f.degree() < 1) return out;
  UniPoly df = derivative(f);
  UniPoly a = gcd(f, df);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(df, a);
  UniPoly dd = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(monic(g), i);
    b = exact_div(b, g);
    c = exact_div(dd, g);
    dd = c - derivative(b);
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = dense::mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly itrim(IntPoly v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

IntPoly imod(const IntPoly& a, const Integer& m) {
  IntPoly out;
  for (auto& c : a) out.push_back(dense::mod(c, m));
  return itrim(std::move(out));
}

IntPoly imul(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return imod(out, m);
}

IntPoly iadd(const IntPoly& a, const IntPoly& b, const Integer& m) {
  IntPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  return imod(out, m);
}

IntPoly isub(const IntPoly& a, const IntPoly& b, const Integer& m) {
  IntPoly nb;
  for (auto& c : b) nb.push_back(-c);
  return iadd(a, nb, m);
}

/// Division by a monic polynomial modulo m.
std::pair<IntPoly, IntPoly> idivmod_monic(const IntPoly& a, const IntPoly& b, const Integer& m) {
  IntPoly r = imod(a, m);
  if (r.size() < b.size()) return {{}, r};
  IntPoly q(r.size() - b.size() + 1, Integer(0));
  for (long k = static_cast<long>(r.size()) - 1; k >= static_cast<long>(b.size()) - 1; --k) {
    Integer f = dense::mod(r[k], m);
    if (f == 0) continue;
    std::size_t shift = static_cast<std::size_t>(k) - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = dense::mod(r[shift + j] - f * b[j], m);
  }
  return {itrim(std::move(q)), itrim(std::move(r))};
}

UniPoly to_fp(const IntPoly& a, const Domain& fp) {
  std::vector<Scalar> v;
  for (auto& c : a) v.push_back(fp.from_integer(c));
  return UniPoly(fp, std::move(v));
}

IntPoly from_fp(const UniPoly& a) {
  IntPoly v;
  for (auto& c : a.c) v.push_back(a.dom.as_integer(c));
  return v;
}

/// Lifts g = A*B mod p (A, B monic, coprime mod p; g monic mod p^k) to a
/// factorization modulo p^k by linear Hensel steps.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& g, IntPoly A, IntPoly B, const Integer& p, unsigned k) {
  Domain fp = Domain::prime_field(p);
  auto [one, s_fp, t_fp] = xgcd(to_fp(A, fp), to_fp(B, fp));
  IntPoly s = from_fp(s_fp), t = from_fp(t_fp);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Integer pj1 = pj * p;
    IntPoly diff = isub(g, imul(A, B, pj1), pj1);
    IntPoly e;
    for (auto& c : diff) e.push_back(dense::mod(c / pj, p));
    e = itrim(std::move(e));
    // A*tau + B*sigma = e mod p with deg sigma < deg A
    IntPoly te = imul(t, e, p);
    auto [qq, sigma] = idivmod_monic(te, A, p);
    IntPoly tau = iadd(imul(s, e, p), imul(qq, B, p), p);
    IntPoly sA, sB;
    for (auto& c : sigma) sA.push_back(c * pj);
    for (auto& c : tau) sB.push_back(c * pj);
    A = iadd(A, sA, pj1);
    B = iadd(B, sB, pj1);
    pj = pj1;
  }
  return {A, B};
}

/// Exact division over ZZ; nullopt when b does not divide a.
std::optional<IntPoly> idiv_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  if (r.size() < b.size()) return std::nullopt;
  IntPoly q(r.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  for (long k = static_cast<long>(r.size()) - 1; k >= static_cast<long>(b.size()) - 1; --k) {
    if (r[k] == 0) continue;
    if (r[k] % lb != 0) return std::nullopt;
    Integer f = r[k] / lb;
    std::size_t shift = static_cast<std::size_t>(k) - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
  }
  for (auto& c : r)
    if (c != 0) return std::nullopt;
  return itrim(std::move(q));
}

IntPoly primitive(IntPoly a) {
  Integer c = detail::content(a);
  if (c != 0 && c != 1)
    for (auto& x : a) x /= c;
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}


}  // namespace

namespace detail {

Integer content(const std::vector<Integer>& coeffs) {
  Integer g = 0;
  for (auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::vector<std::vector<Integer>> factor_squarefree_integer(const std::vector<Integer>& g0) {
  IntPoly g = primitive(itrim(g0));
  long n = static_cast<long>(g.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {g};
  if (n > kRationalFactorDegreeCap)
    fail(ErrorCode::UnsupportedDegree, "degree " + std::to_string(n) + " exceeds the rational factorization cap");

  // choose a prime: lc not divisible, squarefree reduction, fewest factors
  Integer best_p = 0;
  std::vector<UniPoly> best;
  int good = 0;
  for (Integer p = 3; good < 3; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (g.back() % p == 0) continue;
    Domain fp = Domain::prime_field(p);
    UniPoly gp = to_fp(g, fp);
    if (gcd(gp, derivative(gp)).degree() > 0) continue;
    ++good;
    std::vector<UniPoly> fs;
    for (auto& [f, m] : factor_finite_monic(monic(gp))) fs.push_back(f);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) return {g};
  }
  const Integer& p = best_p;

  // coefficient bound for lc * (any factor)
  Rational norm2 = 0;
  for (auto& c : g) norm2 += c * c;
  Integer root = sqrt(Integer(norm2.get_num())) + 1;
  Integer bound = abs(g.back()) * root;
  bound <<= static_cast<unsigned long>(n);
  unsigned k = 1;
  Integer pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  {
    Integer lc_inv;
    Integer lc = dense::mod(g.back(), pk);
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    IntPoly gm;
    for (auto& c : g) gm.push_back(c * lc_inv);
    gm = imod(gm, pk);
    IntPoly rest = gm;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
      IntPoly A = from_fp(best[i]);
      Domain fp = Domain::prime_field(p);
      UniPoly others = UniPoly::constant(fp, fp.one());
      for (std::size_t j = i + 1; j < best.size(); ++j) others = others * best[j];
      auto [Al, Bl] = hensel_lift(rest, A, from_fp(others), p, k);
      lifted.push_back(Al);
      rest = Bl;
    }
    lifted.push_back(rest);
  }

  // recombination
  std::vector<IntPoly> out;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  IntPoly cur = g;
  std::size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<bool> pick(idx.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      IntPoly h{dense::mod(cur.back(), pk)};
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (pick[i]) h = imul(h, lifted[idx[i]], pk);
      for (auto& c : h) c = symmetric(c, pk);
      h = primitive(itrim(h));
      if (auto q = idiv_exact(cur, h)) {
        out.push_back(h);
        cur = primitive(*q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (!pick[i]) keep.push_back(idx[i]);
        idx = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

}  // namespace detail

namespace {

std::vector<std::pair<UniPoly, unsigned>> factor_rational_monic(const UniPoly& f) {
  const Domain& qq = f.dom;
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (f.degree() > kRationalFactorDegreeCap)
    fail(ErrorCode::UnsupportedDegree, "degree " + std::to_string(f.degree()) + " exceeds the rational factorization cap");
  for (auto& [part, mult] : sqf_yun(f)) {
    Integer l = 1;
    for (auto& c : part.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), qq.as_rational(c).get_den().get_mpz_t());
    IntPoly ip;
    for (auto& c : part.c) ip.push_back(Integer(qq.as_rational(c) * l));
    for (auto& h : detail::factor_squarefree_integer(ip)) {
      std::vector<Scalar> v;
      for (auto& c : h) v.push_back(qq.from_integer(c));
      out.emplace_back(monic(UniPoly(qq, std::move(v))), mult);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number fields (Trager)

/// Resultant of two polynomials over QQ by the Euclidean recurrence.
Rational resultant_qq(DenseVec a, DenseVec b) {
  dense::Char ch{0};
  a = dense::trim(std::move(a));
  b = dense::trim(std::move(b));
  if (a.empty() || b.empty()) return 0;
  Rational acc = 1;
  for (;;) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    if (db == 0) {
      Rational r = 1;
      for (long i = 0; i < da; ++i) r *= b[0];
      return acc * r;
    }
    DenseVec r = dense::rem(a, b, ch);
    if (r.empty()) return 0;
    long dr = static_cast<long>(r.size()) - 1;
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    Rational lb = 1;
    for (long i = 0; i < da - dr; ++i) lb *= b.back();
    acc *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Norm N(x) = Res_t(m(t), G(x, t)) by evaluation at integer points.
DenseVec norm_poly(const UniPoly& g, const DenseVec& m) {
  const Domain& K = g.dom;
  long D = g.degree() * static_cast<long>(m.size() - 1);
  std::vector<Rational> xs, ys;
  for (long x0 = 0; x0 <= D; ++x0) {
    // G(x0, t) as a dense polynomial in t
    DenseVec acc;
    Rational xp = 1;
    for (auto& coef : g.c) {
      acc = dense::add(acc, dense::scale(coef.num, xp, dense::Char{0}), dense::Char{0});
      xp *= x0;
    }
    xs.push_back(Rational(x0));
    ys.push_back(resultant_qq(m, acc));
  }
  (void)K;
  // Newton interpolation
  std::vector<Rational> coef = ys;
  for (long j = 1; j <= D; ++j)
    for (long i = D; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  DenseVec result{coef[D]};
  for (long i = D - 1; i >= 0; --i) {
    // result = result * (x - xs[i]) + coef[i]
    DenseVec shifted(result.size() + 1, Rational(0));
    for (std::size_t j = 0; j < result.size(); ++j) {
      shifted[j + 1] += result[j];
      shifted[j] -= result[j] * xs[i];
    }
    shifted[0] += coef[i];
    result = dense::trim(std::move(shifted));
  }
  return result;
}

std::vector<UniPoly> trager_squarefree(const UniPoly& f) {
  const Domain& K = f.dom;
  Domain qq = Domain::rationals();
  if (f.degree() <= 1) return {f};
  UniPoly x = UniPoly::x(K);
  UniPoly a = UniPoly::constant(K, K.generator());
  for (long step = 0;; ++step) {
    long s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    UniPoly g = compose(f, x - scale(a, K.from_int(s)));
    DenseVec N = norm_poly(g, K.extension());
    UniPoly Nq(qq);
    for (auto& c : N) Nq.c.push_back(qq.from_rational(c));
    Nq.trim();
    if (gcd(Nq, derivative(Nq)).degree() > 0) continue;
    auto nf = factor_rational_monic(monic(Nq));
    if (nf.size() == 1) return {f};
    std::vector<UniPoly> out;
    UniPoly back = x + scale(a, K.from_int(s));
    for (auto& [Nj, m] : nf) {
      UniPoly NjK(K);
      for (auto& c : Nj.c) NjK.c.push_back(K.from_rational(qq.as_rational(c)));
      UniPoly h = gcd(g, NjK);
      if (h.degree() > 0) out.push_back(monic(compose(h, back)));
    }
    return out;
  }
}

std::vector<std::pair<UniPoly, unsigned>> factor_number_field_monic(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  for (auto& [part, mult] : sqf_yun(f))
    for (auto& h : trager_squarefree(part)) out.emplace_back(h, mult);
  return out;
}

// ---------------------------------------------------------------------------
// Function fields k(t)

/// Monic divisors of a nonzero polynomial over k (k = QQ or GF(p)).
std::vector<UniPoly> monic_divisors(const UniPoly& a) {
  auto fac = factor_univariate(a);
  std::vector<UniPoly> out{UniPoly::constant(a.dom, a.dom.one())};
  for (auto& [g, m] : fac.factors) {
    std::vector<UniPoly> next;
    for (auto& d : out) {
      UniPoly pw = d;
      for (unsigned e = 0; e <= m; ++e) {
        next.push_back(pw);
        pw = pw * g;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Roots in k(t) of a monic polynomial over k(t).
std::vector<Scalar> function_field_roots(const UniPoly& f) {
  const Domain& K = f.dom;
  Domain k = K.base_field();
  dense::Char ch{K.characteristic()};
  std::vector<Scalar> out;
  if (f.degree() < 1) return out;
  // clear denominators: F in k[t][X]
  DenseVec l{1};
  for (auto& c : f.c)
    if (!c.den.empty()) l = dense::mul(l, dense::divmod(c.den, dense::gcd(l, c.den, ch), ch).first, ch);
  std::vector<UniPoly> F;  // coefficients as polynomials in t over k
  for (auto& c : f.c) {
    Scalar s = K.mul(c, K.from_dense(l));
    UniPoly cp(k);
    for (auto& r : s.num) cp.c.push_back(k.from_rational(r));
    cp.trim();
    F.push_back(cp);
  }
  if (F[0].is_zero()) out.push_back(K.zero());
  std::size_t lo = 0;
  while (F[lo].is_zero()) ++lo;
  std::size_t n = F.size() - 1;
  if (lo == n) return out;
  for (auto& a : monic_divisors(F[lo])) {
    for (auto& b : monic_divisors(F[n])) {
      if (gcd(a, b).degree() > 0) continue;
      // G(u) = sum_i F_i a^(i-lo) b^(n-i) u^(i-lo); collect t-coefficients in k[u]
      std::vector<UniPoly> terms;
      for (std::size_t i = lo; i <= n; ++i) terms.push_back(F[i] * pow(a, static_cast<unsigned>(i - lo)) * pow(b, static_cast<unsigned>(n - i)));
      std::size_t tdeg = 0;
      for (auto& tm : terms) tdeg = std::max<std::size_t>(tdeg, tm.c.size());
      UniPoly H(k);
      bool first = true;
      for (std::size_t j = 0; j < tdeg; ++j) {
        std::vector<Scalar> hu;
        for (auto& tm : terms) hu.push_back(tm.coeff(j));
        UniPoly Hj(k, std::move(hu));
        if (Hj.is_zero()) continue;
        H = first ? monic(Hj) : gcd(H, Hj);
        first = false;
      }
      if (first || H.degree() < 1) continue;
      for (auto& u : roots(H)) {
        if (k.is_zero(u)) continue;
        DenseVec num;
        for (auto& c : a.c) num.push_back(c.num.empty() ? Rational(0) : c.num[0]);
        DenseVec den;
        for (auto& c : b.c) den.push_back(c.num.empty() ? Rational(0) : c.num[0]);
        num = dense::scale(num, u.num[0], ch);
        Scalar r = K.from_fraction(num, den);
        if (K.is_zero(evaluate(f, r)) && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end(), scalar_less);
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> factor_function_field_monic(UniPoly f) {
  const Domain& K = f.dom;
  std::vector<std::pair<UniPoly, unsigned>> out;
  for (auto& r : function_field_roots(f)) {
    UniPoly lin = UniPoly::x(K) - UniPoly::constant(K, r);
    unsigned m = 0;
    for (;;) {
      auto [q, rem] = divmod(f, lin);
      if (!rem.is_zero()) break;
      f = q;
      ++m;
    }
    out.emplace_back(lin, m);
  }
  if (f.degree() >= 4)
    fail(ErrorCode::FactorizationUnavailable, "no factorization algorithm over " + K.name() + " for a rootless factor of degree >= 4");
  if (f.degree() >= 1) out.emplace_back(monic(f), 1);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

UniFactorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  const Domain& d = f.dom;
  if (!d.is_field())
    fail(ErrorCode::UnsupportedDomain, "factorization requires a field, got " + d.name());
  UniFactorization out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;
  UniPoly g = monic(f);
  switch (d.kind()) {
    case DomainKind::PrimeField:
    case DomainKind::FiniteField:
      out.factors = factor_finite_monic(g);
      break;
    case DomainKind::Rationals:
      out.factors = factor_rational_monic(g);
      break;
    case DomainKind::NumberField:
      out.factors = factor_number_field_monic(g);
      break;
    case DomainKind::FunctionField:
      out.factors = factor_function_field_monic(g);
      break;
    default:
      fail(ErrorCode::UnsupportedDomain, "factorization unsupported over " + d.name());
  }
  // merge repeated factors (possible after p-th root recursion)
  sort_factors(out.factors);
  std::vector<std::pair<UniPoly, unsigned>> merged;
  for (auto& fm : out.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  out.factors = std::move(merged);
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::ConstantPolynomial, "irreducibility of a constant is undefined");
  if (f.degree() == 1) return true;
  auto fac = factor_univariate(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  const Domain& d = f.dom;
  if (!d.is_field()) fail(ErrorCode::UnsupportedDomain, "squarefree decomposition requires a field");
  if (d.is_finite()) return sqf_finite(f);
  if (d.characteristic() == 0) return sqf_yun(f);
  // GF(p)(t): separable part only; inseparable leftovers are reported whole
  auto parts = sqf_yun(f);
  UniPoly prod = UniPoly::constant(d, d.one());
  for (auto& [g, m] : parts) prod = prod * pow(g, m);
  if (prod != monic(f)) fail(ErrorCode::Unsupported, "inseparable squarefree decomposition over " + d.name());
  return parts;
}

std::vector<Scalar> roots(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Scalar> out;
  if (f.degree() < 1) return out;
  if (f.dom.kind() == DomainKind::FunctionField) return function_field_roots(monic(f));
  for (auto& [g, m] : factor_univariate(f).factors)
    if (g.degree() == 1) out.push_back(f.dom.neg(g.c[0]));
  std::sort(out.begin(), out.end(), scalar_less);
  return out;
}

}  // namespace schemex
