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

#include "schemex/groebner.hpp"

#include <algorithm>
#include <set>

namespace schemex {

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Elem {
  Poly p;
  std::vector<Poly> cof;  // p = sum cof_i * gens_i when tracking
};

/// Full reduction of f by G.  When `quot` is non-null it receives the
/// multiplier of each element of G.
Poly reduce_by(const Poly& f, const std::vector<Elem>& G, std::vector<Poly>* quot) {
  const PolyRing& r = f.ring();
  const Domain& d = r.domain();
  Poly p = f;
  std::vector<Term> rest;
  if (quot) quot->assign(G.size(), Poly(r));
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const Term& g = G[k].p.lead();
      if (!monomial_divides(g.m, lt.m)) continue;
      Monomial q = quotient(lt.m, g.m);
      Scalar c = d.div(lt.c, g.c);
      if (quot) (*quot)[k] = (*quot)[k] + Poly::monomial(r, q, c);
      p = p - G[k].p.mul_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.push_back(lt);
      p = p - Poly::monomial(r, lt.m, lt.c);
    }
  }
  return Poly::from_terms(r, std::move(rest));
}

Poly spoly(const Poly& a, const Poly& b) {
  const Domain& d = a.domain();
  Monomial l = lcm(a.lead().m, b.lead().m);
  return a.mul_term(quotient(l, a.lead().m), d.inv(a.lead().c)) - b.mul_term(quotient(l, b.lead().m), d.inv(b.lead().c));
}

std::vector<Elem> buchberger(const PolyRing& ring, const std::vector<Poly>& gens, bool track) {
  const Domain& d = ring.domain();
  if (!d.is_field()) fail(ErrorCode::NonFieldBase, "Groebner bases need a field of coefficients, got " + d.name());
  std::vector<Elem> G;
  auto unit_cof = [&](std::size_t i) {
    std::vector<Poly> c(gens.size(), Poly(ring));
    c[i] = Poly::constant(ring, d.one());
    return c;
  };
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](Elem e) {
    Scalar il = d.inv(e.p.lead().c);
    e.p = e.p.scale(il);
    for (auto& c : e.cof) c = c.scale(il);
    std::size_t n = G.size();
    G.push_back(std::move(e));
    for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].ring() != ring) fail(ErrorCode::InvalidArgument, "generator outside the ring " + ring.name());
    if (gens[i].is_zero()) continue;
    std::vector<Poly> q;
    Poly r = reduce_by(gens[i], G, track ? &q : nullptr);
    if (r.is_zero()) continue;
    Elem e{r, {}};
    if (track) {
      e.cof = unit_cof(i);
      for (std::size_t k = 0; k < q.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) e.cof[j] = e.cof[j] - q[k] * G[k].cof[j];
    }
    add(std::move(e));
    if (G.back().p.is_constant()) return G;
  }
  while (!pending.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = pending.begin();
    Monomial best_l = lcm(G[best->first].p.lead().m, G[best->second].p.lead().m);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(G[it->first].p.lead().m, G[it->second].p.lead().m);
      if (ring.compare(l, best_l) < 0) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Monomial& mi = G[i].p.lead().m;
    const Monomial& mj = G[j].p.lead().m;
    if (coprime(mi, mj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!monomial_divides(G[k].p.lead().m, best_l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
    }
    if (chain) continue;
    Poly s = spoly(G[i].p, G[j].p);
    std::vector<Poly> q;
    Poly r = reduce_by(s, G, track ? &q : nullptr);
    if (r.is_zero()) continue;
    Elem e{r, {}};
    if (track) {
      const Domain& dd = d;
      Monomial l = best_l;
      Poly ai = Poly::monomial(ring, quotient(l, mi), dd.inv(G[i].p.lead().c));
      Poly aj = Poly::monomial(ring, quotient(l, mj), dd.inv(G[j].p.lead().c));
      e.cof.assign(gens.size(), Poly(ring));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        e.cof[g] = ai * G[i].cof[g] - aj * G[j].cof[g];
        for (std::size_t k = 0; k < q.size(); ++k) e.cof[g] = e.cof[g] - q[k] * G[k].cof[g];
      }
    }
    add(std::move(e));
    if (G.back().p.is_constant()) return G;
  }
  return G;
}

}  // namespace

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

Poly GroebnerBasis::reduce(const Poly& f) const {
  if (f.ring() != ring_) fail(ErrorCode::InvalidArgument, "reduction outside the ring " + ring_.name());
  std::vector<Elem> G;
  G.reserve(basis_.size());
  for (auto& b : basis_) G.push_back(Elem{b, {}});
  return reduce_by(f, G, nullptr);
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials() const {
  const std::size_t n = ring_.nvars();
  if (is_unit()) return std::vector<Monomial>{};
  std::vector<unsigned> bound(n, 0);
  for (auto& b : basis_) {
    const Monomial& m = b.lead().m;
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++nz;
        idx = i;
      }
    if (nz == 1 && (bound[idx] == 0 || m[idx] < bound[idx])) bound[idx] = m[idx];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0) return std::nullopt;
  std::vector<Monomial> out;
  Monomial m(n, 0);
  for (;;) {
    bool standard = true;
    for (auto& b : basis_)
      if (monomial_divides(b.lead().m, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == bound[i]) m[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring_.compare(a, b) < 0; });
  return out;
}

GroebnerBasis groebner(const PolyRing& ring, const std::vector<Poly>& gens) {
  std::vector<Elem> G = buchberger(ring, gens, false);
  // minimal basis
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = G[j].p.lead().m;
      const Monomial& b = G[i].p.lead().m;
      if (monomial_divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i].p);
  }
  // auto-reduction
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(Elem{minimal[j], {}});
    reduced.push_back(reduce_by(minimal[i], others, nullptr).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return ring.compare(a.lead().m, b.lead().m) < 0; });
  return GroebnerBasis(ring, std::move(reduced));
}

std::optional<std::vector<Poly>> lift(const PolyRing& ring, const std::vector<Poly>& gens, const Poly& f) {
  std::vector<Elem> G = buchberger(ring, gens, true);
  std::vector<Poly> q;
  Poly r = reduce_by(f, G, &q);
  if (!r.is_zero()) return std::nullopt;
  std::vector<Poly> out(gens.size(), Poly(ring));
  for (std::size_t k = 0; k < G.size(); ++k)
    for (std::size_t j = 0; j < gens.size(); ++j) out[j] = out[j] + q[k] * G[k].cof[j];
  return out;
}

std::vector<Poly> eliminate(const PolyRing& ring, const std::vector<Poly>& gens, const PolyRing& sub) {
  std::vector<std::string> order;
  for (auto& v : ring.vars())
    if (!sub.index_of(v)) order.push_back(v);
  std::size_t nelim = order.size();
  for (auto& v : ring.vars())
    if (sub.index_of(v)) order.push_back(v);
  for (auto& v : sub.vars())
    if (!ring.index_of(v)) fail(ErrorCode::InvalidArgument, "kept variable " + v + " is not in " + ring.name());
  PolyRing block(ring.domain(), order, TermOrder::Block, nelim);
  std::vector<Poly> moved;
  for (auto& g : gens) moved.push_back(embed(g, block));
  GroebnerBasis gb = groebner(block, moved);
  std::vector<Poly> out;
  for (auto& b : gb.basis()) {
    bool pure = true;
    for (auto& t : b.terms())
      for (std::size_t i = 0; i < nelim; ++i) pure = pure && t.m[i] == 0;
    if (pure) out.push_back(embed(b, sub).monic());
  }
  return out;
}

}  // namespace schemex
