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

#include "schemex/noether.hpp"

#include <map>

#include "linalg.hpp"

namespace schemex {

namespace {

void require_field(const Domain& d) {
  if (!d.is_field()) fail(ErrorCode::NonFieldBase, "a field base is required, got " + d.name());
}

// Weight e_1 + sum r_i e_i of an exponent vector.
Integer weight(const Monomial& m, const std::vector<Integer>& r) {
  Integer w = m[0];
  for (std::size_t i = 1; i < m.size(); ++i) w += r[i - 1] * m[i];
  return w;
}

// Largest weight over the monomials of P, and how many monomials reach it.
std::pair<Integer, int> top_weight(const Poly& p, const std::vector<Integer>& r) {
  Integer best = -1;
  int count = 0;
  for (auto& t : p.terms()) {
    Integer w = weight(t.m, r);
    if (w > best) {
      best = w;
      count = 1;
    } else if (w == best) {
      ++count;
    }
  }
  return {best, count};
}

std::vector<Poly> forward_images(const PolyRing& w, const std::vector<Integer>& r) {
  std::vector<Poly> images{Poly::variable(w, 0)};
  Poly x1 = Poly::variable(w, 0);
  for (std::size_t i = 1; i < w.nvars(); ++i) images.push_back(Poly::variable(w, i) - x1.pow(static_cast<unsigned>(r[i - 1].get_ui())));
  return images;
}

std::vector<Integer> exponents_for(unsigned p, std::size_t n) {
  std::vector<Integer> r;
  Integer pw = p;
  for (std::size_t i = 1; i < n; ++i) {
    r.push_back(pw);
    pw *= p;
  }
  return r;
}

const Poly& choose_generator(const std::vector<Poly>& gens) {
  const Poly* best = &gens.front();
  for (auto& g : gens) {
    if (g.total_degree() < best->total_degree() ||
        (g.total_degree() == best->total_degree() && g.ring().compare(g.lead().m, best->lead().m) < 0))
      best = &g;
  }
  return *best;
}

std::vector<Poly> normalize(const PolyRing& r, std::vector<Poly> gens, std::vector<NormalizationStep>& trace,
                            std::vector<std::string>& used) {
  std::erase_if(gens, [](const Poly& g) { return g.is_zero(); });
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < r.nvars(); ++i) vars.push_back(Poly::variable(r, i));
  if (gens.empty()) return vars;
  const std::size_t n = r.nvars();
  if (n == 0) fail(ErrorCode::UnitIdeal, "the ideal contains a nonzero constant");
  const Domain& k = r.domain();
  const Poly& P = choose_generator(gens);

  unsigned p = max_exponent(P) + 1;
  std::vector<Integer> rs = exponents_for(p, n);
  while (top_weight(P, rs).second != 1) rs = exponents_for(++p, n);

  const std::size_t round = trace.size() + 1;
  std::vector<std::string> wv{r.vars()[0]}, zs;
  for (std::size_t i = 1; i < n; ++i) {
    std::string z = fresh_variable(used, {"Z" + std::to_string(i + 1), "Z" + std::to_string(i + 1) + "_" + std::to_string(round)});
    used.push_back(z);
    zs.push_back(z);
    wv.push_back(z);
  }
  PolyRing w(k, wv);
  auto images = forward_images(w, rs);
  Poly q = substitute(P, w, images);
  const unsigned N = q.degree_in(0);
  Monomial top(n, 0);
  top[0] = N;
  Scalar lc = q.coeff(top);
  if (k.is_zero(lc)) fail(ErrorCode::InvalidArgument, "leading X1 coefficient is not a constant");
  Scalar unit = k.inv(lc);
  trace.push_back(NormalizationStep{r.vars(), P, p, rs, zs, q.scale(unit), N, unit});

  std::vector<Poly> moved;
  for (auto& g : gens) moved.push_back(substitute(g, w, images));
  PolyRing sub(k, zs);
  std::vector<Poly> below = normalize(sub, eliminate(w, moved, sub), trace, used);

  // back to the variables of r: Z_i = X_i + X1^{r_i}
  std::vector<Poly> back;
  Poly x1 = Poly::variable(r, 0);
  for (std::size_t i = 1; i < n; ++i) back.push_back(Poly::variable(r, i) + x1.pow(static_cast<unsigned>(rs[i - 1].get_ui())));
  std::vector<Poly> out;
  for (auto& y : below) out.push_back(substitute(y, r, back));
  return out;
}

}  // namespace

bool NormalizationStep::verify() const {
  const PolyRing& w = equation.ring();
  if (w.nvars() != vars.size() || exponents.size() + 1 != vars.size()) return false;
  auto [N, count] = top_weight(chosen, exponents);
  if (count != 1 || N != degree) return false;
  Poly q = substitute(chosen, w, forward_images(w, exponents));
  if (q.scale(unit) != equation) return false;
  if (equation.degree_in(0) != degree) return false;
  // monic: the only term of X1-degree N is X1^N itself with coefficient 1
  for (auto& t : equation.terms()) {
    if (t.m[0] != degree) continue;
    for (std::size_t i = 1; i < t.m.size(); ++i)
      if (t.m[i]) return false;
    if (!w.domain().is_one(t.c)) return false;
  }
  return true;
}

std::string NormalizationStep::to_string() const {
  std::string s = "P = " + chosen.to_string() + ", p = " + std::to_string(prime);
  for (std::size_t i = 0; i < new_vars.size(); ++i)
    s += ", " + new_vars[i] + " = " + vars[i + 1] + " + " + vars[0] + "^" + exponents[i].get_str();
  return s + ", " + equation.to_string() + " = 0";
}

bool NormalizationResult::verify() const {
  for (auto& s : trace)
    if (!s.verify()) return false;
  return y.size() <= ring.nvars();
}

NormalizationResult noether_normalize(const PolyRing& ring, const std::vector<Poly>& ideal) {
  require_field(ring.domain());
  if (groebner(ring, ideal).is_unit()) fail(ErrorCode::UnitIdeal, "1 is in the ideal");
  NormalizationResult out{ring, {}, {}};
  std::vector<std::string> used = ring.vars();
  out.y = normalize(ring, ideal, out.trace, used);
  return out;
}

// ---------------------------------------------------------------------------
// Maximality

namespace {

struct FiniteQuotient {
  const PresentedAlgebra& a;
  std::map<Monomial, std::size_t> index;

  std::vector<Scalar> coords(const Poly& f) const {
    const Domain& k = a.base();
    std::vector<Scalar> v(index.size(), k.zero());
    Poly nf = a.normal_form(f);
    for (auto& t : nf.terms()) v[index.at(t.m)] = t.c;
    return v;
  }

  // Minimal polynomial of u over k by dependency among its powers.
  UniPoly minimal_polynomial(const Poly& u) const {
    const Domain& k = a.base();
    std::vector<std::vector<Scalar>> cols;
    Poly pw = Poly::from_int(a.ring(), 1);
    for (std::size_t i = 0; i <= index.size(); ++i) {
      cols.push_back(coords(pw));
      if (auto dep = linalg::first_dependency(k, cols)) return UniPoly(k, *dep);
      pw = a.normal_form(pw * u);
    }
    fail(ErrorCode::InvalidArgument, "powers are independent in a finite quotient");
  }
};

Poly eval_uni(const UniPoly& m, const Poly& u) {
  Poly acc(u.ring());
  for (std::size_t j = m.c.size(); j-- > 0;) acc = acc * u + Poly::constant(u.ring(), m.c[j]);
  return acc;
}

// Decides with one candidate element; nullopt when u is not decisive.
std::optional<MaximalityCertificate> try_element(const FiniteQuotient& fq, const Poly& u) {
  UniPoly m = fq.minimal_polynomial(u);
  UniFactorization f = factor_univariate(m);
  MaximalityCertificate c;
  c.dimension = static_cast<long>(fq.index.size());
  c.element = u;
  c.minimal_polynomial = m;
  if (f.factors.size() > 1 || f.factors.front().second > 1) {
    UniPoly g = f.factors.front().first;
    UniPoly h = divmod(m, g).first;
    c.maximal = false;
    c.reason = MaximalityReason::ZeroDivisor;
    c.zero_divisors = std::make_pair(fq.a.normal_form(eval_uni(g, u)), fq.a.normal_form(eval_uni(h, u)));
    return c;
  }
  if (m.degree() == static_cast<long>(fq.index.size())) {
    c.maximal = true;
    c.reason = MaximalityReason::Field;
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::string MaximalityCertificate::to_string() const {
  switch (reason) {
    case MaximalityReason::Field:
      return "maximal, residue field of dimension " + std::to_string(dimension) +
             (element ? " generated by " + element->to_string() : std::string());
    case MaximalityReason::UnitIdeal:
      return "not maximal: the unit ideal";
    case MaximalityReason::InfiniteDimension:
      return "not maximal: powers of " + free_variable.value_or("?") + " are independent";
    case MaximalityReason::ZeroDivisor:
      return "not maximal: (" + zero_divisors->first.to_string() + ")*(" + zero_divisors->second.to_string() + ") = 0";
  }
  return "";
}

MaximalityCertificate is_maximal(const Ideal& ideal) {
  PresentedAlgebra a = ideal.quotient();
  const Domain& k = a.base();
  require_field(k);
  const GroebnerBasis& gb = a.groebner_basis();
  MaximalityCertificate c;
  if (gb.is_unit()) {
    c.reason = MaximalityReason::UnitIdeal;
    return c;
  }
  auto sm = gb.standard_monomials();
  const std::size_t n = a.ring().nvars();
  if (!sm) {
    for (std::size_t i = 0; i < n; ++i) {
      bool bounded = false;
      for (auto& g : gb.basis()) {
        const Monomial& m = g.lead().m;
        bool pure = m[i] > 0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && m[j]) pure = false;
        bounded = bounded || pure;
      }
      if (!bounded) {
        c.reason = MaximalityReason::InfiniteDimension;
        c.free_variable = a.vars()[i];
        return c;
      }
    }
  }
  FiniteQuotient fq{a, {}};
  for (auto& m : *sm) fq.index.emplace(m, fq.index.size());
  if (fq.index.size() == 1) {
    c.maximal = true;
    c.reason = MaximalityReason::Field;
    c.dimension = 1;
    return c;
  }
  // Variables first, then small linear combinations (primitive element search).
  std::vector<Poly> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(Poly::variable(a.ring(), i));
  std::vector<long> coeff(n, 0);
  const long top = 4;
  for (int count = 0; count < 400;) {
    std::size_t i = 0;
    while (i < n && ++coeff[i] > top) coeff[i++] = 0;
    if (i == n) break;
    Poly u(a.ring());
    int nonzero = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (coeff[j]) {
        u = u + Poly::variable(a.ring(), j).scale(k.from_int(coeff[j]));
        ++nonzero;
      }
    if (nonzero < 2 || u.is_zero()) continue;
    candidates.push_back(u);
    ++count;
  }
  for (auto& u : candidates)
    if (auto r = try_element(fq, u)) return *r;
  // Finite quotients small enough to walk through: some element decides.
  if (k.is_finite()) {
    Integer size = 1;
    for (std::size_t i = 0; i < fq.index.size(); ++i) size *= k.cardinality();
    if (size <= 100000) {
      std::vector<Monomial> basis(sm->begin(), sm->end());
      for (Integer idx = 1; idx < size; ++idx) {
        Integer rest = idx;
        Poly u(a.ring());
        for (auto& m : basis) {
          Integer digit = rest % k.cardinality();
          rest /= k.cardinality();
          if (digit != 0) u = u + Poly::monomial(a.ring(), m, k.element_at(digit));
        }
        if (auto r = try_element(fq, u)) return *r;
      }
    }
  }
  fail(ErrorCode::Undecidable, "no primitive element found for " + a.to_string());
}

NullstellensatzVerdict has_common_zero(const PolyRing& ring, const std::vector<Poly>& ps) {
  require_field(ring.domain());
  if (ps.empty()) return {true, std::nullopt};
  auto c = lift(ring, ps, Poly::from_int(ring, 1));
  if (!c) return {true, std::nullopt};
  return {false, std::move(c)};
}

}  // namespace schemex
