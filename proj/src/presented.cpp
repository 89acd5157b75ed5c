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

#include "schemex/presented.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>

namespace schemex {

struct PresentedAlgebra::Cache {
  std::shared_mutex mutex;
  std::optional<GroebnerBasis> gb;  // written once, never reset
  std::optional<bool> integral;     // ZZ base: relations usable for exact division
};

PresentedAlgebra::PresentedAlgebra(PolyRing ring, std::vector<Poly> relations)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& r : relations) {
    if (r.ring() != ring_) fail(ErrorCode::InvalidArgument, "relation " + r.to_string() + " is not in " + ring_.name());
    if (!r.is_zero()) relations_.push_back(std::move(r));
  }
}

PresentedAlgebra PresentedAlgebra::polynomial(const Domain& base, std::vector<std::string> vars) {
  return PresentedAlgebra(PolyRing(base, std::move(vars)), {});
}

const GroebnerBasis& PresentedAlgebra::groebner_basis() const {
  {
    std::shared_lock lock(cache_->mutex);
    if (cache_->gb) return *cache_->gb;
  }
  GroebnerBasis gb = groebner(ring_, relations_);
  std::unique_lock lock(cache_->mutex);
  if (!cache_->gb) cache_->gb.emplace(std::move(gb));
  return *cache_->gb;
}

Poly PresentedAlgebra::normal_form(const Poly& f) const {
  if (f.ring() != ring_) fail(ErrorCode::InvalidArgument, f.to_string() + " is not an element of " + to_string());
  if (relations_.empty()) return f;
  if (!base().is_field()) {
    if (!integral_division()) fail(ErrorCode::NonFieldBase, "normal forms in " + to_string() + " need a field of coefficients");
    return GroebnerBasis(ring_, relations_).reduce(f);
  }
  return groebner_basis().reduce(f);
}

bool PresentedAlgebra::integral_division() const {
  {
    std::shared_lock lock(cache_->mutex);
    if (cache_->integral) return *cache_->integral;
  }
  // Division by relations with unit leading coefficients stays integral; when
  // they already form a Groebner basis over QQ the remainder is canonical.
  bool ok = base().kind() == DomainKind::Integers;
  for (auto& r : relations_) ok = ok && base().is_unit(r.lead().c);
  if (ok) {
    PolyRing q = ring_.with_domain(Domain::rationals());
    std::vector<Poly> rq;
    for (auto& r : relations_) rq.push_back(map_coefficients(r, q));
    GroebnerBasis gb = groebner(q, rq);
    for (auto& g : gb.basis()) {
      bool covered = false;
      for (auto& r : relations_) covered = covered || monomial_divides(r.lead().m, g.lead().m);
      ok = ok && covered;
    }
  }
  std::unique_lock lock(cache_->mutex);
  cache_->integral = ok;
  return ok;
}

std::string PresentedAlgebra::to_string() const {
  std::string s = ring_.name();
  if (relations_.empty()) return s;
  s += "/(";
  for (std::size_t i = 0; i < relations_.size(); ++i) s += (i ? ", " : "") + relations_[i].to_string();
  return s + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Position of the bracket closing the one at `open`, or npos.
std::size_t matching(std::string_view s, std::size_t open) {
  char o = s[open], c = o == '(' ? ')' : ']';
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == o) ++depth;
    if (s[i] == c && --depth == 0) return i;
  }
  return std::string_view::npos;
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string first_identifier(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      return std::string(s.substr(i, j - i));
    }
  return {};
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

Integer parse_integer(const std::string& s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    fail(ErrorCode::SyntaxError, "expected an integer in " + std::string(context));
  return Integer(s);
}

DenseVec dense_of(const Poly& f) {
  UniPoly u = to_univariate(f, 0);
  DenseVec v;
  for (auto& c : u.c) v.push_back(u.dom.as_rational(c));
  return v;
}

[[noreturn]] void bad_domain(std::string_view text) {
  fail(ErrorCode::SyntaxError, "unknown domain '" + std::string(text) + "'");
}

}  // namespace

Domain parse_domain(std::string_view raw) {
  std::string text = trim(raw);
  if (text == "ZZ") return Domain::integers();
  if (text == "QQ") return Domain::rationals();
  if (text.rfind("ZZ/", 0) == 0) {
    Integer n = parse_integer(trim(text.substr(3)), text);
    if (n < 1) fail(ErrorCode::InvalidArgument, "ZZ/n needs n >= 1");
    return Domain::integers_mod(n);
  }
  if (text.rfind("GF(", 0) == 0) {
    std::size_t close = matching(text, 2);
    if (close == std::string::npos) bad_domain(text);
    std::string inner = text.substr(3, close - 3);
    std::string rest = trim(text.substr(close + 1));
    auto parts = split_top(inner, ',');
    if (parts.size() == 1) {
      Integer p = parse_integer(parts[0], text);
      if (rest.empty()) {
        if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "GF(p) needs a prime, got " + p.get_str());
        return Domain::prime_field(p);
      }
      if (rest.front() != '(' || rest.back() != ')') bad_domain(text);
      std::string gen = trim(rest.substr(1, rest.size() - 2));
      if (!is_identifier(gen)) bad_domain(text);
      return Domain::function_field(p, gen);
    }
    if (parts.size() != 2 || !rest.empty()) bad_domain(text);
    Integer q = parse_integer(parts[0], text);
    auto fac = factor_integer(q);
    if (fac.size() != 1) fail(ErrorCode::InvalidArgument, "GF(q) needs a prime power, got " + q.get_str());
    std::string gen = first_identifier(parts[1]);
    if (gen.empty()) bad_domain(text);
    PolyRing r(Domain::prime_field(fac[0].first), {gen});
    DenseVec m = dense_of(parse_poly(r, parts[1]));
    if (m.size() != fac[0].second + 1)
      fail(ErrorCode::InvalidArgument, "modulus degree does not match " + q.get_str());
    return Domain::finite_field(fac[0].first, m, gen);
  }
  if (text.rfind("QQ(", 0) == 0 && text.back() == ')') {
    std::string inner = trim(text.substr(3, text.size() - 4));
    if (inner == "i") return Domain::number_field({1, 0, 1}, "i");
    if (!is_identifier(inner)) bad_domain(text);
    return Domain::function_field(0, inner);
  }
  if (text.rfind("QQ[", 0) == 0) {
    std::size_t close = matching(text, 2);
    if (close == std::string::npos) bad_domain(text);
    std::string gen = trim(text.substr(3, close - 3));
    std::string rest = trim(text.substr(close + 1));
    if (!is_identifier(gen) || rest.size() < 3 || rest.rfind("/(", 0) != 0 || rest.back() != ')') bad_domain(text);
    PolyRing r(Domain::rationals(), {gen});
    return Domain::number_field(dense_of(parse_poly(r, rest.substr(2, rest.size() - 3))), gen);
  }
  bad_domain(text);
}

PresentedAlgebra parse_algebra(std::string_view raw) {
  std::string text = trim(raw);
  // Find the bracket holding the variables.  "QQ[a]/(m)[X]" has a number
  // field in front, recognised by a second bracket group.
  std::size_t open = std::string::npos;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '[' && depth == 0) {
      open = i;
      break;
    }
  }
  if (open == std::string::npos) return PresentedAlgebra::polynomial(parse_domain(text), {});
  std::size_t close = matching(text, open);
  if (close == std::string::npos) fail(ErrorCode::SyntaxError, "unbalanced brackets in '" + text + "'");
  std::size_t after = close + 1;
  if (text.compare(after, 2, "/(") == 0) {
    std::size_t rc = matching(text, after + 1);
    if (rc != std::string::npos && rc + 1 < text.size() && text[rc + 1] == '[') {
      open = rc + 1;
      close = matching(text, open);
      if (close == std::string::npos) fail(ErrorCode::SyntaxError, "unbalanced brackets in '" + text + "'");
      after = close + 1;
    }
  }
  Domain base = parse_domain(text.substr(0, open));
  std::vector<std::string> vars;
  std::string inside = trim(text.substr(open + 1, close - open - 1));
  if (!inside.empty())
    for (auto& v : split_top(inside, ',')) {
      if (!is_identifier(v)) fail(ErrorCode::SyntaxError, "bad variable name '" + v + "'");
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) fail(ErrorCode::VariableClash, "variable " + v + " repeated");
      vars.push_back(v);
    }
  PolyRing ring(base, vars);
  std::string rest = trim(text.substr(after));
  std::vector<Poly> rels;
  if (!rest.empty()) {
    if (rest.rfind("/(", 0) != 0 || rest.back() != ')' || matching(rest, 1) != rest.size() - 1)
      fail(ErrorCode::SyntaxError, "expected '/(relations)' after the variables in '" + text + "'");
    std::string body = rest.substr(2, rest.size() - 3);
    if (!trim(body).empty())
      for (auto& r : split_top(body, ',')) rels.push_back(parse_poly(ring, r));
  }
  return PresentedAlgebra(ring, std::move(rels));
}

// ---------------------------------------------------------------------------
// Ideals, triviality and radicals

std::vector<Poly> Ideal::lifted() const {
  std::vector<Poly> out = ambient.relations();
  for (auto& g : gens) {
    if (g.ring() != ambient.ring()) fail(ErrorCode::InvalidArgument, "ideal generator outside " + ambient.to_string());
    out.push_back(g);
  }
  return out;
}

PresentedAlgebra Ideal::quotient() const { return PresentedAlgebra(ambient.ring(), lifted()); }

bool is_zero_ring(const PresentedAlgebra& a) {
  const Domain& d = a.base();
  if (d.is_field()) return a.groebner_basis().is_unit();
  if (d.kind() == DomainKind::IntegersMod) {
    // A = prod over p^e || n of A/p^e, and A/p^e = 0 iff A/p = 0.
    for (auto& [p, e] : factor_integer(d.modulus()))
      if (!is_zero_ring(specialize(a, Domain::prime_field(p)))) return false;
    return true;
  }
  // ZZ base.  If 1 = sum c_i f_i over QQ then clearing denominators puts an
  // integer D in I, and A = 0 iff A/p = 0 for every p | D.
  PresentedAlgebra q = specialize(a, Domain::rationals());
  auto cof = lift(q.ring(), q.relations(), Poly::from_int(q.ring(), 1));
  if (!cof) return false;
  Integer D = 1;
  for (auto& c : *cof)
    for (auto& t : c.terms()) D = lcm(D, Integer(q.base().as_rational(t.c).get_den()));
  for (auto& [p, e] : factor_integer(D))
    if (!is_zero_ring(specialize(a, Domain::prime_field(p)))) return false;
  return true;
}

bool radical_membership(const Ideal& ideal, const Poly& f) {
  // f is nilpotent in A/I iff (A/I)_f is the zero ring.
  return is_zero_ring(localize(ideal.quotient(), f));
}

std::vector<Poly> elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep) {
  const PolyRing& r = ideal.ambient.ring();
  if (!r.domain().is_field())
    fail(ErrorCode::NonFieldBase, "elimination needs a field of coefficients, got " + r.domain().name());
  PolyRing sub(r.domain(), keep);
  return eliminate(r, ideal.lifted(), sub);
}

std::string fresh_variable(const std::vector<std::string>& taken, const std::vector<std::string>& preferred) {
  auto free = [&](const std::string& v) { return std::find(taken.begin(), taken.end(), v) == taken.end(); };
  std::vector<std::string> order = preferred;
  if (order.empty()) order = {"T", "U", "V", "W"};
  for (auto& v : order)
    if (free(v)) return v;
  std::string stem = order.front();
  for (int k = 1;; ++k)
    if (free(stem + std::to_string(k))) return stem + std::to_string(k);
}

PresentedAlgebra localize(const PresentedAlgebra& a, const Poly& f) {
  if (f.ring() != a.ring()) fail(ErrorCode::InvalidArgument, f.to_string() + " is not an element of " + a.to_string());
  std::vector<std::string> vars = a.vars();
  std::string t = fresh_variable(vars);
  vars.push_back(t);
  PolyRing r = a.ring().with_vars(vars);
  std::vector<Poly> rels;
  for (auto& g : a.relations()) rels.push_back(embed(g, r));
  rels.push_back(embed(f, r) * Poly::variable(r, t) - Poly::from_int(r, 1));
  return PresentedAlgebra(r, std::move(rels));
}

PresentedAlgebra specialize(const PresentedAlgebra& a, const Domain& target) {
  if (!Domain::has_canonical_map(a.base(), target))
    fail(ErrorCode::NoCanonicalMap, "no canonical map " + a.base().name() + " -> " + target.name());
  PolyRing r = a.ring().with_domain(target);
  std::vector<Poly> rels;
  for (auto& g : a.relations()) rels.push_back(map_coefficients(g, r));
  return PresentedAlgebra(r, std::move(rels));
}

namespace {

// c in an extension K = k[a]/(m) as a polynomial in the variable `gen` of r.
Poly scalar_as_poly(const Scalar& c, const PolyRing& r, std::size_t gen) {
  Poly out(r);
  for (std::size_t j = 0; j < c.num.size(); ++j) {
    if (c.num[j] == 0) continue;
    Monomial m(r.nvars(), 0);
    m[gen] = static_cast<unsigned>(j);
    out = out + Poly::monomial(r, m, r.domain().from_rational(c.num[j]));
  }
  return out;
}

Domain prime_field_of(const Domain& d) {
  return d.characteristic() == 0 ? Domain::rationals() : Domain::prime_field(d.characteristic());
}

}  // namespace

PresentedAlgebra prime_presentation(const Domain& d) {
  if (d.kind() != DomainKind::NumberField && d.kind() != DomainKind::FiniteField) return PresentedAlgebra::polynomial(d, {});
  PolyRing r(prime_field_of(d), {d.generator_name()});
  Poly m(r);
  const DenseVec& ext = d.extension();
  for (std::size_t j = 0; j < ext.size(); ++j)
    if (ext[j] != 0) m = m + Poly::monomial(r, Monomial{static_cast<unsigned>(j)}, r.domain().from_rational(ext[j]));
  return PresentedAlgebra(r, {m});
}

// ---------------------------------------------------------------------------
// Morphisms

AlgebraMorphism::AlgebraMorphism(PresentedAlgebra source, PresentedAlgebra target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.ring().nvars())
    fail(ErrorCode::InvalidMorphism, "a morphism needs one image per variable of " + source_.to_string());
  if (!Domain::has_canonical_map(source_.base(), target_.base()))
    fail(ErrorCode::InvalidMorphism, "no coefficient map " + source_.base().name() + " -> " + target_.base().name());
  for (auto& g : images_)
    if (g.ring() != target_.ring())
      fail(ErrorCode::InvalidMorphism, "image " + g.to_string() + " is not in " + target_.to_string());
}

Poly AlgebraMorphism::apply(const Poly& f) const {
  if (f.ring() != source_.ring()) fail(ErrorCode::InvalidArgument, f.to_string() + " is not in " + source_.to_string());
  return substitute(f, target_.ring(), images_);
}

bool AlgebraMorphism::is_well_defined() const {
  for (auto& r : source_.relations())
    if (!target_.is_zero_element(apply(r))) return false;
  return true;
}

AlgebraMorphism AlgebraMorphism::then(const AlgebraMorphism& next) const {
  if (next.source_.ring() != target_.ring()) fail(ErrorCode::InvalidMorphism, "morphisms do not compose");
  std::vector<Poly> imgs;
  for (auto& g : images_) imgs.push_back(next.apply(g));
  return AlgebraMorphism(source_, next.target_, std::move(imgs));
}

bool IsomorphismCertificate::verify() const {
  if (!forward.is_well_defined() || !backward.is_well_defined()) return false;
  const PresentedAlgebra& a = forward.source();
  const PresentedAlgebra& b = forward.target();
  for (std::size_t i = 0; i < a.ring().nvars(); ++i) {
    Poly x = Poly::variable(a.ring(), i);
    if (!a.equal(backward.apply(forward.apply(x)), x)) return false;
  }
  for (std::size_t i = 0; i < b.ring().nvars(); ++i) {
    Poly y = Poly::variable(b.ring(), i);
    if (!b.equal(forward.apply(backward.apply(y)), y)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tensor products and products

TensorResult tensor_product(const PresentedAlgebra& b, const PresentedAlgebra& c) {
  if (b.base() != c.base())
    fail(ErrorCode::InvalidArgument,
         "tensor product needs a common base, got " + b.base().name() + " and " + c.base().name());
  std::vector<std::string> vars = b.vars();
  std::vector<std::string> taken = b.vars();
  taken.insert(taken.end(), c.vars().begin(), c.vars().end());
  std::vector<std::pair<std::string, std::string>> renamed;
  std::vector<std::string> cnames;
  for (auto& v : c.vars()) {
    std::string name = v;
    if (std::find(b.vars().begin(), b.vars().end(), v) != b.vars().end()) {
      for (int k = 2;; ++k) {
        name = v + "_" + std::to_string(k);
        if (std::find(taken.begin(), taken.end(), name) == taken.end()) break;
      }
      taken.push_back(name);
      renamed.emplace_back(v, name);
    }
    cnames.push_back(name);
    vars.push_back(name);
  }
  PolyRing r = b.ring().with_vars(vars);
  std::vector<Poly> left_imgs, right_imgs;
  for (auto& v : b.vars()) left_imgs.push_back(Poly::variable(r, v));
  for (auto& v : cnames) right_imgs.push_back(Poly::variable(r, v));
  std::vector<Poly> rels;
  for (auto& g : b.relations()) rels.push_back(embed(g, r));
  for (auto& g : c.relations()) rels.push_back(substitute(g, r, right_imgs));
  PresentedAlgebra t(r, std::move(rels));
  return TensorResult{t, renamed, AlgebraMorphism(b, t, left_imgs), AlgebraMorphism(c, t, right_imgs)};
}

PresentedAlgebra product(const std::vector<PresentedAlgebra>& factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "empty product");
  const Domain& base = factors.front().base();
  for (auto& f : factors)
    if (f.base() != base) fail(ErrorCode::InvalidArgument, "product factors need a common base");
  std::vector<std::string> all;
  bool clash = false;
  for (auto& f : factors)
    for (auto& v : f.vars()) {
      if (std::find(all.begin(), all.end(), v) != all.end()) clash = true;
      all.push_back(v);
    }
  std::vector<std::vector<std::string>> names;
  std::vector<std::string> vars;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    names.emplace_back();
    for (auto& v : factors[k].vars()) {
      std::string n = clash ? v + "_" + std::to_string(k + 1) : v;
      names.back().push_back(n);
    }
  }
  // Idempotent names must avoid the factor variables.
  std::string stem = "E";
  for (;;) {
    bool ok = true;
    for (auto& group : names)
      for (auto& v : group)
        for (std::size_t k = 0; k < factors.size(); ++k) ok = ok && v != stem + std::to_string(k + 1);
    if (ok) break;
    stem += "E";
  }
  for (std::size_t k = 0; k < factors.size(); ++k) vars.push_back(stem + std::to_string(k + 1));
  for (auto& group : names) vars.insert(vars.end(), group.begin(), group.end());
  PolyRing r(base, vars);
  Poly one = Poly::from_int(r, 1);
  std::vector<Poly> E;
  for (std::size_t k = 0; k < factors.size(); ++k) E.push_back(Poly::variable(r, k));
  std::vector<Poly> rels;
  Poly sum(r);
  for (std::size_t i = 0; i < E.size(); ++i) {
    rels.push_back(E[i] * E[i] - E[i]);
    for (std::size_t j = i + 1; j < E.size(); ++j) rels.push_back(E[i] * E[j]);
    sum = sum + E[i];
  }
  rels.push_back(sum - one);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<Poly> imgs;
    for (auto& n : names[k]) imgs.push_back(Poly::variable(r, n));
    for (auto& x : imgs) rels.push_back((one - E[k]) * x);
    for (auto& g : factors[k].relations()) rels.push_back(E[k] * substitute(g, r, imgs));
  }
  return PresentedAlgebra(r, std::move(rels));
}

FieldSplit split_tensor_of_fields(const PresentedAlgebra& t) {
  const Domain& k = t.base();
  if (t.ring().nvars() != 2 || t.relations().size() != 2 ||
      (k.kind() != DomainKind::Rationals && k.kind() != DomainKind::PrimeField))
    fail(ErrorCode::Unsupported, "expected k[a,X]/(m(a), n(X)) over QQ or GF(p), got " + t.to_string());
  const PolyRing& r = t.ring();
  // identify m(a) and n(X)
  const Poly* m = nullptr;
  const Poly* n = nullptr;
  for (auto& g : t.relations()) {
    auto s = g.support();
    if (s == std::vector<std::size_t>{0}) m = &g;
    if (s == std::vector<std::size_t>{1}) n = &g;
  }
  if (!m || !n) fail(ErrorCode::Unsupported, "relations of " + t.to_string() + " are not univariate in distinct variables");
  const std::string a_name = r.vars()[0], x_name = r.vars()[1];
  DenseVec mv;
  for (auto& c : to_univariate(*m, 0).c) mv.push_back(k.as_rational(c));
  Domain K = k.kind() == DomainKind::Rationals ? Domain::number_field(mv, a_name)
                                                : Domain::finite_field(k.characteristic(), mv, a_name);
  if (K.kind() != DomainKind::NumberField && K.kind() != DomainKind::FiniteField)
    fail(ErrorCode::Unsupported, "the first relation must have degree at least 2");
  UniPoly nk = to_univariate(*n, 1);
  UniPoly nK(K);
  for (auto& c : nk.c) nK.c.push_back(K.coerce(k, c));
  nK.trim();
  UniFactorization fac = factor_univariate(nK);
  for (auto& [f, e] : fac.factors)
    if (e != 1) fail(ErrorCode::InvalidArgument, "the second relation is not squarefree over " + K.name());
  const std::size_t rcount = fac.factors.size();

  // K[X] -> k[a,X]
  auto lift_poly = [&](const UniPoly& u, const PolyRing& target, std::size_t ai, std::size_t xi) {
    Poly out(target);
    for (std::size_t j = 0; j < u.c.size(); ++j) {
      Monomial mono(target.nvars(), 0);
      mono[xi] = static_cast<unsigned>(j);
      out = out + scalar_as_poly(u.c[j], target, ai) * Poly::monomial(target, mono, target.domain().one());
    }
    return out;
  };

  std::vector<PresentedAlgebra> parts;
  for (auto& [f, e] : fac.factors) {
    PolyRing fr(k, {a_name, x_name});
    parts.emplace_back(fr, std::vector<Poly>{embed(*m, fr), lift_poly(f, fr, 0, 1)});
  }
  PresentedAlgebra P = product(parts);
  const PolyRing& pr = P.ring();
  // Variables of P: E1..Er, then (a, X) per factor.
  auto factor_var = [&](std::size_t f, std::size_t which) { return Poly::variable(pr, rcount + 2 * f + which); };
  Poly fa(pr), fx(pr);
  for (std::size_t f = 0; f < rcount; ++f) {
    fa = fa + factor_var(f, 0);
    fx = fx + factor_var(f, 1);
  }
  AlgebraMorphism forward(t, P, {fa, fx});

  std::vector<Poly> back(pr.nvars(), Poly(r));
  Poly a = Poly::variable(r, 0), x = Poly::variable(r, 1);
  for (std::size_t f = 0; f < rcount; ++f) {
    UniPoly others = UniPoly::constant(K, K.one());
    for (std::size_t j = 0; j < rcount; ++j)
      if (j != f) others = others * fac.factors[j].first;
    auto [g, s, tt] = xgcd(others, fac.factors[f].first);
    UniPoly e = divmod(s * others, nK).second;
    Poly ek = t.normal_form(lift_poly(e, r, 0, 1));
    back[f] = ek;
    back[rcount + 2 * f] = t.normal_form(ek * a);
    back[rcount + 2 * f + 1] = t.normal_form(ek * x);
  }
  AlgebraMorphism backward(P, t, back);
  std::vector<std::string> desc;
  for (auto& [f, e] : fac.factors) desc.push_back(K.name() + "[" + x_name + "]/(" + f.to_string(x_name) + ")");
  return FieldSplit{P, desc, IsomorphismCertificate{forward, backward}};
}

// ---------------------------------------------------------------------------
// Nilpotents and structure

std::optional<unsigned> nilpotency_index(const PresentedAlgebra& a, const Poly& f, unsigned max_index) {
  Poly p = a.normal_form(f);
  if (p.is_zero()) return 1u;
  Poly acc = p;
  for (unsigned k = 2; k <= max_index; ++k) {
    acc = a.normal_form(acc * p);
    if (acc.is_zero()) return k;
  }
  return std::nullopt;
}

std::optional<NilpotentWitness> find_nilpotent(const PresentedAlgebra& a, unsigned max_index) {
  const PolyRing& r = a.ring();
  std::vector<Poly> candidates;
  for (std::size_t i = 0; i < r.nvars(); ++i) candidates.push_back(Poly::variable(r, i));
  for (std::size_t i = 0; i < r.nvars(); ++i)
    for (std::size_t j = i + 1; j < r.nvars(); ++j) {
      candidates.push_back(Poly::variable(r, i) - Poly::variable(r, j));
      candidates.push_back(Poly::variable(r, i) + Poly::variable(r, j));
    }
  for (auto& c : candidates) {
    if (a.is_zero_element(c)) continue;
    if (auto k = nilpotency_index(a, c, max_index)) return NilpotentWitness{c, *k};
  }
  return std::nullopt;
}

namespace {

std::string factor_label(const UniPoly& f, unsigned e, const std::string& var) {
  std::string s = "(" + f.to_string(var) + ")";
  return e > 1 ? s + "^" + std::to_string(e) : s;
}

}  // namespace

StructureReport describe_structure(const PresentedAlgebra& a) {
  const Domain& d = a.base();
  if (!d.is_field()) fail(ErrorCode::NonFieldBase, "structure reports need a field base, got " + d.name());
  if (a.ring().nvars() > 1) fail(ErrorCode::Unsupported, "structure reports cover one variable, got " + a.to_string());
  StructureReport rep{};
  if (is_zero_ring(a)) {
    rep.kind = StructureKind::ZeroRing;
    rep.summary = "zero ring";
    return rep;
  }
  if (a.ring().nvars() == 0) {
    rep.kind = StructureKind::Field;
    rep.degree = 1;
    rep.summary = "field " + d.name();
    return rep;
  }
  const std::string var = a.vars()[0];
  UniPoly g(d);
  for (auto& r : a.relations()) g = gcd(g, to_univariate(r, 0));
  if (g.is_zero()) {
    rep.kind = StructureKind::PolynomialRing;
    rep.degree = -1;
    rep.summary = "polynomial ring " + a.ring().name();
    return rep;
  }
  rep.degree = g.degree();
  if (a.relations().size() == 1 && d.kind() == DomainKind::Rationals && g.degree() == 2) {
    UniPoly u = to_univariate(a.relations()[0], 0);
    Rational A = d.as_rational(u.coeff(2)), B = d.as_rational(u.coeff(1)), C = d.as_rational(u.coeff(0));
    Rational disc = B * B - 4 * A * C;
    if (disc.get_den() == 1) rep.discriminant = disc.get_num();
  }
  UniFactorization fac = factor_univariate(g);
  bool reduced = true;
  for (auto& [f, e] : fac.factors) {
    rep.factors.push_back(factor_label(f, e, var));
    reduced = reduced && e == 1;
  }
  const std::size_t r = fac.factors.size();
  if (r == 1 && reduced) {
    rep.kind = StructureKind::Field;
    rep.summary = "field of degree " + std::to_string(rep.degree) + " over " + d.name();
    if (rep.discriminant) rep.summary += " (discriminant " + rep.discriminant->get_str() + ", not a square)";
  } else if (reduced) {
    rep.kind = StructureKind::ProductOfFields;
    rep.summary = "product of " + std::to_string(r) + " fields";
  } else if (r == 1) {
    rep.kind = StructureKind::LocalNonReduced;
    auto& [f, e] = fac.factors[0];
    rep.nilpotent = NilpotentWitness{from_univariate(f, a.ring(), 0), e};
    rep.summary = "local non-reduced ring; " + f.to_string(var) + " is nilpotent of index " + std::to_string(e);
  } else {
    rep.kind = StructureKind::ProductOfLocalRings;
    rep.summary = "product of " + std::to_string(r) + " local rings";
    for (auto& [f, e] : fac.factors)
      if (e > 1) {
        rep.nilpotent = NilpotentWitness{from_univariate(f, a.ring(), 0), e};
        break;
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fractions

FractionVerdict fraction_equal(const PresentedAlgebra& a, const Poly& f, const Poly& n1, const Poly& d1, const Poly& n2,
                               const Poly& d2) {
  const Domain& d = a.base();
  Poly x = n1 * d2 - n2 * d1;
  auto search = [&](unsigned limit) -> std::optional<Poly> {
    Poly r = Poly::from_int(a.ring(), 1);
    for (unsigned k = 0; k <= limit; ++k) {
      if (a.is_zero_element(r * x)) return r;
      r = a.normal_form(r * f);
    }
    return std::nullopt;
  };
  if (d.is_field()) {
    PresentedAlgebra af = localize(a, f);
    bool eq = af.is_zero_element(embed(x, af.ring()));
    return FractionVerdict{eq, eq ? search(64) : std::nullopt};
  }
  if (d.kind() == DomainKind::IntegersMod && a.ring().nvars() == 0) {
    // f^k x = 0 for some k iff it holds for k = log2(n) + 1.
    unsigned limit = static_cast<unsigned>(mpz_sizeinbase(d.modulus().get_mpz_t(), 2)) + 1;
    auto w = search(limit);
    return FractionVerdict{w.has_value(), w};
  }
  if (d.kind() == DomainKind::Integers && a.relations().empty()) {
    if (f.is_zero()) return FractionVerdict{true, Poly(a.ring())};
    bool eq = x.is_zero();
    return FractionVerdict{eq, eq ? std::optional<Poly>(Poly::from_int(a.ring(), 1)) : std::nullopt};
  }
  fail(ErrorCode::UndecidableContext, "fraction equality is not decided over " + a.to_string());
}

}  // namespace schemex
