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

#include "schemex/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace schemex {

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(Domain dom, std::vector<std::string> vars, TermOrder order, std::size_t block)
    : rep_(std::make_shared<const Rep>(Rep{std::move(dom), std::move(vars), order, block})) {
  for (std::size_t i = 0; i < rep_->vars.size(); ++i)
    for (std::size_t j = i + 1; j < rep_->vars.size(); ++j)
      if (rep_->vars[i] == rep_->vars[j]) fail(ErrorCode::VariableClash, "duplicate variable " + rep_->vars[i]);
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (rep_->order) {
    case TermOrder::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case TermOrder::GrevLex:
      return grevlex_range(a, b, 0, n);
    case TermOrder::Block: {
      std::size_t k = std::min(rep_->block, n);
      int c = grevlex_range(a, b, 0, k);
      return c != 0 ? c : grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < rep_->vars.size(); ++i)
    if (rep_->vars[i] == name) return i;
  return std::nullopt;
}

PolyRing PolyRing::with_order(TermOrder order, std::size_t block) const {
  return PolyRing(rep_->dom, rep_->vars, order, block);
}

PolyRing PolyRing::with_domain(const Domain& dom) const { return PolyRing(dom, rep_->vars, rep_->order, rep_->block); }

PolyRing PolyRing::with_vars(std::vector<std::string> vars) const {
  return PolyRing(rep_->dom, std::move(vars), rep_->order, rep_->block);
}

std::string PolyRing::name() const {
  std::string s = rep_->dom.name();
  if (rep_->vars.empty()) return s;
  s += "[";
  for (std::size_t i = 0; i < rep_->vars.size(); ++i) s += (i ? "," : "") + rep_->vars[i];
  return s + "]";
}

bool PolyRing::operator==(const PolyRing& o) const {
  if (rep_ == o.rep_) return true;
  return rep_->dom == o.rep_->dom && rep_->vars == o.rep_->vars && rep_->order == o.rep_->order &&
         (rep_->order != TermOrder::Block || rep_->block == o.rep_->block);
}

// ---------------------------------------------------------------------------
// Poly construction

Poly Poly::constant(const PolyRing& r, const Scalar& c) {
  Poly p(r);
  if (!r.domain().is_zero(c)) p.terms_.push_back(Term{Monomial(r.nvars(), 0), c});
  return p;
}

Poly Poly::variable(const PolyRing& r, std::size_t i) {
  Monomial m(r.nvars(), 0);
  m.at(i) = 1;
  return monomial(r, std::move(m), r.domain().one());
}

Poly Poly::variable(const PolyRing& r, std::string_view name) {
  auto i = r.index_of(name);
  if (!i) fail(ErrorCode::InvalidArgument, "unknown variable " + std::string(name) + " in " + r.name());
  return variable(r, *i);
}

Poly Poly::monomial(const PolyRing& r, Monomial m, const Scalar& c) {
  Poly p(r);
  if (m.size() != r.nvars()) fail(ErrorCode::InvalidArgument, "monomial length does not match the ring");
  if (!r.domain().is_zero(c)) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Poly Poly::from_terms(const PolyRing& r, std::vector<Term> terms) {
  const Domain& d = r.domain();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  Poly p(r);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = d.add(p.terms_.back().c, t.c);
      if (d.is_zero(p.terms_.back().c)) p.terms_.pop_back();
    } else if (!d.is_zero(t.c)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Queries

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (unsigned e : terms_[0].m)
    if (e) return false;
  return true;
}

Scalar Poly::constant_coeff() const {
  if (terms_.empty()) return domain().zero();
  const Term& t = terms_.back();
  for (unsigned e : t.m)
    if (e) return domain().zero();
  return t.c;
}

Scalar Poly::coeff(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.m == m) return t.c;
  return domain().zero();
}

long Poly::total_degree() const {
  long d = -1;
  for (auto& t : terms_) d = std::max<long>(d, std::accumulate(t.m.begin(), t.m.end(), 0L));
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, t.m.at(var));
  return d;
}

bool Poly::is_homogeneous() const {
  long d = -1;
  for (auto& t : terms_) {
    long td = std::accumulate(t.m.begin(), t.m.end(), 0L);
    if (d >= 0 && td != d) return false;
    d = td;
  }
  return true;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_.nvars(); ++i)
    if (degree_in(i) > 0) out.push_back(i);
  return out;
}

unsigned max_exponent(const Poly& f) {
  unsigned m = 0;
  for (auto& t : f.terms())
    for (unsigned e : t.m) m = std::max(m, e);
  return m;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void require_same(const PolyRing& a, const PolyRing& b) {
  if (a != b) fail(ErrorCode::InvalidArgument, "polynomials live in different rings: " + a.name() + " vs " + b.name());
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same(ring_, o.ring_);
  const Domain& d = domain();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : ring_.compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = d.add(terms_[i].c, o.terms_[j].c);
      if (!d.is_zero(s)) r.terms_.push_back(Term{terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back(Term{t.m, domain().neg(t.c)});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  const Domain& d = domain();
  Poly r(ring_);
  if (d.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    Scalar s = d.mul(t.c, c);
    if (d.is_zero(s)) continue;  // zero divisors in ZZ/n
    Monomial mm = t.m;
    for (std::size_t k = 0; k < mm.size(); ++k) mm[k] += m[k];
    r.terms_.push_back(Term{std::move(mm), std::move(s)});
  }
  return r;
}

Poly Poly::scale(const Scalar& c) const { return mul_term(Monomial(ring_.nvars(), 0), c); }

Poly Poly::operator*(const Poly& o) const {
  require_same(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
  std::vector<Term> all;
  all.reserve(small.terms_.size() * large.terms_.size());
  for (auto& t : small.terms_) {
    Poly part = large.mul_term(t.m, t.c);
    for (auto& u : part.terms_) all.push_back(std::move(u));
  }
  return from_terms(ring_, std::move(all));
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(ring_, domain().one());
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(domain().inv(lead().c));
}

Poly Poly::reorder(const PolyRing& r) const {
  if (r.vars() != ring_.vars() || r.domain() != ring_.domain())
    fail(ErrorCode::InvalidArgument, "reorder requires the same variables and domain");
  return from_terms(r, terms_);
}

bool Poly::operator==(const Poly& o) const {
  if (ring_.vars() != o.ring_.vars() || ring_.domain() != o.ring_.domain()) return false;
  if (terms_.size() != o.terms_.size()) return false;
  if (ring_ == o.ring_) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  return (*this - o.reorder(ring_)).is_zero();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Domain& d = domain();
  std::string out;
  bool first = true;
  for (auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.vars()[i];
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    std::string cs = d.to_string(t.c);
    bool paren = d.needs_parens(t.c);
    bool negative = !paren && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (paren) cs = "(" + cs + ")";
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

// ---------------------------------------------------------------------------
// Ring maps

Poly substitute(const Poly& f, const PolyRing& target, const std::vector<Poly>& images) {
  if (images.size() != f.ring().nvars()) fail(ErrorCode::InvalidArgument, "wrong number of images in substitution");
  const Domain& td = target.domain();
  // cache powers of each image
  std::vector<std::vector<Poly>> powers(images.size());
  Poly result(target);
  for (auto& t : f.terms()) {
    Poly term = Poly::constant(target, td.coerce(f.domain(), t.c));
    for (std::size_t i = 0; i < t.m.size() && !term.is_zero(); ++i) {
      unsigned e = t.m[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(target, td.one()));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result = result + term;
  }
  return result;
}

Poly embed(const Poly& f, const PolyRing& target) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
    auto j = target.index_of(f.ring().vars()[i]);
    if (j)
      images.push_back(Poly::variable(target, *j));
    else if (f.degree_in(i) == 0)
      images.push_back(Poly(target));
    else
      fail(ErrorCode::InvalidArgument, "variable " + f.ring().vars()[i] + " is not in " + target.name());
  }
  if (f.ring().domain() == target.domain()) {
    // fast path: permute exponents
    std::vector<Term> terms;
    for (auto& t : f.terms()) {
      Monomial m(target.nvars(), 0);
      for (std::size_t i = 0; i < t.m.size(); ++i)
        if (t.m[i]) m[*target.index_of(f.ring().vars()[i])] = t.m[i];
      terms.push_back(Term{std::move(m), t.c});
    }
    return Poly::from_terms(target, std::move(terms));
  }
  return substitute(f, target, images);
}

Poly map_coefficients(const Poly& f, const PolyRing& target) {
  if (target.vars() != f.ring().vars()) fail(ErrorCode::InvalidArgument, "map_coefficients requires identical variables");
  std::vector<Term> terms;
  for (auto& t : f.terms()) terms.push_back(Term{t.m, target.domain().coerce(f.domain(), t.c)});
  return Poly::from_terms(target, std::move(terms));
}

Scalar evaluate(const Poly& f, const std::vector<Scalar>& point) {
  const Domain& d = f.domain();
  Scalar acc = d.zero();
  for (auto& t : f.terms()) {
    Scalar v = t.c;
    for (std::size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i]) v = d.mul(v, d.pow(point.at(i), t.m[i]));
    acc = d.add(acc, v);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& r, std::string_view s) : r_(r), s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, "polynomial '" + std::string(s_) + "' column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        acc = divide(acc, unary());
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly divide(const Poly& a, const Poly& b) {
    if (!b.is_constant() || b.is_zero()) error("division only by nonzero constants");
    const Domain& d = r_.domain();
    Scalar c = b.constant_coeff();
    if (d.is_field()) return a.scale(d.inv(c));
    std::vector<Term> terms;
    for (auto& t : a.terms()) {
      auto q = d.divide_exact(t.c, c);
      if (!q) error("inexact division in " + d.name());
      terms.push_back(Term{t.m, *q});
    }
    return Poly::from_terms(r_, std::move(terms));
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected a nonnegative integer exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer z(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(r_, r_.domain().from_integer(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto i = r_.index_of(name)) return Poly::variable(r_, *i);
      const Domain& d = r_.domain();
      if (d.has_generator() && d.generator_name() == name) return Poly::constant(r_, d.generator());
      pos_ = start;
      error("unknown identifier '" + name + "' in " + r_.name());
    }
    if (c == '\0') error("unexpected end of input");
    error("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing& r_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRing& r, std::string_view text) { return PolyParser(r, text).parse(); }

// ---------------------------------------------------------------------------
// Grading

std::map<long, Poly> homogeneous_components(const Poly& f) {
  std::map<long, std::vector<Term>> buckets;
  for (auto& t : f.terms()) buckets[std::accumulate(t.m.begin(), t.m.end(), 0L)].push_back(t);
  std::map<long, Poly> out;
  for (auto& [deg, terms] : buckets) out.emplace(deg, Poly::from_terms(f.ring(), std::move(terms)));
  return out;
}

Poly homogenize(const Poly& f, const PolyRing& target, std::size_t position) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot homogenize the zero polynomial");
  const std::size_t n = f.ring().nvars();
  if (target.nvars() != n + 1 || position > n) fail(ErrorCode::InvalidArgument, "homogenization target has the wrong shape");
  long d = f.total_degree();
  std::vector<Term> terms;
  for (auto& t : f.terms()) {
    Monomial m;
    m.reserve(n + 1);
    long td = std::accumulate(t.m.begin(), t.m.end(), 0L);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == position)
        m.push_back(static_cast<unsigned>(d - td));
      else
        m.push_back(t.m[i < position ? i : i - 1]);
    }
    terms.push_back(Term{std::move(m), target.domain().coerce(f.domain(), t.c)});
  }
  return Poly::from_terms(target, std::move(terms));
}

Poly dehomogenize(const Poly& f, std::size_t index, const PolyRing& target) {
  if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
  const std::size_t n = f.ring().nvars();
  if (index >= n || target.nvars() + 1 != n) fail(ErrorCode::InvalidArgument, "dehomogenization target has the wrong shape");
  std::vector<Term> terms;
  for (auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i)
      if (i != index) m.push_back(t.m[i]);
    terms.push_back(Term{std::move(m), target.domain().coerce(f.domain(), t.c)});
  }
  return Poly::from_terms(target, std::move(terms));
}

PolyRing chart_ring(const PolyRing& graded, std::size_t i) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < graded.nvars(); ++j) {
    if (j == i) continue;
    std::string v = graded.vars()[j];
    for (auto& ch : v) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    vars.push_back(v);
  }
  return PolyRing(graded.domain(), std::move(vars));
}

// ---------------------------------------------------------------------------
// Content

UniPoly to_univariate(const Poly& f, std::size_t var) {
  UniPoly u(f.domain());
  for (auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.m.size(); ++i)
      if (i != var && t.m[i]) fail(ErrorCode::InvalidArgument, f.to_string() + " is not univariate");
    std::size_t e = t.m[var];
    if (u.c.size() <= e) u.c.resize(e + 1, f.domain().zero());
    u.c[e] = t.c;
  }
  u.trim();
  return u;
}

Poly from_univariate(const UniPoly& u, const PolyRing& r, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < u.c.size(); ++e) {
    if (u.dom.is_zero(u.c[e])) continue;
    Monomial m(r.nvars(), 0);
    m[var] = static_cast<unsigned>(e);
    terms.push_back(Term{std::move(m), r.domain().coerce(u.dom, u.c[e])});
  }
  return Poly::from_terms(r, std::move(terms));
}

ContentPrimitive content_primitive(const Poly& f, std::optional<std::size_t> main_var) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "content of the zero polynomial");
  const PolyRing& r = f.ring();
  const Domain& d = r.domain();
  if (!main_var) {
    if (d.kind() != DomainKind::Integers)
      fail(ErrorCode::UnsupportedDomain, "integer content requires ZZ coefficients, got " + d.name());
    Integer g = 0;
    for (auto& t : f.terms()) {
      Integer v = d.as_integer(t.c);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (d.as_integer(f.lead().c) < 0) g = -g;
    std::vector<Term> terms;
    for (auto& t : f.terms()) terms.push_back(Term{t.m, d.from_integer(d.as_integer(t.c) / g)});
    return {Poly::constant(r, d.from_integer(g)), Poly::from_terms(r, std::move(terms))};
  }
  if (r.nvars() != 2 || !d.is_field())
    fail(ErrorCode::Unsupported, "content over k[S] requires a two-variable ring over a field");
  std::size_t t = *main_var, s = 1 - t;
  // coefficients of powers of the main variable, as polynomials in S
  std::map<unsigned, UniPoly> coeffs;
  for (auto& term : f.terms()) {
    auto [it, inserted] = coeffs.try_emplace(term.m[t], UniPoly(d));
    UniPoly& u = it->second;
    unsigned e = term.m[s];
    if (u.c.size() <= e) u.c.resize(e + 1, d.zero());
    u.c[e] = term.c;
  }
  UniPoly g(d);
  for (auto& [e, u] : coeffs) {
    u.trim();
    g = gcd(g, u);
  }
  Poly content = from_univariate(g, r, s);
  std::vector<Term> terms;
  for (auto& [e, u] : coeffs) {
    UniPoly q = divmod(u, g).first;
    for (std::size_t k = 0; k < q.c.size(); ++k) {
      if (d.is_zero(q.c[k])) continue;
      Monomial m(2, 0);
      m[t] = e;
      m[s] = static_cast<unsigned>(k);
      terms.push_back(Term{std::move(m), q.c[k]});
    }
  }
  return {content, Poly::from_terms(r, std::move(terms))};
}

}  // namespace schemex
