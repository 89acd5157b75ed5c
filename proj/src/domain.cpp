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
#include <sstream>

#include "dense.hpp"
#include "schemex/arith.hpp"

namespace schemex {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::InfiniteDomain: return "InfiniteDomain";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NonFieldBase: return "NonFieldBase";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::UndecidableContext: return "UndecidableContext";
    case ErrorCode::VariableClash: return "VariableClash";
    case ErrorCode::NoCanonicalMap: return "NoCanonicalMap";
    case ErrorCode::NotCatalogued: return "NotCatalogued";
    case ErrorCode::FactorizationUnavailable: return "FactorizationUnavailable";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ResidueFieldNotRepresentable: return "ResidueFieldNotRepresentable";
    case ErrorCode::IntegralityNotWitnessed: return "IntegralityNotWitnessed";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NilpotentCoordinate: return "NilpotentCoordinate";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::InfiniteSpectrum: return "InfiniteSpectrum";
    case ErrorCode::NonInvertibleUnit: return "NonInvertibleUnit";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

struct Domain::Rep {
  DomainKind kind;
  Integer modulus;  // n, p, or 0
  DenseVec ext;     // monic modulus of an algebraic extension
  std::string gen;
};

namespace {

using dense::Char;

Char char_of(const Domain::Rep& r) {
  switch (r.kind) {
    case DomainKind::Integers:
    case DomainKind::Rationals:
    case DomainKind::NumberField:
      return Char{0};
    case DomainKind::FunctionField:
      return Char{r.modulus};
    default:
      return Char{r.modulus};
  }
}

Scalar make(DenseVec num) {
  Scalar s;
  s.num = std::move(num);
  return s;
}

}  // namespace

bool scalar_less(const Scalar& a, const Scalar& b) {
  auto cmp = [](const DenseVec& x, const DenseVec& y) -> int {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
  };
  int c = cmp(a.num, b.num);
  if (c != 0) return c < 0;
  return cmp(a.den, b.den) < 0;
}

// ---------------------------------------------------------------------------
// Construction

Domain Domain::integers() {
  static const Domain d(std::make_shared<const Rep>(Rep{DomainKind::Integers, 0, {}, ""}));
  return d;
}

Domain Domain::rationals() {
  static const Domain d(std::make_shared<const Rep>(Rep{DomainKind::Rationals, 0, {}, ""}));
  return d;
}

Domain Domain::integers_mod(const Integer& n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "ZZ/n requires n >= 2");
  if (is_prime(n)) return prime_field(n);
  return Domain(std::make_shared<const Rep>(Rep{DomainKind::IntegersMod, n, {}, ""}));
}

Domain Domain::prime_field(const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "GF(p) requires p prime, got " + p.get_str());
  return Domain(std::make_shared<const Rep>(Rep{DomainKind::PrimeField, p, {}, ""}));
}

Domain Domain::finite_field(const Integer& p, DenseVec modulus, std::string gen) {
  Domain fp = prime_field(p);
  Char ch{p};
  modulus = dense::reduce(modulus, ch);
  if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "GF(q) modulus must be nonconstant");
  modulus = dense::monic(modulus, ch);
  if (modulus.size() == 2) return fp;  // degree one: the prime field itself
  UniPoly pi(fp);
  for (auto& c : modulus) pi.c.push_back(fp.from_rational(c));
  pi.trim();
  if (!is_irreducible(pi))
    fail(ErrorCode::InvalidArgument, "GF(q) modulus " + pi.to_string(gen) + " is not irreducible");
  return Domain(std::make_shared<const Rep>(Rep{DomainKind::FiniteField, p, std::move(modulus), std::move(gen)}));
}

Domain Domain::number_field(DenseVec modulus, std::string gen) {
  Char ch{0};
  modulus = dense::trim(std::move(modulus));
  if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "number field modulus must be nonconstant");
  modulus = dense::monic(modulus, ch);
  if (modulus.size() == 2) return rationals();
  UniPoly m(rationals());
  for (auto& c : modulus) m.c.push_back(rationals().from_rational(c));
  if (!is_irreducible(m))
    fail(ErrorCode::InvalidArgument, "number field modulus " + m.to_string(gen) + " is not irreducible");
  return Domain(std::make_shared<const Rep>(Rep{DomainKind::NumberField, 0, std::move(modulus), std::move(gen)}));
}

Domain Domain::function_field(const Integer& p, std::string gen) {
  if (p != 0 && !is_prime(p)) fail(ErrorCode::InvalidArgument, "function field base must be QQ or GF(p)");
  return Domain(std::make_shared<const Rep>(Rep{DomainKind::FunctionField, p, {}, std::move(gen)}));
}

// ---------------------------------------------------------------------------
// Queries

DomainKind Domain::kind() const { return rep_->kind; }

bool Domain::is_field() const { return rep_->kind != DomainKind::Integers && rep_->kind != DomainKind::IntegersMod; }

bool Domain::is_finite() const {
  return rep_->kind == DomainKind::IntegersMod || rep_->kind == DomainKind::PrimeField ||
         rep_->kind == DomainKind::FiniteField;
}

Integer Domain::characteristic() const {
  switch (rep_->kind) {
    case DomainKind::Integers:
    case DomainKind::Rationals:
    case DomainKind::NumberField:
      return 0;
    default:
      return rep_->modulus;
  }
}

const Integer& Domain::modulus() const { return rep_->modulus; }
const DenseVec& Domain::extension() const { return rep_->ext; }
std::size_t Domain::extension_degree() const { return rep_->ext.empty() ? 1 : rep_->ext.size() - 1; }
const std::string& Domain::generator_name() const { return rep_->gen; }
bool Domain::has_generator() const { return !rep_->gen.empty(); }

Integer Domain::cardinality() const {
  if (!is_finite()) fail(ErrorCode::InfiniteDomain, name() + " is infinite");
  Integer q;
  mpz_pow_ui(q.get_mpz_t(), rep_->modulus.get_mpz_t(), extension_degree());
  return q;
}

Domain Domain::prime_subring() const {
  switch (rep_->kind) {
    case DomainKind::Integers: return integers();
    case DomainKind::Rationals:
    case DomainKind::NumberField: return rationals();
    case DomainKind::FunctionField: return rep_->modulus == 0 ? rationals() : prime_field(rep_->modulus);
    case DomainKind::IntegersMod: return *this;
    case DomainKind::PrimeField: return *this;
    case DomainKind::FiniteField: return prime_field(rep_->modulus);
  }
  return *this;
}

Domain Domain::base_field() const {
  switch (rep_->kind) {
    case DomainKind::FunctionField:
    case DomainKind::FiniteField:
    case DomainKind::NumberField:
      return prime_subring();
    default:
      return *this;
  }
}

bool Domain::operator==(const Domain& o) const {
  if (rep_ == o.rep_) return true;
  return rep_->kind == o.rep_->kind && rep_->modulus == o.rep_->modulus && rep_->ext == o.rep_->ext &&
         rep_->gen == o.rep_->gen;
}

// ---------------------------------------------------------------------------
// Element construction

Scalar Domain::zero() const { return Scalar{}; }
Scalar Domain::one() const { return from_integer(1); }

Scalar Domain::from_integer(const Integer& z) const {
  switch (rep_->kind) {
    case DomainKind::Integers:
    case DomainKind::Rationals:
    case DomainKind::NumberField:
      return z == 0 ? Scalar{} : make({Rational(z)});
    default: {
      if (rep_->modulus == 0) return z == 0 ? Scalar{} : make({Rational(z)});
      Integer r = dense::mod(z, rep_->modulus);
      return r == 0 ? Scalar{} : make({Rational(r)});
    }
  }
}

Scalar Domain::from_rational(const Rational& q) const {
  if (q.get_den() == 1) return from_integer(q.get_num());
  switch (rep_->kind) {
    case DomainKind::Integers:
      fail(ErrorCode::NotInvertible, q.get_str() + " is not an integer");
    case DomainKind::Rationals:
    case DomainKind::NumberField:
      return make({q});
    case DomainKind::FunctionField:
      if (rep_->modulus == 0) return make({q});
      [[fallthrough]];
    default: {
      Integer inv;
      Integer den = dense::mod(q.get_den(), rep_->modulus);
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), rep_->modulus.get_mpz_t()) == 0)
        fail(ErrorCode::NotInvertible, q.get_den().get_str() + " is not invertible in " + name());
      return from_integer(q.get_num() * inv);
    }
  }
}

Scalar Domain::generator() const {
  if (!has_generator()) fail(ErrorCode::InvalidArgument, name() + " has no generator");
  return from_dense({Rational(0), Rational(1)});
}

Scalar Domain::from_dense(const DenseVec& num) const {
  Char ch = char_of(*rep_);
  switch (rep_->kind) {
    case DomainKind::FiniteField:
    case DomainKind::NumberField:
      return make(dense::rem(dense::reduce(num, ch), rep_->ext, ch));
    case DomainKind::FunctionField:
      return make(dense::reduce(num, ch));
    default: {
      DenseVec t = dense::trim(DenseVec(num));
      if (t.size() > 1) fail(ErrorCode::InvalidArgument, name() + " has no generator");
      return t.empty() ? Scalar{} : from_rational(t[0]);
    }
  }
}

Scalar Domain::from_fraction(const DenseVec& num, const DenseVec& den) const {
  if (rep_->kind != DomainKind::FunctionField) return div(from_dense(num), from_dense(den));
  Char ch = char_of(*rep_);
  DenseVec n = dense::reduce(num, ch), d = dense::reduce(den, ch);
  if (d.empty()) fail(ErrorCode::NotInvertible, "zero denominator");
  if (n.empty()) return Scalar{};
  DenseVec g = dense::gcd(n, d, ch);
  if (g.size() > 1) {
    n = dense::divmod(n, g, ch).first;
    d = dense::divmod(d, g, ch).first;
  }
  Rational lc = d.back();
  if (lc != 1) {
    Rational il = dense::inverse(lc, ch);
    n = dense::scale(n, il, ch);
    d = dense::scale(d, il, ch);
  }
  Scalar s;
  s.num = std::move(n);
  if (!(d.size() == 1 && d[0] == 1)) s.den = std::move(d);
  return s;
}

// ---------------------------------------------------------------------------
// Arithmetic

bool Domain::is_one(const Scalar& a) const { return a.den.empty() && a.num.size() == 1 && a.num[0] == 1; }

bool Domain::is_unit(const Scalar& a) const {
  if (is_zero(a)) return false;
  switch (rep_->kind) {
    case DomainKind::Integers:
      return abs(a.num[0]) == 1;
    case DomainKind::IntegersMod: {
      Integer g;
      Integer v = a.num[0].get_num();
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), rep_->modulus.get_mpz_t());
      return g == 1;
    }
    default:
      return true;
  }
}

Scalar Domain::add(const Scalar& a, const Scalar& b) const {
  Char ch = char_of(*rep_);
  if (rep_->kind == DomainKind::FunctionField) {
    if (a.den.empty() && b.den.empty()) return make(dense::add(a.num, b.num, ch));
    DenseVec ad = a.den.empty() ? DenseVec{1} : a.den;
    DenseVec bd = b.den.empty() ? DenseVec{1} : b.den;
    return from_fraction(dense::add(dense::mul(a.num, bd, ch), dense::mul(b.num, ad, ch), ch), dense::mul(ad, bd, ch));
  }
  return make(dense::add(a.num, b.num, ch));
}

Scalar Domain::neg(const Scalar& a) const {
  Char ch = char_of(*rep_);
  Scalar r;
  r.num = dense::neg(a.num, ch);
  r.den = a.den;
  return r;
}

Scalar Domain::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Domain::mul(const Scalar& a, const Scalar& b) const {
  if (is_zero(a) || is_zero(b)) return Scalar{};
  Char ch = char_of(*rep_);
  switch (rep_->kind) {
    case DomainKind::FiniteField:
    case DomainKind::NumberField:
      return make(dense::rem(dense::mul(a.num, b.num, ch), rep_->ext, ch));
    case DomainKind::FunctionField: {
      if (a.den.empty() && b.den.empty()) return make(dense::mul(a.num, b.num, ch));
      DenseVec ad = a.den.empty() ? DenseVec{1} : a.den;
      DenseVec bd = b.den.empty() ? DenseVec{1} : b.den;
      return from_fraction(dense::mul(a.num, b.num, ch), dense::mul(ad, bd, ch));
    }
    default:
      return make(dense::mul(a.num, b.num, ch));
  }
}

Scalar Domain::inv(const Scalar& a) const {
  if (is_zero(a)) fail(ErrorCode::NotInvertible, "division by zero in " + name());
  Char ch = char_of(*rep_);
  switch (rep_->kind) {
    case DomainKind::Integers:
      if (abs(a.num[0]) != 1) fail(ErrorCode::NotInvertible, a.num[0].get_str() + " is not a unit of ZZ");
      return a;
    case DomainKind::Rationals:
      return make({1 / a.num[0]});
    case DomainKind::IntegersMod:
    case DomainKind::PrimeField: {
      Integer inv;
      Integer v = a.num[0].get_num();
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), rep_->modulus.get_mpz_t()) == 0)
        fail(ErrorCode::NotInvertible, v.get_str() + " is not a unit of " + name());
      return from_integer(inv);
    }
    case DomainKind::FiniteField:
    case DomainKind::NumberField:
      return make(dense::inverse_mod(a.num, rep_->ext, ch));
    case DomainKind::FunctionField:
      return from_fraction(a.den.empty() ? DenseVec{1} : a.den, a.num);
  }
  return a;
}

Scalar Domain::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Domain::pow(const Scalar& a, const Integer& e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar result = one();
  Scalar base = a;
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::optional<Scalar> Domain::divide_exact(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) return std::nullopt;
  if (rep_->kind == DomainKind::Integers) {
    if (is_zero(a)) return Scalar{};
    Integer x = a.num[0].get_num(), y = b.num[0].get_num();
    if (x % y != 0) return std::nullopt;
    return from_integer(x / y);
  }
  if (rep_->kind == DomainKind::IntegersMod) {
    // solve b*q = a mod n when possible
    Integer n = rep_->modulus, x = as_integer(a), y = as_integer(b), g;
    mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
    if (x % g != 0) return std::nullopt;
    Integer n2 = n / g, inv;
    Integer y2 = y / g;
    mpz_invert(inv.get_mpz_t(), y2.get_mpz_t(), n2.get_mpz_t());
    return from_integer((x / g) * inv % n2);
  }
  return div(a, b);
}

Integer Domain::as_integer(const Scalar& a) const {
  if (a.num.empty()) return 0;
  if (a.num.size() > 1 || !a.den.empty() || a.num[0].get_den() != 1)
    fail(ErrorCode::InvalidArgument, "scalar is not an integer");
  return a.num[0].get_num();
}

Rational Domain::as_rational(const Scalar& a) const {
  if (a.num.empty()) return 0;
  if (a.num.size() > 1 || !a.den.empty()) fail(ErrorCode::InvalidArgument, "scalar is not rational");
  return a.num[0];
}

bool Domain::is_prime_subring_element(const Scalar& a) const { return a.num.size() <= 1 && a.den.empty(); }

// ---------------------------------------------------------------------------
// Canonical maps

bool Domain::has_canonical_map(const Domain& from, const Domain& to) {
  if (from == to) return true;
  switch (from.kind()) {
    case DomainKind::Integers:
      return true;
    case DomainKind::Rationals:
      return to.characteristic() == 0 && to.kind() != DomainKind::Integers;
    case DomainKind::IntegersMod:
    case DomainKind::PrimeField: {
      Integer c = to.characteristic();
      if (c == 0) return false;
      return from.modulus() % c == 0;
    }
    default:
      return false;
  }
}

Scalar Domain::coerce(const Domain& from, const Scalar& a) const {
  if (from == *this) return a;
  if (!has_canonical_map(from, *this))
    fail(ErrorCode::NoCanonicalMap, "no canonical map " + from.name() + " -> " + name());
  if (from.is_zero(a)) return Scalar{};
  if (from.kind() == DomainKind::Rationals) return from_rational(a.num[0]);
  return from_integer(a.num[0].get_num());
}

// ---------------------------------------------------------------------------
// Finite enumeration

Scalar Domain::element_at(const Integer& index) const {
  if (!is_finite()) fail(ErrorCode::InfiniteDomain, name() + " is infinite");
  if (rep_->kind != DomainKind::FiniteField) return from_integer(index);
  DenseVec v;
  Integer k = index;
  for (std::size_t i = 0; i < extension_degree(); ++i) {
    Integer d = k % rep_->modulus;
    v.push_back(Rational(d));
    k /= rep_->modulus;
  }
  return from_dense(v);
}

std::vector<Scalar> Domain::elements() const {
  Integer q = cardinality();
  if (q > 1000000) fail(ErrorCode::Unsupported, "refusing to enumerate " + name());
  std::vector<Scalar> out;
  for (Integer i = 0; i < q; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<std::pair<Scalar, Scalar>> Domain::units() const {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (auto& e : elements()) {
    if (is_unit(e)) out.emplace_back(e, inv(e));
  }
  return out;
}

std::vector<std::pair<Scalar, Scalar>> domain_units(const Domain& d) {
  if (!d.is_finite()) fail(ErrorCode::InfiniteDomain, d.name() + " has infinitely many elements");
  return d.units();
}

// ---------------------------------------------------------------------------
// Printing

std::string Domain::to_string(const Scalar& a) const {
  if (a.num.empty()) return "0";
  const std::string& g = rep_->gen;
  switch (rep_->kind) {
    case DomainKind::FiniteField:
    case DomainKind::NumberField:
      return dense::to_string(a.num, g, true);
    case DomainKind::FunctionField: {
      std::string n = dense::to_string(a.num, g, true);
      if (a.den.empty()) return n;
      std::string d = dense::to_string(a.den, g, true);
      bool nsimple = dense::is_monomial(a.num);
      bool dsimple = a.den.size() >= 2 && dense::is_monomial(a.den) && a.den.back() == 1;
      return (nsimple ? n : "(" + n + ")") + "/" + (dsimple ? d : "(" + d + ")");
    }
    default:
      return a.num[0].get_str();
  }
}

bool Domain::needs_parens(const Scalar& a) const {
  std::string s = to_string(a);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') return true;
  }
  if (rep_->kind == DomainKind::FiniteField || rep_->kind == DomainKind::NumberField) {
    // "2*t" would read as a coefficient 2 times t anyway; keep it bare
    return false;
  }
  return false;
}

std::string Domain::name() const {
  switch (rep_->kind) {
    case DomainKind::Integers: return "ZZ";
    case DomainKind::Rationals: return "QQ";
    case DomainKind::IntegersMod: return "ZZ/" + rep_->modulus.get_str();
    case DomainKind::PrimeField: return "GF(" + rep_->modulus.get_str() + ")";
    case DomainKind::FiniteField:
      return "GF(" + cardinality().get_str() + "," + dense::to_string(rep_->ext, rep_->gen, false) + ")";
    case DomainKind::NumberField:
      return "QQ[" + rep_->gen + "]/(" + dense::to_string(rep_->ext, rep_->gen, false) + ")";
    case DomainKind::FunctionField:
      return (rep_->modulus == 0 ? std::string("QQ") : "GF(" + rep_->modulus.get_str() + ")") + "(" + rep_->gen + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Integers

namespace {

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    const unsigned limit = 1000000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Integer& n) {
  static const unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : witnesses) {
    Integer x;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_rec(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  const auto& sp = small_primes();
  if (n <= 1000000) {
    unsigned long v = n.get_ui();
    return std::binary_search(sp.begin(), sp.end(), static_cast<unsigned>(v));
  }
  for (unsigned p : sp) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    if (Integer(p) * p > n) return true;
  }
  return miller_rabin(n);
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n0) {
  if (n0 == 0) fail(ErrorCode::InvalidArgument, "cannot factor 0");
  Integer n = abs(n0);
  std::vector<Integer> primes;
  for (unsigned p : small_primes()) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.push_back(p);
      n /= p;
    }
    if (p > 10000) break;
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> primes_up_to(const Integer& hi) {
  std::vector<Integer> out;
  if (hi <= 1000000) {
    for (unsigned p : small_primes()) {
      if (p > hi) break;
      out.emplace_back(p);
    }
    return out;
  }
  fail(ErrorCode::Unsupported, "prime bound too large");
}

}  // namespace schemex
