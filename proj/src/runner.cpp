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

#include "schemex/runner.hpp"

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <variant>

#include "json.hpp"
#include "schemex/finite_sheaf.hpp"
#include "schemex/morphism.hpp"
#include "schemex/noether.hpp"
#include "schemex/proj.hpp"
#include "schemex/spectrum.hpp"

namespace schemex {

namespace {

using json = nlohmann::ordered_json;
using dsl::Expr;
using dsl::Statement;

struct PolyValue {
  PresentedAlgebra ring;
  Poly value;
};

struct PointValue {
  Domain field;
  std::vector<Scalar> raw;  // as written
};

using Value = std::variant<PresentedAlgebra, Ideal, PolyValue, PointValue, GradedAlgebra, RingMorphism,
                           std::shared_ptr<const StructureSheaf>>;

std::string structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::ZeroRing: return "zero_ring";
    case StructureKind::PolynomialRing: return "polynomial_ring";
    case StructureKind::Field: return "field";
    case StructureKind::ProductOfFields: return "product_of_fields";
    case StructureKind::LocalNonReduced: return "local_non_reduced";
    case StructureKind::ProductOfLocalRings: return "product_of_local_rings";
  }
  return "unknown";
}

json poly_list(const std::vector<Poly>& ps) {
  json out = json::array();
  for (auto& p : ps) out.push_back(p.to_string());
  return out;
}

json point_record(const SpecPoint& x) {
  return json{{"label", x.label}, {"residue_field", x.residue_name}, {"ideal_generators", poly_list(x.ideal)}, {"closed", x.closed}};
}

class Runner {
 public:
  explicit Runner(const RunOptions& o) : opts_(o) {}

  // Fills `out` with the result fields of one statement.
  void run(const Statement& st, json& out) {
    if (st.kind == Statement::Kind::Definition) return define(st, out);
    std::vector<std::string> words;
    for (auto& e : st.positionals) {
      if (e.kind != Expr::Kind::Name || env_.count(e.text)) break;
      words.push_back(e.text);
    }
    st_ = &st;
    auto it = commands().end();
    std::size_t used = 0;
    for (std::size_t n = std::min<std::size_t>(words.size(), 2); n > 0 && used == 0; --n) {
      std::string key = words[0];
      for (std::size_t k = 1; k < n; ++k) key += " " + words[k];
      it = commands().find(key);
      if (it != commands().end()) used = n;
    }
    if (used == 0) fail(ErrorCode::InvalidArgument, "unknown command '" + (words.empty() ? dsl::print(st.positionals.at(0)) : words[0]) + "'");
    args_.assign(st.positionals.begin() + static_cast<long>(used), st.positionals.end());
    out["command"] = it->first;
    (this->*(it->second))(out);
  }

 private:
  using Handler = void (Runner::*)(json&);

  static const std::map<std::string, Handler>& commands() {
    static const std::map<std::string, Handler> table = {
        {"describe", &Runner::cmd_describe},
        {"specialize", &Runner::cmd_specialize},
        {"tensor", &Runner::cmd_tensor},
        {"split", &Runner::cmd_split},
        {"nilpotent", &Runner::cmd_nilpotent},
        {"localize", &Runner::cmd_localize},
        {"krull", &Runner::cmd_krull},
        {"spec describe", &Runner::cmd_spec_describe},
        {"spec closure", &Runner::cmd_spec_closure},
        {"spec zeros", &Runner::cmd_spec_zeros},
        {"fiber", &Runner::cmd_fiber},
        {"normalize", &Runner::cmd_normalize},
        {"nullstellensatz", &Runner::cmd_nullstellensatz},
        {"nullstellensatz random", &Runner::cmd_nullstellensatz_random},
        {"maximal", &Runner::cmd_maximal},
        {"proj charts", &Runner::cmd_proj_charts},
        {"proj points", &Runner::cmd_proj_points},
        {"proj segre", &Runner::cmd_proj_segre},
        {"proj conic", &Runner::cmd_proj_conic},
        {"proj veronese", &Runner::cmd_proj_veronese},
        {"proj kernel", &Runner::cmd_proj_kernel},
        {"proj sections", &Runner::cmd_proj_sections},
        {"sheaf check", &Runner::cmd_sheaf_check},
        {"sheaf twist", &Runner::cmd_sheaf_twist},
    };
    return table;
  }

  // ---- argument access

  static std::string text(const Expr& e) { return e.kind == Expr::Kind::String ? e.text : dsl::print(e); }

  const Expr* flag(const std::string& name) const {
    for (auto& f : st_->flags)
      if (f.name == name) {
        if (!f.value) fail(ErrorCode::InvalidArgument, "--" + name + " needs a value");
        return &*f.value;
      }
    return nullptr;
  }

  bool has_flag(const std::string& name) const {
    for (auto& f : st_->flags)
      if (f.name == name) return true;
    return false;
  }

  const Expr& positional(std::size_t i, const std::string& what) const {
    if (i >= args_.size()) fail(ErrorCode::InvalidArgument, "missing argument: " + what);
    return args_[i];
  }

  // A positional argument, or the named flag when there is none.
  const Expr& argument(std::size_t i, const std::string& flag_name) const {
    if (i < args_.size()) return args_[i];
    if (const Expr* e = flag(flag_name)) return *e;
    fail(ErrorCode::InvalidArgument, "missing argument: " + flag_name);
  }

  long integer_flag(const std::string& name, long fallback) const {
    const Expr* e = flag(name);
    if (!e) return fallback;
    std::string s = text(*e);
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorCode::InvalidArgument, "--" + name + " expects an integer, got " + s);
  }

  SpecBound bound() const {
    SpecBound b;
    b.primes = integer_flag("bound", opts_.bound);
    b.degree = static_cast<unsigned>(integer_flag("degree", 1));
    b.height = integer_flag("height", 2);
    return b;
  }

  template <class T>
  const T* lookup(const Expr& e) const {
    if (e.kind != Expr::Kind::Name) return nullptr;
    auto it = env_.find(e.text);
    return it == env_.end() ? nullptr : std::get_if<T>(&it->second);
  }

  PresentedAlgebra ring(const Expr& e) const {
    if (auto* a = lookup<PresentedAlgebra>(e)) return *a;
    if (auto* i = lookup<Ideal>(e)) return i->quotient();
    if (e.kind == Expr::Kind::Call && e.args[0].kind == Expr::Kind::Name) {
      const std::string& f = e.args[0].text;
      if (f == "tensor" && e.args.size() == 3) return tensor_product(ring(e.args[1]), ring(e.args[2])).algebra;
      if (f == "product" && e.args.size() >= 2) {
        std::vector<PresentedAlgebra> parts;
        for (std::size_t k = 1; k < e.args.size(); ++k) parts.push_back(ring(e.args[k]));
        return product(parts);
      }
      if (f == "localize" && e.args.size() == 3) {
        PresentedAlgebra a = ring(e.args[1]);
        return schemex::localize(a, element(a, e.args[2]));
      }
    }
    return parse_algebra(text(e));
  }

  Poly element(const PresentedAlgebra& a, const Expr& e) const {
    if (auto* p = lookup<PolyValue>(e)) return p->value;
    return a.element(text(e));
  }

  Ideal ideal(const Expr& e) const {
    if (auto* i = lookup<Ideal>(e)) return *i;
    const Expr* r = flag("ring");
    if (!r) fail(ErrorCode::InvalidArgument, "an ideal needs a defined name or --ring");
    PresentedAlgebra a = ring(*r);
    return Ideal{a, generators(a, e)};
  }

  std::vector<Poly> generators(const PresentedAlgebra& a, const Expr& e) const {
    std::vector<Poly> gens;
    if (e.kind == Expr::Kind::Tuple) {
      for (auto& g : e.args) gens.push_back(element(a, g));
    } else {
      gens.push_back(element(a, e));
    }
    return gens;
  }

  GradedAlgebra graded(const Expr& e) const {
    if (auto* g = lookup<GradedAlgebra>(e)) return *g;
    return parse_graded(text(e));
  }

  RingMorphism morphism(const Expr& e) const {
    if (auto* m = lookup<RingMorphism>(e)) return *m;
    return parse_morphism(text(e));
  }

  Domain field_flag() const {
    const Expr* f = flag("field");
    return f ? parse_domain(text(*f)) : Domain::rationals();
  }

  PointValue point(const Expr& e, const Domain& field) const {
    if (auto* p = lookup<PointValue>(e)) return *p;
    return PointValue{field, parse_coordinates(field, text(e))};
  }

  std::shared_ptr<const StructureSheaf> space(const Expr& e) const {
    if (auto* s = lookup<std::shared_ptr<const StructureSheaf>>(e)) return *s;
    if (e.kind != Expr::Kind::Call || e.args.size() != 2 || e.args[0].kind != Expr::Kind::Name || e.args[0].text != "spec")
      fail(ErrorCode::InvalidArgument, "a finite space is written spec(<finite ring>)");
    const Expr& arg = e.args[1];
    if (arg.kind == Expr::Kind::Call && arg.args[0].kind == Expr::Kind::Name && arg.args[0].text == "product") {
      if (arg.args.size() < 2) fail(ErrorCode::InvalidArgument, "product needs factors");
      FiniteRing r = FiniteRing::from_algebra(ring(arg.args[1]));
      for (std::size_t k = 2; k < arg.args.size(); ++k) r = FiniteRing::product(r, FiniteRing::from_algebra(ring(arg.args[k])));
      return std::make_shared<const StructureSheaf>(structure_sheaf(r));
    }
    return std::make_shared<const StructureSheaf>(structure_sheaf(ring(arg)));
  }

  // ---- definitions

  void define(const Statement& st, json& out) {
    out["defined"] = st.name;
    out["kind"] = st.keyword;
    st_ = &st;
    const Expr& v = *st.value;
    auto qualifier = [&]() -> const Expr& {
      if (st.qualifier.size() != 1) fail(ErrorCode::InvalidArgument, st.keyword + " definitions take one qualifier");
      return st.qualifier[0];
    };
    if (st.keyword == "ring") {
      PresentedAlgebra a = ring(v);
      out["value"] = a.to_string();
      env_.insert_or_assign(st.name, a);
    } else if (st.keyword == "ideal") {
      if (st.separator != "in") fail(ErrorCode::InvalidArgument, "an ideal is written (g1, ..., gk) in <ring>");
      PresentedAlgebra a = ring(qualifier());
      Ideal i{a, generators(a, v)};
      out["value"] = poly_list(i.gens);
      out["ring"] = a.to_string();
      env_.insert_or_assign(st.name, i);
    } else if (st.keyword == "poly") {
      if (st.separator.empty()) fail(ErrorCode::InvalidArgument, "a polynomial is written <ring> : <expression>");
      PresentedAlgebra a = ring(st.separator == ":" ? v : qualifier());
      Poly p = element(a, st.separator == ":" ? qualifier() : v);
      out["value"] = p.to_string();
      out["ring"] = a.to_string();
      env_.insert_or_assign(st.name, PolyValue{a, p});
    } else if (st.keyword == "point") {
      Domain k = st.separator == "in" ? parse_domain(text(qualifier())) : Domain::rationals();
      PointValue p = point(v, k);
      out["value"] = point_normalize(p.field, p.raw).to_string();
      env_.insert_or_assign(st.name, p);
    } else if (st.keyword == "graded") {
      GradedAlgebra g = graded(v);
      out["value"] = g.to_string();
      env_.insert_or_assign(st.name, g);
    } else if (st.keyword == "map") {
      std::string src = text(v);
      if (st.separator == ":") {
        src += ";";
        for (std::size_t k = 0; k < st.qualifier.size(); ++k) src += (k ? ", " : " ") + text(st.qualifier[k]);
      }
      RingMorphism m = parse_morphism(src);
      out["value"] = m.to_string();
      env_.insert_or_assign(st.name, m);
    } else if (st.keyword == "space") {
      auto s = space(v);
      out["value"] = space_json(*s);
      env_.insert_or_assign(st.name, s);
    }
  }

  // ---- rings

  void cmd_describe(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    out["ring"] = a.to_string();
    structure_json(a, out);
  }

  static void structure_json(const PresentedAlgebra& a, json& out) {
    StructureReport r = describe_structure(a);
    out["structure"] = structure_kind_name(r.kind);
    if (r.kind != StructureKind::PolynomialRing && r.kind != StructureKind::ZeroRing) out["degree"] = r.degree;
    if (!r.factors.empty()) out["factors"] = r.factors;
    if (r.discriminant) out["discriminant"] = r.discriminant->get_str();
    if (r.nilpotent) out["nilpotent"] = json{{"element", r.nilpotent->element.to_string()}, {"index", r.nilpotent->index}};
    out["summary"] = r.summary;
  }

  void cmd_specialize(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    out["ring"] = a.to_string();
    json rows = json::array();
    for (std::size_t k = 1; k < args_.size(); ++k) {
      Domain d = parse_domain(text(args_[k]));
      PresentedAlgebra s = specialize(a, d);
      json row{{"over", d.name()}, {"ring", s.to_string()}};
      structure_json(s, row);
      rows.push_back(row);
    }
    out["rows"] = rows;
  }

  void cmd_tensor(json& out) {
    PresentedAlgebra b = ring(positional(0, "left factor"));
    PresentedAlgebra c = ring(positional(1, "right factor"));
    TensorResult t = tensor_product(b, c);
    out["ring"] = t.algebra.to_string();
    json ren = json::array();
    for (auto& [from, to] : t.renamed) ren.push_back(from + " -> " + to);
    out["renamed"] = ren;
  }

  void cmd_split(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    FieldSplit s = split_tensor_of_fields(a);
    out["ring"] = a.to_string();
    out["product"] = s.product.to_string();
    out["factors"] = s.factor_descriptions;
    out["certified"] = s.certificate.verify();
  }

  void cmd_nilpotent(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    out["ring"] = a.to_string();
    auto w = find_nilpotent(a);
    if (!w) {
      out["nilpotent"] = nullptr;
      return;
    }
    Poly power = w->element;
    for (unsigned k = 1; k < w->index; ++k) power = power * w->element;
    out["nilpotent"] = json{{"element", w->element.to_string()},
                            {"index", w->index},
                            {"verified", !a.is_zero_element(w->element) && a.is_zero_element(power)}};
  }

  void cmd_localize(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    Poly f = element(a, positional(1, "element"));
    out["ring"] = a.to_string();
    out["at"] = f.to_string();
    out["localization"] = schemex::localize(a, f).to_string();
  }

  void cmd_krull(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    out["ring"] = a.to_string();
    out["dimension"] = krull_dimension(a).to_string();
  }

  // ---- spectra

  void cmd_spec_describe(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    SpecCatalogue s = SpecCatalogue::recognize(a);
    SpecBound b = bound();
    out["ring"] = a.to_string();
    out["family"] = std::string(family_name(s.base_family()));
    out["finite"] = s.finite_spectrum();
    out["bound"] = json{{"primes", b.primes}, {"degree", b.degree}, {"height", b.height}};
    json pts = json::array();
    for (auto& x : s.points(b)) pts.push_back(point_record(x));
    out["points"] = pts;
  }

  SpecPoint spec_point(const SpecCatalogue& s, const Expr& e, const SpecBound& b) const {
    std::string label = e.kind == Expr::Kind::Number ? "x_" + e.text : text(e);
    auto x = s.find(label, b);
    if (!x) fail(ErrorCode::NotCatalogued, "no point " + label + " under the bound");
    return *x;
  }

  void cmd_spec_closure(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    SpecCatalogue s = SpecCatalogue::recognize(a);
    SpecBound b = bound();
    SpecPoint x = spec_point(s, argument(1, "point"), b);
    ZariskiClosed z = closure(s, x);
    out["ring"] = a.to_string();
    out["point"] = x.label;
    out["closure"] = z.to_string();
    json pts = json::array();
    for (auto& y : z.points(b)) pts.push_back(y.label);
    out["points"] = pts;
  }

  void cmd_spec_zeros(json& out) {
    PresentedAlgebra a = ring(positional(0, "ring"));
    SpecCatalogue s = SpecCatalogue::recognize(a);
    Poly f = element(a, argument(1, "element"));
    out["ring"] = a.to_string();
    out["element"] = f.to_string();
    json pts = json::array();
    for (auto& x : s.points(bound()))
      if (s.vanishes(f, x)) pts.push_back(x.label);
    out["zeros"] = pts;
  }

  void cmd_fiber(json& out) {
    RingMorphism phi = morphism(argument(0, "map"));
    SpecCatalogue s = SpecCatalogue::recognize(phi.source());
    SpecBound b = bound();
    SpecPoint x = spec_point(s, argument(1, "at"), b);
    FiberDescription d = fiber(phi, x, b);
    out["map"] = phi.to_string();
    out["base_point"] = point_record(d.base_point);
    out["fiber_ring"] = d.ring.to_string();
    out["method"] = d.method;
    if (d.points) {
      json pts = json::array();
      for (auto& y : *d.points) pts.push_back(point_record(y));
      out["points"] = pts;
    } else {
      out["points"] = nullptr;
    }
    out["complete"] = d.complete;
  }

  // ---- Noether normalization and the Nullstellensatz

  Ideal ideal_argument() const {
    if (!args_.empty()) return ideal(args_[0]);
    const Expr* e = flag("ideal");
    if (!e) fail(ErrorCode::InvalidArgument, "missing argument: ideal");
    return ideal(*e);
  }

  void cmd_normalize(json& out) {
    Ideal i = ideal_argument();
    PresentedAlgebra poly = PresentedAlgebra::polynomial(i.ambient.base(), i.ambient.vars());
    NormalizationResult r = noether_normalize(poly.ring(), i.lifted());
    out["ring"] = poly.to_string();
    out["ideal"] = poly_list(i.lifted());
    out["d"] = r.d();
    out["y"] = poly_list(r.y);
    json steps = json::array();
    for (auto& s : r.trace) {
      json step{{"vars", s.vars}, {"chosen", s.chosen.to_string()}, {"p", s.prime}};
      json ex = json::array();
      for (auto& e : s.exponents) ex.push_back(e.get_str());
      step["exponents"] = ex;
      step["new_vars"] = s.new_vars;
      step["equation"] = s.equation.to_string();
      step["degree"] = s.degree;
      step["verified"] = s.verify();
      steps.push_back(step);
    }
    out["trace"] = steps;
    out["verified"] = r.verify();
  }

  void cmd_nullstellensatz(json& out) {
    Ideal i = ideal_argument();
    PresentedAlgebra poly = PresentedAlgebra::polynomial(i.ambient.base(), i.ambient.vars());
    NullstellensatzVerdict v = has_common_zero(poly.ring(), i.lifted());
    out["ring"] = poly.to_string();
    out["ideal"] = poly_list(i.lifted());
    out["common_zero"] = v.common_zero;
    if (v.certificate) out["certificate"] = poly_list(*v.certificate);
  }

  // Random small systems: has_common_zero against the unit-ideal test.
  void cmd_nullstellensatz_random(json& out) {
    long count = integer_flag("count", 50);
    auto seed = static_cast<std::uint64_t>(integer_flag("seed", static_cast<long>(opts_.seed)));
    Domain k = field_flag();
    std::mt19937_64 g(seed);
    PresentedAlgebra poly = PresentedAlgebra::polynomial(k, {"X", "Y"});
    long agree = 0, empty = 0;
    for (long t = 0; t < count; ++t) {
      std::vector<Poly> ps;
      std::size_t n = 1 + g() % 3;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Term> terms;
        for (int m = 0; m < 3; ++m) {
          Monomial mono{static_cast<unsigned>(g() % 3), static_cast<unsigned>(g() % 3)};
          terms.push_back(Term{mono, k.from_int(static_cast<long>(g() % 5) - 2)});
        }
        ps.push_back(Poly::from_terms(poly.ring(), terms));
      }
      bool zero = has_common_zero(poly.ring(), ps).common_zero;
      bool unit = is_zero_ring(PresentedAlgebra(poly.ring(), ps));
      agree += zero != unit;
      empty += !zero;
    }
    out["field"] = k.name();
    out["seed"] = seed;
    out["systems"] = count;
    out["agree"] = agree;
    out["without_common_zero"] = empty;
  }

  void cmd_maximal(json& out) {
    Ideal i = ideal_argument();
    MaximalityCertificate c = is_maximal(i);
    out["ring"] = i.ambient.to_string();
    out["ideal"] = poly_list(i.gens);
    out["maximal"] = c.maximal;
    out["certificate"] = c.to_string();
  }

  // ---- projective geometry

  void cmd_proj_charts(json& out) {
    GradedAlgebra b = graded(argument(0, "graded"));
    out["graded"] = b.to_string();
    out["empty"] = proj_is_empty(b);
    json charts = json::array();
    for (auto& c : proj_atlas(b)) charts.push_back(json{{"index", c.index}, {"chart", c.to_string()}, {"verified", c.verify(b)}});
    out["charts"] = charts;
  }

  void cmd_proj_points(json& out) {
    GradedAlgebra b = graded(argument(0, "space"));
    auto pts = rational_points(b);
    out["graded"] = b.to_string();
    out["count"] = pts.size();
    json list = json::array();
    for (auto& p : pts) list.push_back(p.to_string());
    out["points"] = list;
  }

  static json raw_json(const Domain& k, const std::vector<Scalar>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + k.to_string(c[i]);
    return s + "]";
  }

  // z_ij z_i'j' = z_ij' z_i'j for a rows x cols matrix of coordinates.
  static bool minors_vanish(const Domain& k, const std::vector<Scalar>& z, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t i2 = i + 1; i2 < rows; ++i2)
        for (std::size_t j = 0; j < cols; ++j)
          for (std::size_t j2 = j + 1; j2 < cols; ++j2)
            if (k.mul(z[i * cols + j], z[i2 * cols + j2]) != k.mul(z[i * cols + j2], z[i2 * cols + j])) return false;
    return true;
  }

  void cmd_proj_segre(json& out) {
    Domain k = field_flag();
    PointValue p = point(argument(0, "p"), k), q = point(argument(1, "q"), k);
    if (!(p.field == q.field)) fail(ErrorCode::InvalidArgument, "both points need the same field");
    std::vector<Scalar> z;
    for (auto& a : p.raw)
      for (auto& b : q.raw) z.push_back(p.field.mul(a, b));
    out["p"] = raw_json(p.field, p.raw);
    out["q"] = raw_json(q.field, q.raw);
    out["image"] = raw_json(p.field, z);
    out["normalized"] = segre(point_normalize(p.field, p.raw), point_normalize(q.field, q.raw)).to_string();
    out["quadrics_vanish"] = minors_vanish(p.field, z, p.raw.size(), q.raw.size());
  }

  void cmd_proj_conic(json& out) {
    Domain k = field_flag();
    PointValue p = point(argument(0, "p"), k);
    if (p.raw.size() != 2) fail(ErrorCode::InvalidArgument, "the conic map starts from P^1");
    const Domain& f = p.field;
    std::vector<Scalar> z{f.mul(p.raw[0], p.raw[0]), f.mul(p.raw[0], p.raw[1]), f.mul(p.raw[1], p.raw[1])};
    out["p"] = raw_json(f, p.raw);
    out["image"] = raw_json(f, z);
    out["normalized"] = conic(point_normalize(f, p.raw)).to_string();
    out["quadrics_vanish"] = f.mul(z[0], z[2]) == f.mul(z[1], z[1]);
  }

  void cmd_proj_veronese(json& out) {
    Domain k = field_flag();
    PointValue p = point(argument(0, "p"), k);
    const Domain& f = p.field;
    std::vector<Scalar> z;
    for (auto& a : p.raw)
      for (auto& b : p.raw) z.push_back(f.mul(a, b));
    out["p"] = raw_json(f, p.raw);
    out["image"] = raw_json(f, z);
    out["normalized"] = veronese(point_normalize(f, p.raw)).to_string();
    out["quadrics_vanish"] = minors_vanish(f, z, p.raw.size(), p.raw.size());
  }

  void cmd_proj_kernel(json& out) {
    std::string which = text(positional(0, "segre, conic or veronese"));
    Domain k = field_flag();
    auto n = static_cast<std::size_t>(integer_flag("n", 1));
    auto m = static_cast<std::size_t>(integer_flag("m", 1));
    std::optional<ProjectiveMap> map;
    std::vector<Poly> expected;
    if (which == "segre") {
      map = segre_map(k, n, m);
      expected = segre_ideal(*map);
    } else if (which == "conic") {
      map = conic_map(k);
      expected = conic_ideal(*map);
    } else if (which == "veronese") {
      map = veronese_map(k, n);
      expected = veronese_ideal(*map);
    } else {
      fail(ErrorCode::InvalidArgument, "unknown map " + which);
    }
    IdealComparison c = compare_image_ideal(*map, expected);
    out["map"] = map->name;
    out["kernel"] = poly_list(c.computed);
    out["expected"] = poly_list(c.expected);
    out["equal_radicals"] = c.equal_radicals();
  }

  void cmd_proj_sections(json& out) {
    Domain k = field_flag();
    auto n = static_cast<std::size_t>(integer_flag("n", 1));
    long d = integer_flag("d", 0);
    TwistSections s = twist_sections(k, n, d);
    out["n"] = n;
    out["d"] = d;
    out["rank"] = s.rank();
    out["basis"] = poly_list(s.basis);
    out["cocycle"] = twist_cocycle(k, n, d).to_string();
  }

  // ---- finite sheaves

  static json space_json(const StructureSheaf& o) {
    json opens = json::array();
    for (OpenSet u : o.space.opens()) opens.push_back(o.space.describe(u));
    return json{{"ring", o.ring.name}, {"points", o.space.points()}, {"opens", opens}};
  }

  void cmd_sheaf_check(json& out) {
    auto o = space(argument(0, "space"));
    out["space"] = space_json(*o);
    out["presheaf_is_sheaf"] = o->presheaf->is_sheaf();
    out["sheaf_is_sheaf"] = o->sheaf->sheaf.is_sheaf();
    bool stalks = true;
    for (std::size_t x = 0; x < o->space.size(); ++x) stalks = stalks && o->sheaf->stalk_bijective(x);
    out["stalks_preserved"] = stalks;
    json rows = json::array();
    for (std::size_t f = 0; f < o->ring.size(); ++f) {
      LocalizationCertificate c = certify_basic_open(*o, f);
      rows.push_back(json{{"f", o->ring.labels[f]},
                          {"basic_open", o->space.describe(o->basic_open(f))},
                          {"sections", c.sections_size},
                          {"localization", c.localization_size},
                          {"certified", c.verify()}});
    }
    out["basic_opens"] = rows;
  }

  OpenSet open_of(const StructureSheaf& o, const Expr& e) const {
    std::vector<Expr> items = e.kind == Expr::Kind::Tuple ? e.args : std::vector<Expr>{e};
    OpenSet u = 0;
    for (auto& it : items) {
      const auto& pts = o.space.points();
      auto pos = std::find(pts.begin(), pts.end(), text(it));
      if (pos == pts.end()) fail(ErrorCode::InvalidArgument, "no point " + text(it));
      u |= OpenSet{1} << (pos - pts.begin());
    }
    return u;
  }

  void cmd_sheaf_twist(json& out) {
    auto o = space(argument(0, "space"));
    const Expr* cover = flag("cover");
    const Expr* cocycle = flag("cocycle");
    if (!cover || cover->kind != Expr::Kind::Tuple || cover->args.size() != 2)
      fail(ErrorCode::InvalidArgument, "--cover takes two opens, e.g. ((x_2, x_3), (x_3))");
    if (!cocycle) fail(ErrorCode::InvalidArgument, "missing --cocycle");
    OpenSet u0 = open_of(*o, cover->args[0]), u1 = open_of(*o, cover->args[1]);
    std::size_t a = o->ring.index_of(text(*cocycle));
    std::size_t u = o->global_to(u0 & u1, a);
    UnitCocycle c = two_cover_cocycle(*o, u0, u1, u);
    TwistedSheaf l = twist_by_cocycle(trivial_bundle(o, {u0, u1}), c);
    out["space"] = space_json(*o);
    out["cover"] = json::array({o->space.describe(u0), o->space.describe(u1)});
    out["f01"] = o->sections(u0 & u1).labels[u];
    out["is_cocycle"] = is_cocycle(*o, c);
    auto t = trivialization(*o, c);
    if (t) {
      out["trivialization"] = json::array({o->sections(u0).labels[(*t)[0]], o->sections(u1).labels[(*t)[1]]});
    } else {
      out["trivialization"] = nullptr;
    }
    out["locally_trivial"] = l.locally_trivial();
    out["round_trip"] = cohomologous(*o, cocycle_of(l), c);
  }

  RunOptions opts_;
  std::map<std::string, Value> env_;
  const Statement* st_ = nullptr;
  std::vector<Expr> args_;
};

void render_text(const json& v, const std::string& indent, std::string& out);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(const json& v, const std::string& indent, std::string& out) {
  for (auto& [key, val] : v.items()) {
    if (val.is_object()) {
      out += indent + key + ":\n";
      render_text(val, indent + "  ", out);
    } else if (val.is_array()) {
      bool flat = std::all_of(val.begin(), val.end(), [](const json& x) { return !x.is_structured(); });
      if (flat) {
        std::string line;
        for (std::size_t i = 0; i < val.size(); ++i) line += (i ? ", " : "") + scalar_text(val[i]);
        out += indent + key + ": " + (val.empty() ? "(none)" : line) + "\n";
      } else {
        out += indent + key + ":\n";
        for (auto& item : val) {
          if (item.is_object()) {
            std::string line;
            bool first = true;
            for (auto& [k2, v2] : item.items()) {
              line += (first ? "" : "; ") + k2 + "=" + (v2.is_structured() ? v2.dump() : scalar_text(v2));
              first = false;
            }
            out += indent + "  - " + line + "\n";
          } else {
            out += indent + "  - " + item.dump() + "\n";
          }
        }
      }
    } else {
      out += indent + key + ": " + scalar_text(val) + "\n";
    }
  }
}

}  // namespace

RunResult run_script(std::string_view source, const RunOptions& options) {
  RunResult res;
  dsl::Script script;
  try {
    script = dsl::parse(source);
  } catch (const dsl::ParseError& e) {
    res.exit_code = 2;
    if (options.json) {
      json err{{"schema", 1},
               {"error",
                {{"code", "SyntaxError"},
                 {"line", e.location().line},
                 {"column", e.location().column},
                 {"expected", e.expected()},
                 {"message", e.what()}}}};
      res.output = err.dump(2) + "\n";
    } else {
      res.output = std::string("SyntaxError: ") + e.what() + "\n";
    }
    return res;
  }
  Runner runner(options);
  json results = json::array();
  for (auto& st : script.statements) {
    json rec{{"statement", dsl::print(st)}, {"ok", true}};
    try {
      runner.run(st, rec);
    } catch (const Error& e) {
      rec["ok"] = false;
      rec["error"] = json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      res.exit_code = 1;
    }
    results.push_back(rec);
  }
  if (options.json) {
    res.output = json{{"schema", 1}, {"results", results}}.dump(2) + "\n";
    return res;
  }
  for (auto& rec : results) {
    res.output += "> " + rec["statement"].get<std::string>() + "\n";
    json body = rec;
    body.erase("statement");
    body.erase("ok");
    if (!rec["ok"].get<bool>()) {
      res.output += "  error " + rec["error"]["code"].get<std::string>() + ": " + rec["error"]["message"].get<std::string>() + "\n";
      continue;
    }
    render_text(body, "  ", res.output);
  }
  return res;
}

}  // namespace schemex
