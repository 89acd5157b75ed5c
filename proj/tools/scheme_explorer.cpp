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

// scheme-explorer: every subcommand is translated into one script statement
// and executed through the C API, so subcommands and scripts share a report
// format.

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scheme_explorer.h"

namespace {

struct Query {
  std::string words;
  std::vector<std::string> positionals;
  std::vector<std::pair<std::string, std::string>> flags;

  std::string statement() const {
    std::string s = words;
    for (auto& p : positionals) s += " " + p;
    for (auto& [k, v] : flags)
      if (!v.empty()) s += " --" + k + " " + v;
    return s + ";";
  }
};

// Point labels contain braces and spaces, so they travel as string literals.
std::string as_literal(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int run(const std::string& source, const std::string& format, long bound, unsigned long long seed) {
  scx_run_options o = scx_default_run_options();
  o.json = format == "json";
  o.bound = bound;
  o.seed = seed;
  char* out = nullptr;
  int code = 0;
  if (scx_run_script(source.c_str(), &o, &out, &code) != SCX_OK) {
    std::cerr << "scheme-explorer: " << scx_last_error() << "\n";
    return 1;
  }
  (code == 2 ? std::cerr : std::cout) << out;
  scx_string_free(out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commutative algebra and scheme-theory workbench"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format = "text";
  long bound = 10;
  unsigned long long seed = 1;
  std::string script;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", bound, "Residue characteristic bound for spectra");
  app.add_option("--seed", seed, "Seed of randomized checks");
  app.add_option("--script", script, "Run a script file ('-' for standard input)");

  Query q;
  // Slots of one subcommand, read in declaration order when it completes.
  struct Slots {
    std::vector<std::function<void(Query&)>> positionals;
    std::vector<std::pair<std::string, std::shared_ptr<std::string>>> flags;
  };
  std::map<CLI::App*, Slots> slots;
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = false) {
    auto slot = std::make_shared<std::string>();
    sub->add_option("--" + name, *slot, help)->required(required);
    slots[sub].flags.emplace_back(name, slot);
  };
  auto positional = [&](CLI::App* sub, const std::string& name, const std::string& help, bool many = false) {
    // a vector slot would take every remaining argument, so single
    // positionals bind to a string
    if (many) {
      auto slot = std::make_shared<std::vector<std::string>>();
      sub->add_option(name, *slot, help)->required();
      slots[sub].positionals.push_back([slot](Query& q) {
        for (auto& v : *slot) q.positionals.push_back(v);
      });
    } else {
      auto slot = std::make_shared<std::string>();
      sub->add_option(name, *slot, help)->required();
      slots[sub].positionals.push_back([slot](Query& q) { q.positionals.push_back(*slot); });
    }
  };
  auto chain = [&](CLI::App* sub, std::function<void()> extra) {
    sub->final_callback([&q, &slots, sub, extra] {
      for (auto& p : slots[sub].positionals) p(q);
      for (auto& [name, v] : slots[sub].flags)
        if (!v->empty()) q.flags.emplace_back(name, *v);
      extra();
    });
  };
  auto words = [&](const std::string& w) { return [&q, w] { q.words = w; }; };

  auto* describe = app.add_subcommand("describe", "Structure of a presented algebra");
  positional(describe, "ring", "e.g. \"GF(5)[X]/(X^2+3*X+2)\"");
  chain(describe, words("describe"));

  auto* specialize = app.add_subcommand("specialize", "Structure after changing the coefficient domain");
  positional(specialize, "ring", "Algebra over ZZ or QQ");
  positional(specialize, "domains", "Target domains", true);
  chain(specialize, words("specialize"));

  auto* krull = app.add_subcommand("krull", "Krull dimension");
  positional(krull, "ring", "Presented algebra");
  chain(krull, words("krull"));

  auto* tensor = app.add_subcommand("tensor", "Tensor product over the common base");
  positional(tensor, "left", "Left factor");
  positional(tensor, "right", "Right factor");
  chain(tensor, words("tensor"));

  auto* spec = app.add_subcommand("spec", "Prime spectra");
  spec->require_subcommand(1);
  auto* spec_describe = spec->add_subcommand("describe", "Catalogued points under the bound");
  positional(spec_describe, "ring", "Presented algebra");
  flag(spec_describe, "degree", "Closed points up to this degree");
  chain(spec_describe, words("spec describe"));
  auto* spec_closure = spec->add_subcommand("closure", "Closure of a point");
  positional(spec_closure, "ring", "Presented algebra");
  auto point = std::make_shared<std::string>();
  spec_closure->add_option("--point", *point, "Point label, e.g. \"y_{5,T + 2}\"")->required();
  chain(spec_closure, [&q, point] {
    q.words = "spec closure";
    q.flags.emplace_back("point", as_literal(*point));
  });
  auto* spec_zeros = spec->add_subcommand("zeros", "Catalogued points of V(f)");
  positional(spec_zeros, "ring", "Presented algebra");
  positional(spec_zeros, "element", "Element f");
  chain(spec_zeros, words("spec zeros"));

  auto* fiber = app.add_subcommand("fiber", "Fiber of Spec B -> Spec A over a point");
  flag(fiber, "map", "e.g. \"ZZ->ZZ[T]\"", true);
  auto at = std::make_shared<std::string>();
  fiber->add_option("--at", *at, "Base point: p=7, a prime, or a point label")->required();
  chain(fiber, [&q, at] {
    q.words = "fiber";
    std::string v = at->rfind("p=", 0) == 0 ? at->substr(2) : *at;
    bool digits = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
    q.flags.emplace_back("at", digits ? v : as_literal(v));
  });

  for (auto [name, help] : {std::pair<const char*, const char*>{"normalize", "Noether normalization with its trace"},
                            {"nullstellensatz", "Common zeros over the algebraic closure"},
                            {"maximal", "Maximality of an ideal"}}) {
    auto* sub = app.add_subcommand(name, help);
    flag(sub, "ring", "Polynomial ring, e.g. \"QQ[X,Y]\"", true);
    flag(sub, "ideal", "Generators, e.g. \"(X*Y-1)\"", true);
    chain(sub, words(name));
  }

  auto* proj = app.add_subcommand("proj", "Projective schemes");
  proj->require_subcommand(1);
  auto* charts = proj->add_subcommand("charts", "Affine charts D+(T_i)");
  flag(charts, "graded", "e.g. \"QQ[T0,T1,T2]/(T0*T2-T1^2)\"", true);
  chain(charts, words("proj charts"));
  auto* points = proj->add_subcommand("points", "Rational points over a finite field");
  flag(points, "space", "e.g. \"P^2(GF(5))\"", true);
  chain(points, words("proj points"));
  auto* segre = proj->add_subcommand("segre", "Segre image of a pair of points");
  flag(segre, "p", "Point of P^n, e.g. \"[1:2]\"", true);
  flag(segre, "q", "Point of P^m", true);
  flag(segre, "field", "Coordinate field (QQ)");
  chain(segre, words("proj segre"));
  for (auto [name, help] : {std::pair<const char*, const char*>{"conic", "Conic image of a point of P^1"},
                            {"veronese", "Veronese image of a point"}}) {
    auto* sub = proj->add_subcommand(name, help);
    flag(sub, "p", "Point", true);
    flag(sub, "field", "Coordinate field (QQ)");
    chain(sub, words(std::string("proj ") + name));
  }
  auto* kernel = proj->add_subcommand("kernel", "Image ideal by elimination");
  positional(kernel, "map", "segre, conic or veronese");
  flag(kernel, "n", "Dimension of the (first) source");
  flag(kernel, "m", "Dimension of the second Segre factor");
  flag(kernel, "field", "Base field (QQ)");
  chain(kernel, words("proj kernel"));
  auto* sections = proj->add_subcommand("sections", "Global sections of O(d) on P^n");
  flag(sections, "n", "Dimension", true);
  flag(sections, "d", "Twist", true);
  flag(sections, "field", "Base ring (QQ)");
  chain(sections, words("proj sections"));

  auto* sheaf = app.add_subcommand("sheaf", "Sheaves on finite spectra");
  sheaf->require_subcommand(1);
  auto* check = sheaf->add_subcommand("check", "Structure sheaf and its basic opens");
  flag(check, "space", "e.g. \"spec(ZZ/12)\"", true);
  chain(check, words("sheaf check"));
  auto* twist = sheaf->add_subcommand("twist", "Twist O by a unit cocycle on a two-element cover");
  flag(twist, "space", "e.g. \"spec(ZZ/36)\"", true);
  flag(twist, "cover", "Two opens, e.g. \"((x_2,x_3),(x_3))\"", true);
  flag(twist, "cocycle", "Element of A giving f_01 on the overlap", true);
  chain(twist, words("sheaf twist"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!script.empty()) {
    std::stringstream src;
    if (script == "-") {
      src << std::cin.rdbuf();
    } else {
      std::ifstream in(script);
      if (!in) {
        std::cerr << "scheme-explorer: cannot read " << script << "\n";
        return 2;
      }
      src << in.rdbuf();
    }
    return run(src.str(), format, bound, seed);
  }
  if (q.words.empty()) {
    std::cout << app.help();
    return 0;
  }
  return run(q.statement(), format, bound, seed);
}
