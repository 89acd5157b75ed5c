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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "schemex/dsl.hpp"
#include "schemex/runner.hpp"

using namespace schemex;
using namespace schemex::dsl;

namespace {

const std::vector<std::string> corpus = {
    "ring A = ZZ[T]; spec describe A --bound 5;",
    "ideal I = (6*X^2+18*X-3) in ZZ[X];",
    "ring A = ZZ[X]/(6*X^2+18*X-3); specialize A QQ GF(2) GF(3) GF(5) GF(11);",
    "poly f = QQ[X,Y] : X^2*Y - 3;",
    "poly g = -(X+1)^2*Y/2 in QQ[X,Y];",
    "point p = [1:2:-3] in GF(5);",
    "graded C = QQ[T0,T1,T2]/(T0*T2-T1^2); proj charts --graded C;",
    "map phi = ZZ -> ZZ[T]; fiber --map phi --at 7;",
    "fiber --map ZZ->ZZ[T] --at \"y_{5,T + 2}\";",
    "nullstellensatz (X^2+1, X+2) --ring QQ[X];",
    "proj segre --p [1:2] --q [3:5];",
    "space S = spec(product(ZZ/7, ZZ/5)); sheaf check --space S;",
    "sheaf twist --space spec(ZZ/36) --cover ((x_2,x_3),(x_3)) --cocycle -1;",
    "nullstellensatz random --count 5 --seed 3 --field GF(7);",
    "# a comment\n\nkrull QQ[X1,X2,X3,X4];  # trailing\n",
    "",
};

Expr random_expr(std::mt19937_64& g, int depth) {
  auto leaf = [&]() -> Expr {
    static const char* names[] = {"X", "Y", "T0", "ZZ", "QQ"};
    if (g() % 2) return Expr{Expr::Kind::Number, std::to_string(g() % 20), {}, {}};
    return Expr{Expr::Kind::Name, names[g() % 5], {}, {}};
  };
  if (depth == 0) return leaf();
  switch (g() % 7) {
    case 0:
      return Expr{Expr::Kind::Unary, "-", {random_expr(g, depth - 1)}, {}};
    case 1: {
      static const char* ops[] = {"+", "-", "*", "/", "^"};
      return Expr{Expr::Kind::Binary, ops[g() % 5], {random_expr(g, depth - 1), random_expr(g, depth - 1)}, {}};
    }
    case 2:
      return Expr{Expr::Kind::Call, "", {Expr{Expr::Kind::Name, "f", {}, {}}, random_expr(g, depth - 1)}, {}};
    case 3:
      return Expr{Expr::Kind::Index, "", {Expr{Expr::Kind::Name, "QQ", {}, {}}, leaf(), leaf()}, {}};
    case 4:
      return Expr{Expr::Kind::Tuple, "", {random_expr(g, depth - 1), random_expr(g, depth - 1)}, {}};
    case 5:
      return Expr{Expr::Kind::Point, "", {random_expr(g, depth - 1), leaf()}, {}};
    default:
      return leaf();
  }
}

nlohmann::json run_json(const std::string& src, int* exit_code = nullptr) {
  RunOptions o;
  o.json = true;
  RunResult r = run_script(src, o);
  if (exit_code) *exit_code = r.exit_code;
  return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("parse: statements, definitions and flags") {
  Script s = parse("ring A = ZZ[T]; spec describe A --bound 5;");
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0].kind == Statement::Kind::Definition);
  CHECK(s.statements[0].keyword == "ring");
  CHECK(s.statements[0].name == "A");
  CHECK(s.statements[1].kind == Statement::Kind::Query);
  CHECK(s.statements[1].positionals.size() == 3);
  REQUIRE(s.statements[1].flags.size() == 1);
  CHECK(s.statements[1].flags[0].name == "bound");
  CHECK(print(*s.statements[1].flags[0].value) == "5");

  Script d = parse("ideal I = (6*X^2+18*X-3) in ZZ[X];");
  REQUIRE(d.statements.size() == 1);
  CHECK(d.statements[0].keyword == "ideal");
  CHECK(d.statements[0].separator == "in");
  REQUIRE(d.statements[0].qualifier.size() == 1);
  CHECK(print(d.statements[0].qualifier[0]) == "ZZ[X]");
  CHECK(print(*d.statements[0].value) == "(6*X^2 + 18*X - 3)");
}

TEST_CASE("parse: errors carry positions") {
  try {
    parse("ring = ;");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.location().line == 1);
    CHECK(e.location().column == 6);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse("krull QQ[X];\nring B = (X + ;");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.location().line == 2);
    CHECK(e.location().column == 15);
  }
  CHECK_THROWS_AS(parse("krull QQ[X]"), ParseError);
  CHECK_THROWS_AS(parse("krull \"open"), ParseError);
  Expr x{Expr::Kind::Name, "X", {}, {}};
  Expr twice{Expr::Kind::Unary, "-", {Expr{Expr::Kind::Unary, "-", {x}, {}}}, {}};
  CHECK(print(twice) == "- -X");
  CHECK(*parse("poly f = - -X;").statements[0].value == twice);
}

TEST_CASE("parse: a spaced bracket starts a new operand") {
  Script s = parse("nullstellensatz (X^2+1, X+2) --ring QQ[X];");
  REQUIRE(s.statements[0].positionals.size() == 2);
  CHECK(s.statements[0].positionals[1].kind == Expr::Kind::Tuple);
  Script t = parse("nullstellensatz(X^2+1, X+2);");
  REQUIRE(t.statements[0].positionals.size() == 1);
  CHECK(t.statements[0].positionals[0].kind == Expr::Kind::Call);
}

TEST_CASE("print: parse round trip on the corpus") {
  for (const auto& src : corpus) {
    CAPTURE(src);
    Script s = parse(src);
    CHECK(parse(print(s)) == s);
    CHECK(print(parse(print(s))) == print(s));
  }
}

TEST_CASE("print: parse round trip on random expressions") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 500; ++i) {
    Expr e = random_expr(g, 4);
    std::string text = print(e);
    CAPTURE(text);
    // Printed parentheses come back as Tuple nodes, so the parsed tree is the
    // fixed point, not e itself.
    Script s = parse("poly f = " + text + ";");
    REQUIRE(s.statements.size() == 1);
    Expr parsed = *s.statements[0].value;
    CHECK(print(parsed) == text);
    CHECK(*parse("poly f = " + print(parsed) + ";").statements[0].value == parsed);
  }
}

TEST_CASE("run: reports and exit codes") {
  int code = -1;
  nlohmann::json empty = run_json("", &code);
  CHECK(code == 0);
  CHECK(empty["schema"] == 1);
  CHECK(empty["results"].empty());

  nlohmann::json two = run_json("ring A = ZZ[T]; spec describe A --bound 5;", &code);
  CHECK(code == 0);
  CHECK(two["results"].size() == 2);

  nlohmann::json segre = run_json("proj segre --p [1:2] --q [3:5];", &code);
  CHECK(code == 0);
  CHECK(segre["results"][0]["image"] == "[3:5:6:10]");
  CHECK(segre["results"][0]["quadrics_vanish"] == true);

  nlohmann::json bad = run_json("ring = ;", &code);
  CHECK(code == 2);
  CHECK(bad["error"]["code"] == "SyntaxError");
  CHECK(bad["error"]["column"] == 6);

  // The failing query is reported and later statements still run.
  nlohmann::json failed = run_json("proj points --space P^2(QQ); krull QQ[X];", &code);
  CHECK(code == 1);
  REQUIRE(failed["results"].size() == 2);
  CHECK(failed["results"][0]["ok"] == false);
  CHECK(failed["results"][1]["ok"] == true);

  RunOptions text;
  RunResult r = run_script("krull QQ[X,Y];", text);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("> krull QQ[X,Y];") == 0);
}

TEST_CASE("run: specialization table") {
  nlohmann::json t = run_json("ring A = ZZ[X]/(6*X^2+18*X-3); specialize A QQ GF(2) GF(3) GF(5) GF(11);");
  REQUIRE(t["results"].size() == 2);
  CHECK(t["results"][1]["ok"] == true);
  CHECK(t["results"][1].dump().find("GF(11)") != std::string::npos);
}

TEST_CASE("run: output is deterministic") {
  const std::string src = corpus[2] + corpus[6] + corpus[11];
  RunOptions o;
  o.json = true;
  CHECK(run_script(src, o).output == run_script(src, o).output);
}
