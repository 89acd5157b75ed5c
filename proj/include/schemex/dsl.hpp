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

// The script language of the command-line tool.
//
//   script     := statement*
//   statement  := definition | query
//   definition := KIND NAME '=' expr [('in' | ':') expr {',' expr}] ';'
//   query      := expr* flag* ';'
//   flag       := '--' NAME [expr]
//   expr       := sum ['->' sum]
//   sum        := product {('+' | '-') product}
//   product    := unary {('*' | '/') unary}
//   unary      := '-' unary | power
//   power      := postfix ['^' unary]
//   postfix    := primary {'(' list ')' | '[' list ']'}
//   primary    := NUMBER | NAME | STRING | '(' list ')' | '[' expr {':' expr} ']'
//
// KIND is one of ring, ideal, poly, point, graded, map, space.  Comments run
// from '#' to the end of the line.  A call or index bracket must follow its
// operand without whitespace.  Expressions are kept as syntax; the runner
// prints them back and hands the text to the module parsers.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemex/error.hpp"

namespace schemex::dsl {

struct Location {
  int line = 1;
  int column = 1;
};

struct Expr {
  enum class Kind { Number, Name, String, Unary, Binary, Call, Index, Tuple, Point };

  Kind kind = Kind::Name;
  std::string text;         // literal, name, or operator
  std::vector<Expr> args;   // operands; callee or base first for Call and Index
  Location loc;

  /// Structural equality, locations ignored.
  bool operator==(const Expr& o) const { return kind == o.kind && text == o.text && args == o.args; }
};

struct Flag {
  std::string name;
  std::optional<Expr> value;

  bool operator==(const Flag& o) const { return name == o.name && value == o.value; }
};

struct Statement {
  enum class Kind { Definition, Query };

  Kind kind = Kind::Query;
  Location loc;
  // definitions
  std::string keyword;
  std::string name;
  std::optional<Expr> value;
  std::string separator;      // "in", ":" or empty
  std::vector<Expr> qualifier;
  // queries
  std::vector<Expr> positionals;
  std::vector<Flag> flags;

  bool operator==(const Statement& o) const {
    return kind == o.kind && keyword == o.keyword && name == o.name && value == o.value &&
           separator == o.separator && qualifier == o.qualifier && positionals == o.positionals && flags == o.flags;
  }
};

struct Script {
  std::vector<Statement> statements;

  bool operator==(const Script& o) const { return statements == o.statements; }
};

/// Raised by parse with the position of the offending token and the tokens
/// that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(Location loc, std::vector<std::string> expected, const std::string& found);

  Location location() const { return loc_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Location loc_;
  std::vector<std::string> expected_;
};

Script parse(std::string_view source);

std::string print(const Expr& e);
std::string print(const Statement& s);
/// One statement per line.
std::string print(const Script& s);

}  // namespace schemex::dsl
