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

#include "schemex/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace schemex::dsl {

namespace {

const std::vector<std::string> kKinds = {"ring", "ideal", "poly", "point", "graded", "map", "space"};

enum class Tok { Number, Name, String, Flag, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Location loc;
  bool spaced = false;  // whitespace or a comment before the token
};

std::string join_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += i + 1 == expected.size() ? " or " : ", ";
    s += expected[i];
  }
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      std::size_t before = pos_;
      skip_space();
      bool spaced = pos_ != before;
      Location at = loc_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "end of input", at, spaced});
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string t;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t += advance();
        out.push_back({Tok::Number, t, at});
      } else if (is_name_start(c)) {
        out.push_back({Tok::Name, name(), at});
      } else if (c == '"') {
        advance();
        std::string t;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
          if (src_[pos_] == '\n') throw ParseError(at, {"closing '\"'"}, "end of line");
          t += advance();
        }
        if (pos_ >= src_.size()) throw ParseError(at, {"closing '\"'"}, "end of input");
        advance();
        out.push_back({Tok::String, t, at});
      } else if (c == '-' && peek(1) == '-' && is_name_start(peek(2))) {
        advance();
        advance();
        out.push_back({Tok::Flag, name(), at});
      } else if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::Punct, "->", at});
      } else if (std::string_view(";,()[]:=+-*/^").find(c) != std::string_view::npos) {
        out.push_back({Tok::Punct, std::string(1, advance()), at});
      } else {
        throw ParseError(at, {"a token"}, "'" + std::string(1, c) + "'");
      }
      out.back().spaced = spaced;
    }
  }

 private:
  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    return c;
  }

  std::string name() {
    std::string t;
    while (pos_ < src_.size() && is_name_char(src_[pos_])) t += advance();
    return t;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Location loc_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script s;
    while (cur().kind != Tok::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool is(std::string_view p) const { return cur().kind == Tok::Punct && cur().text == p; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::String: return "string \"" + t.text + "\"";
      case Tok::Flag: return "flag --" + t.text;
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void expected(std::vector<std::string> what) const {
    throw ParseError(cur().loc, std::move(what), describe(cur()));
  }

  void expect(std::string_view p) {
    if (!is(p)) expected({"'" + std::string(p) + "'"});
    ++pos_;
  }

  bool starts_expr() const {
    const Token& t = cur();
    if (t.kind == Tok::Number || t.kind == Tok::Name || t.kind == Tok::String) return true;
    return t.kind == Tok::Punct && (t.text == "(" || t.text == "[" || t.text == "-");
  }

  Statement statement() {
    Statement st;
    st.loc = cur().loc;
    if (cur().kind == Tok::Name && std::find(kKinds.begin(), kKinds.end(), cur().text) != kKinds.end()) {
      st.kind = Statement::Kind::Definition;
      st.keyword = cur().text;
      ++pos_;
      if (cur().kind != Tok::Name) expected({"a name"});
      st.name = cur().text;
      ++pos_;
      expect("=");
      st.value = expr();
      if (cur().kind == Tok::Name && cur().text == "in") {
        st.separator = "in";
      } else if (is(":")) {
        st.separator = ":";
      }
      if (!st.separator.empty()) {
        ++pos_;
        st.qualifier.push_back(expr());
        while (is(",")) {
          ++pos_;
          st.qualifier.push_back(expr());
        }
      }
      if (!is(";")) expected(st.separator.empty() ? std::vector<std::string>{"'in'", "':'", "';'"} : std::vector<std::string>{"','", "';'"});
      ++pos_;
      return st;
    }
    st.kind = Statement::Kind::Query;
    if (!starts_expr()) expected({"a statement"});
    while (starts_expr()) st.positionals.push_back(expr());
    while (cur().kind == Tok::Flag) {
      Flag f{cur().text, std::nullopt};
      ++pos_;
      if (starts_expr()) f.value = expr();
      st.flags.push_back(std::move(f));
    }
    if (!is(";")) expected({"an expression", "a flag", "';'"});
    ++pos_;
    return st;
  }

  Expr node(Expr::Kind k, std::string text, Location loc, std::vector<Expr> args = {}) {
    Expr e;
    e.kind = k;
    e.text = std::move(text);
    e.loc = loc;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = sum();
    if (is("->")) {
      Location at = cur().loc;
      ++pos_;
      lhs = node(Expr::Kind::Binary, "->", at, {lhs, sum()});
    }
    return lhs;
  }

  Expr sum() {
    Expr lhs = product();
    while (is("+") || is("-")) {
      Token op = cur();
      ++pos_;
      lhs = node(Expr::Kind::Binary, op.text, op.loc, {lhs, product()});
    }
    return lhs;
  }

  Expr product() {
    Expr lhs = unary();
    while (is("*") || is("/")) {
      Token op = cur();
      ++pos_;
      lhs = node(Expr::Kind::Binary, op.text, op.loc, {lhs, unary()});
    }
    return lhs;
  }

  Expr unary() {
    if (is("-")) {
      Location at = cur().loc;
      ++pos_;
      return node(Expr::Kind::Unary, "-", at, {unary()});
    }
    return power();
  }

  Expr power() {
    Expr base = postfix();
    if (is("^")) {
      Location at = cur().loc;
      ++pos_;
      return node(Expr::Kind::Binary, "^", at, {base, unary()});
    }
    return base;
  }

  // Calls and indices attach only without intervening space, so that
  // "nullstellensatz (X, Y)" passes a tuple to the command.
  Expr postfix() {
    Expr e = primary();
    for (;;) {
      if (cur().spaced) return e;
      if (is("(")) {
        Location at = cur().loc;
        ++pos_;
        std::vector<Expr> args{e};
        list(")", args);
        e = node(Expr::Kind::Call, "", at, std::move(args));
      } else if (is("[")) {
        Location at = cur().loc;
        ++pos_;
        std::vector<Expr> args{e};
        list("]", args);
        e = node(Expr::Kind::Index, "", at, std::move(args));
      } else {
        return e;
      }
    }
  }

  // Comma-separated expressions up to the closing token, which is consumed.
  void list(std::string_view close, std::vector<Expr>& out) {
    if (is(close)) {
      ++pos_;
      return;
    }
    out.push_back(expr());
    while (is(",")) {
      ++pos_;
      out.push_back(expr());
    }
    if (!is(close)) expected({"','", "'" + std::string(close) + "'"});
    ++pos_;
  }

  Expr primary() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::Number: ++pos_; return node(Expr::Kind::Number, t.text, t.loc);
      case Tok::Name: ++pos_; return node(Expr::Kind::Name, t.text, t.loc);
      case Tok::String: ++pos_; return node(Expr::Kind::String, t.text, t.loc);
      default: break;
    }
    if (is("(")) {
      ++pos_;
      std::vector<Expr> items;
      list(")", items);
      return node(Expr::Kind::Tuple, "", t.loc, std::move(items));
    }
    if (is("[")) {
      ++pos_;
      std::vector<Expr> coords{expr()};
      while (is(":")) {
        ++pos_;
        coords.push_back(expr());
      }
      if (coords.size() < 2) expected({"':'"});
      expect("]");
      return node(Expr::Kind::Point, "", t.loc, std::move(coords));
    }
    expected({"a number", "a name", "a string", "'('", "'['"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      if (e.text == "->") return 0;
      if (e.text == "+" || e.text == "-") return 1;
      if (e.text == "*" || e.text == "/") return 2;
      return 4;
    case Expr::Kind::Unary: return 3;
    default: return 5;
  }
}

std::string print_list(const std::vector<Expr>& items, std::size_t from, std::string_view sep) {
  std::string s;
  for (std::size_t i = from; i < items.size(); ++i) s += (i > from ? std::string(sep) : "") + print(items[i]);
  return s;
}

// Operands are parenthesized only when the tree could not have come from the
// parser otherwise; parsed parentheses are Tuple nodes and print themselves.
std::string operand(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ParseError::ParseError(Location loc, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) +
                                        ": expected " + join_expected(expected) + ", found " + found),
      loc_(loc),
      expected_(std::move(expected)) {}

Script parse(std::string_view source) { return Parser(Lexer(source).run()).script(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Name: return e.text;
    case Expr::Kind::String: {
      std::string s = "\"";
      for (char c : e.text) {
        if (c == '"' || c == '\\') s += '\\';
        s += c;
      }
      return s + "\"";
    }
    case Expr::Kind::Unary: {
      std::string arg = operand(e.args[0], 3);
      return arg.front() == '-' ? "- " + arg : "-" + arg;  // "--" would lex as a flag
    }
    case Expr::Kind::Binary: {
      int p = precedence(e);
      if (e.text == "^") return operand(e.args[0], 5) + "^" + operand(e.args[1], 3);
      std::string lhs = operand(e.args[0], p);
      std::string rhs = operand(e.args[1], p + 1);
      if (e.text == "*" || e.text == "/") return lhs + e.text + rhs;
      return lhs + " " + e.text + " " + rhs;
    }
    case Expr::Kind::Call: return operand(e.args[0], 5) + "(" + print_list(e.args, 1, ", ") + ")";
    case Expr::Kind::Index: return operand(e.args[0], 5) + "[" + print_list(e.args, 1, ",") + "]";
    case Expr::Kind::Tuple: return "(" + print_list(e.args, 0, ", ") + ")";
    case Expr::Kind::Point: return "[" + print_list(e.args, 0, ":") + "]";
  }
  return "";
}

std::string print(const Statement& s) {
  std::string out;
  if (s.kind == Statement::Kind::Definition) {
    out = s.keyword + " " + s.name + " = " + print(*s.value);
    if (!s.separator.empty()) out += (s.separator == "in" ? " in " : " : ") + print_list(s.qualifier, 0, ", ");
    return out + ";";
  }
  for (std::size_t i = 0; i < s.positionals.size(); ++i) {
    if (i) out += " ";
    // a leading minus would otherwise fuse with the previous argument
    const Expr& e = s.positionals[i];
    bool wrap = i > 0 && (e.kind == Expr::Kind::Unary || (e.kind == Expr::Kind::Binary && print(e).front() == '-'));
    out += wrap ? "(" + print(e) + ")" : print(e);
  }
  for (auto& f : s.flags) {
    if (!out.empty()) out += " ";
    out += "--" + f.name;
    if (f.value) out += " " + print(*f.value);
  }
  return out + ";";
}

std::string print(const Script& s) {
  std::string out;
  for (auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace schemex::dsl
