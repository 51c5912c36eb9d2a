// Copyright 2026 The kchlint Authors
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
#include <array>

#include "core/ast.h"
#include "core/token.h"

namespace kchlint {

namespace {

constexpr std::array<std::string_view, 13> kAugOps = {
    "+=", "-=", "*=", "/=", "//=", "%=", "**=", "@=",
    "&=", "|=", "^=", ">>=", "<<="};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kNewline: return "newline";
    case TokenKind::kIndent: return "indent";
    case TokenKind::kDedent: return "dedent";
    case TokenKind::kEof: return "end of input";
    default: return "'" + t.lexeme + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view source)
      : source_(source), tokens_(tokenize(source)) {}

  Module run() {
    Module module;
    module.span = Span{1, 0, 0, source_.size()};
    while (true) {
      if (peek().kind == TokenKind::kNewline) {
        advance();
        continue;
      }
      if (peek().kind == TokenKind::kEof) break;
      parse_statement(module.body);
    }
    module.trailing_comments = take_pending();
    return module;
  }

 private:
  // Comment tokens are moved into pending_ as the cursor passes them.
  const Token& peek() {
    while (tokens_[pos_].kind == TokenKind::kComment) {
      const Token& c = tokens_[pos_++];
      pending_.push_back(Comment{c.lexeme, c.span.line, false});
    }
    return tokens_[pos_];
  }

  const Token& peek_after() {
    peek();
    std::size_t i = pos_ + 1;
    while (i < tokens_.size() && tokens_[i].kind == TokenKind::kComment) ++i;
    return tokens_[std::min(i, tokens_.size() - 1)];
  }

  const Token& advance() {
    const Token& t = peek();
    last_ = &t;
    if (t.kind != TokenKind::kEof) ++pos_;
    return t;
  }

  std::vector<Comment> take_pending() {
    std::vector<Comment> out = std::move(pending_);
    pending_.clear();
    return out;
  }

  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    throw SyntaxError(t.span, expected, describe(t));
  }

  bool accept_op(std::string_view op) {
    if (peek().is_operator(op)) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_kw(std::string_view kw) {
    if (peek().is_keyword(kw)) {
      advance();
      return true;
    }
    return false;
  }

  const Token& expect_op(std::string_view op) {
    if (!peek().is_operator(op)) fail("'" + std::string(op) + "'");
    return advance();
  }

  const Token& expect_kw(std::string_view kw) {
    if (!peek().is_keyword(kw)) fail("'" + std::string(kw) + "'");
    return advance();
  }

  const Token& expect_name() {
    if (peek().kind != TokenKind::kName) fail("identifier");
    return advance();
  }

  Span span_from(const Span& start) const {
    Span s = start;
    s.end = std::max(start.end, last_ != nullptr ? last_->span.end : start.end);
    return s;
  }

  Expr make_expr(Expr::Node node, const Span& start) {
    Expr e;
    e.node = std::move(node);
    e.span = span_from(start);
    e.id = ++next_id_;
    return e;
  }

  // ---- statements -------------------------------------------------------

  void parse_statement(std::vector<Stmt>& out) {
    std::vector<Comment> leading = take_pending();
    const Token& first = peek();
    if (first.kind == TokenKind::kIndent) fail("statement");
    if (first.is_keyword("def") || first.is_keyword("for") ||
        first.is_keyword("if") || first.is_keyword("with")) {
      Stmt stmt = parse_compound();
      stmt.comments.insert(stmt.comments.begin(), leading.begin(),
                           leading.end());
      out.push_back(std::move(stmt));
      return;
    }
    parse_simple_line(out, std::move(leading));
  }

  // One or more ';'-separated simple statements terminated by a newline.
  void parse_simple_line(std::vector<Stmt>& out, std::vector<Comment> leading) {
    while (true) {
      Stmt stmt = parse_simple();
      stmt.comments = std::move(leading);
      leading.clear();
      bool more = accept_op(";") && peek().kind != TokenKind::kNewline &&
                  peek().kind != TokenKind::kEof;
      if (!more) {
        attach_statement_comments(stmt);
        if (peek().kind != TokenKind::kEof) {
          if (peek().kind != TokenKind::kNewline) fail("newline");
          advance();
        }
        out.push_back(std::move(stmt));
        return;
      }
      attach_statement_comments(stmt);
      out.push_back(std::move(stmt));
    }
  }

  // Comments collected while parsing `stmt`: the one on its last line is
  // trailing, any others (inside brackets) become leading.
  void attach_statement_comments(Stmt& stmt) {
    peek();
    int last_line = last_ != nullptr ? last_->span.line : stmt.span.line;
    for (Comment& c : take_pending()) {
      c.trailing = c.attached_line == last_line;
      if (c.trailing) {
        stmt.comments.push_back(std::move(c));
      } else {
        auto it = std::find_if(stmt.comments.begin(), stmt.comments.end(),
                               [](const Comment& x) { return x.trailing; });
        stmt.comments.insert(it, std::move(c));
      }
    }
  }

  Stmt parse_compound() {
    const Token& kw = peek();
    Span start = kw.span;
    Stmt stmt;
    stmt.id = ++next_id_;
    if (kw.is_keyword("def")) {
      advance();
      FunctionDef def;
      const Token& name = expect_name();
      def.name = name.lexeme;
      def.name_span = name.span;
      expect_op("(");
      while (!peek().is_operator(")")) {
        const Token& pname = expect_name();
        Param p;
        p.name = pname.lexeme;
        p.span = pname.span;
        if (accept_op("=")) p.default_value = parse_test();
        def.params.push_back(std::move(p));
        if (!accept_op(",")) break;
      }
      expect_op(")");
      def.body = parse_block(stmt);
      stmt.node = std::move(def);
    } else if (kw.is_keyword("for")) {
      advance();
      For loop{parse_target_list(), Expr{}, {}};
      expect_kw("in");
      loop.iter = parse_testlist();
      loop.body = parse_block(stmt);
      stmt.node = std::move(loop);
    } else if (kw.is_keyword("if")) {
      advance();
      stmt.node = parse_if_rest(stmt);
    } else {
      advance();
      With with;
      do {
        WithItem item{parse_test(), {}};
        if (accept_kw("as")) item.target = checked_target(parse_bitor());
        with.items.push_back(std::move(item));
      } while (accept_op(","));
      with.body = parse_block(stmt);
      stmt.node = std::move(with);
    }
    stmt.span = span_from(start);
    return stmt;
  }

  If parse_if_rest(Stmt& header) {
    If node{parse_test(), {}, {}};
    node.body = parse_block(header);
    const Token& next = peek();
    if (next.is_keyword("elif")) {
      Span start = next.span;
      advance();
      Stmt inner;
      inner.id = ++next_id_;
      inner.node = parse_if_rest(inner);
      inner.span = span_from(start);
      node.orelse.push_back(std::move(inner));
    } else if (next.is_keyword("else")) {
      advance();
      node.orelse = parse_block(header);
    }
    return node;
  }

  // ':' followed by an indented block or simple statements on the same line.
  // A comment after the ':' becomes a trailing comment of `header` unless it
  // already has one; leftovers lead the first statement of the block.
  std::vector<Stmt> parse_block(Stmt& header) {
    expect_op(":");
    std::vector<Stmt> body;
    if (peek().kind != TokenKind::kNewline) {
      parse_simple_line(body, {});
      return body;
    }
    int colon_line = last_->span.line;
    std::vector<Comment> rest;
    for (Comment& c : take_pending()) {
      bool has_trailing =
          std::any_of(header.comments.begin(), header.comments.end(),
                      [](const Comment& x) { return x.trailing; });
      if (c.attached_line == colon_line && !has_trailing) {
        c.trailing = true;
        header.comments.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    pending_ = std::move(rest);
    advance();
    if (peek().kind != TokenKind::kIndent) fail("indented block");
    advance();
    while (peek().kind != TokenKind::kDedent &&
           peek().kind != TokenKind::kEof) {
      parse_statement(body);
    }
    if (peek().kind == TokenKind::kDedent) advance();
    return body;
  }

  Stmt parse_simple() {
    const Token& first = peek();
    Span start = first.span;
    Stmt stmt;
    stmt.id = ++next_id_;
    if (first.is_keyword("import")) {
      advance();
      Import imp;
      do {
        imp.names.push_back(parse_import_name(true));
      } while (accept_op(","));
      stmt.node = std::move(imp);
    } else if (first.is_keyword("from")) {
      advance();
      if (peek().is_operator(".") || peek().is_operator("...")) {
        fail("absolute module path");
      }
      ImportFrom imp;
      imp.module = parse_dotted_name();
      expect_kw("import");
      bool paren = accept_op("(");
      do {
        if (paren && peek().is_operator(")")) break;
        imp.names.push_back(parse_import_name(false));
      } while (accept_op(","));
      if (paren) expect_op(")");
      stmt.node = std::move(imp);
    } else if (first.is_keyword("return")) {
      advance();
      Return ret;
      if (peek().kind != TokenKind::kNewline && !peek().is_operator(";") &&
          peek().kind != TokenKind::kEof) {
        ret.value = parse_testlist();
      }
      stmt.node = std::move(ret);
    } else if (first.is_keyword("pass")) {
      advance();
      stmt.node = Pass{};
    } else if (first.is_keyword("break")) {
      advance();
      stmt.node = Break{};
    } else if (first.is_keyword("continue")) {
      advance();
      stmt.node = Continue{};
    } else if (first.kind == TokenKind::kKeyword && !first.is_keyword("not") &&
               !first.is_keyword("True") && !first.is_keyword("False") &&
               !first.is_keyword("None")) {
      fail("supported statement");
    } else {
      stmt.node = parse_expression_statement();
    }
    stmt.span = span_from(start);
    return stmt;
  }

  ImportName parse_import_name(bool dotted) {
    ImportName name;
    name.span = peek().span;
    name.path = dotted ? parse_dotted_name() : expect_name().lexeme;
    if (accept_kw("as")) name.alias = expect_name().lexeme;
    name.span = span_from(name.span);
    return name;
  }

  std::string parse_dotted_name() {
    std::string path = expect_name().lexeme;
    while (accept_op(".")) path += "." + expect_name().lexeme;
    return path;
  }

  Stmt::Node parse_expression_statement() {
    Expr first = parse_testlist();
    for (std::string_view op : kAugOps) {
      if (peek().is_operator(op)) {
        advance();
        check_target(first);
        if (first.as<TupleLit>() != nullptr || first.as<ListLit>() != nullptr) {
          throw SyntaxError(first.span, "augmented assignment target",
                            "sequence");
        }
        return AugAssign{std::move(first), std::string(op), parse_testlist()};
      }
    }
    if (!peek().is_operator("=")) return ExprStmt{std::move(first)};
    Assign assign;
    assign.targets.push_back(checked_target(std::move(first)));
    while (accept_op("=")) {
      assign.targets.push_back(parse_testlist());
    }
    assign.value = std::move(assign.targets.back());
    assign.targets.pop_back();
    for (const Expr& t : assign.targets) check_target(t);
    return assign;
  }

  const Expr& check_target(const Expr& e) {
    if (e.as<Name>() != nullptr || e.as<Attribute>() != nullptr ||
        e.as<Subscript>() != nullptr) {
      if (const auto* name = e.as<Name>();
          name != nullptr && is_python_keyword(name->id)) {
        throw SyntaxError(e.span, "assignable target", "'" + name->id + "'");
      }
      return e;
    }
    const std::vector<Expr>* items = nullptr;
    if (const auto* t = e.as<TupleLit>()) items = &t->items;
    if (const auto* l = e.as<ListLit>()) items = &l->items;
    if (items == nullptr) {
      throw SyntaxError(e.span, "assignable target", "expression");
    }
    for (const Expr& item : *items) check_target(item);
    return e;
  }

  Expr checked_target(Expr e) {
    check_target(e);
    return e;
  }

  // ---- expressions ------------------------------------------------------

  bool at_expression_end() {
    const Token& t = peek();
    if (t.kind == TokenKind::kNewline || t.kind == TokenKind::kEof) return true;
    if (t.kind != TokenKind::kOperator) return t.is_keyword("in");
    return t.lexeme == ")" || t.lexeme == "]" || t.lexeme == "}" ||
           t.lexeme == "=" || t.lexeme == ":" || t.lexeme == ";" ||
           std::find(kAugOps.begin(), kAugOps.end(), t.lexeme) != kAugOps.end();
  }

  // Comma-separated expressions; more than one (or a trailing comma) makes
  // an unparenthesized tuple.
  Expr parse_testlist() { return parse_sequence([this] { return parse_test(); }); }

  Expr parse_target_list() {
    return checked_target(parse_sequence([this] { return parse_bitor(); }));
  }

  template <typename ParseItem>
  Expr parse_sequence(ParseItem parse_item) {
    Span start = peek().span;
    Expr first = parse_item();
    if (!peek().is_operator(",")) return first;
    TupleLit tuple;
    tuple.parenthesized = false;
    tuple.items.push_back(std::move(first));
    while (accept_op(",")) {
      if (at_expression_end()) break;
      tuple.items.push_back(parse_item());
    }
    return make_expr(std::move(tuple), start);
  }

  Expr parse_test() { return parse_or(); }

  Expr binary(Expr left, std::string op, Expr right, const Span& start) {
    return make_expr(BinOp{std::move(left), std::move(op), std::move(right)},
                     start);
  }

  Expr parse_or() {
    Span start = peek().span;
    Expr left = parse_and();
    while (accept_kw("or")) left = binary(std::move(left), "or", parse_and(), start);
    return left;
  }

  Expr parse_and() {
    Span start = peek().span;
    Expr left = parse_not();
    while (accept_kw("and")) left = binary(std::move(left), "and", parse_not(), start);
    return left;
  }

  Expr parse_not() {
    Span start = peek().span;
    if (accept_kw("not")) return make_expr(UnaryOp{"not", parse_not()}, start);
    return parse_comparison();
  }

  Expr parse_comparison() {
    Span start = peek().span;
    Expr left = parse_bitor();
    while (true) {
      const Token& t = peek();
      std::string op;
      if (t.kind == TokenKind::kOperator &&
          (t.lexeme == "<" || t.lexeme == ">" || t.lexeme == "==" ||
           t.lexeme == ">=" || t.lexeme == "<=" || t.lexeme == "!=")) {
        op = t.lexeme;
        advance();
      } else if (t.is_keyword("in")) {
        advance();
        op = "in";
      } else if (t.is_keyword("not") && peek_after().is_keyword("in")) {
        advance();
        advance();
        op = "not in";
      } else if (t.is_keyword("is")) {
        advance();
        op = accept_kw("not") ? "is not" : "is";
      } else {
        return left;
      }
      left = binary(std::move(left), op, parse_bitor(), start);
    }
  }

  template <typename Next>
  Expr left_assoc(std::initializer_list<std::string_view> ops, Next next) {
    Span start = peek().span;
    Expr left = next();
    while (true) {
      const Token& t = peek();
      if (t.kind != TokenKind::kOperator ||
          std::find(ops.begin(), ops.end(), t.lexeme) == ops.end()) {
        return left;
      }
      std::string op = advance().lexeme;
      left = binary(std::move(left), op, next(), start);
    }
  }

  Expr parse_bitor() { return left_assoc({"|"}, [this] { return parse_xor(); }); }
  Expr parse_xor() { return left_assoc({"^"}, [this] { return parse_bitand(); }); }
  Expr parse_bitand() { return left_assoc({"&"}, [this] { return parse_shift(); }); }
  Expr parse_shift() {
    return left_assoc({"<<", ">>"}, [this] { return parse_arith(); });
  }
  Expr parse_arith() {
    return left_assoc({"+", "-"}, [this] { return parse_term(); });
  }
  Expr parse_term() {
    return left_assoc({"*", "/", "//", "%", "@"},
                      [this] { return parse_factor(); });
  }

  Expr parse_factor() {
    Span start = peek().span;
    const Token& t = peek();
    if (t.is_operator("-") || t.is_operator("+") || t.is_operator("~")) {
      std::string op = advance().lexeme;
      return make_expr(UnaryOp{op, parse_factor()}, start);
    }
    return parse_power();
  }

  Expr parse_power() {
    Span start = peek().span;
    Expr base = parse_atom_expr();
    if (accept_op("**")) return binary(std::move(base), "**", parse_factor(), start);
    return base;
  }

  Expr parse_atom_expr() {
    Span start = peek().span;
    Expr expr = parse_atom();
    while (true) {
      if (accept_op("(")) {
        expr = parse_call_rest(std::move(expr), start);
      } else if (accept_op("[")) {
        Expr index = parse_subscript_list();
        expect_op("]");
        expr = make_expr(Subscript{std::move(expr), std::move(index)}, start);
      } else if (accept_op(".")) {
        const Token& name = expect_name();
        Attribute attr{std::move(expr), name.lexeme, name.span};
        expr = make_expr(std::move(attr), start);
      } else {
        return expr;
      }
    }
  }

  Expr parse_call_rest(Expr func, const Span& start) {
    Call call;
    call.func = std::move(func);
    while (!peek().is_operator(")")) {
      if (peek().is_operator("*") || peek().is_operator("**")) {
        fail("argument");
      }
      if (peek().kind == TokenKind::kName && peek_after().is_operator("=")) {
        KeywordArg kw;
        kw.name = advance().lexeme;
        advance();
        kw.value = parse_test();
        call.keywords.push_back(std::move(kw));
      } else {
        if (!call.keywords.empty()) {
          fail("keyword argument");
        }
        call.args.push_back(parse_test());
      }
      if (!accept_op(",")) break;
    }
    expect_op(")");
    return make_expr(std::move(call), start);
  }

  Expr parse_subscript_list() {
    Span start = peek().span;
    Expr first = parse_slice_item();
    if (!peek().is_operator(",")) return first;
    TupleLit tuple;
    tuple.parenthesized = false;
    tuple.items.push_back(std::move(first));
    while (accept_op(",")) {
      if (peek().is_operator("]")) break;
      tuple.items.push_back(parse_slice_item());
    }
    return make_expr(std::move(tuple), start);
  }

  bool at_slice_bound_end() {
    const Token& t = peek();
    return t.is_operator(":") || t.is_operator("]") || t.is_operator(",");
  }

  Expr parse_slice_item() {
    Span start = peek().span;
    Box<Expr> lower;
    if (!peek().is_operator(":")) {
      Expr e = parse_test();
      if (!peek().is_operator(":")) return e;
      lower = std::move(e);
    }
    expect_op(":");
    Slice slice;
    slice.lower = std::move(lower);
    if (!at_slice_bound_end()) slice.upper = parse_test();
    if (accept_op(":") && !at_slice_bound_end()) slice.step = parse_test();
    return make_expr(std::move(slice), start);
  }

  Expr parse_atom() {
    const Token& t = peek();
    Span start = t.span;
    switch (t.kind) {
      case TokenKind::kName:
        advance();
        return make_expr(Name{t.lexeme}, start);
      case TokenKind::kNumber:
        advance();
        return make_expr(NumberLit{t.lexeme}, start);
      case TokenKind::kString: {
        advance();
        StringParts parts = split_string_lexeme(t.lexeme);
        return make_expr(StringLit{parts.prefix, parts.quote, parts.body},
                         start);
      }
      case TokenKind::kKeyword:
        if (t.lexeme == "True" || t.lexeme == "False" || t.lexeme == "None") {
          advance();
          return make_expr(Name{t.lexeme}, start);
        }
        break;
      case TokenKind::kOperator:
        if (t.lexeme == "(") return parse_paren();
        if (t.lexeme == "[") return parse_list();
        if (t.lexeme == "{") return parse_dict();
        break;
      default:
        break;
    }
    fail("expression");
  }

  Expr parse_paren() {
    Span start = peek().span;
    expect_op("(");
    if (accept_op(")")) return make_expr(TupleLit{{}, true}, start);
    Expr first = parse_test();
    if (accept_op(")")) return first;
    TupleLit tuple;
    tuple.items.push_back(std::move(first));
    while (accept_op(",")) {
      if (peek().is_operator(")")) break;
      tuple.items.push_back(parse_test());
    }
    expect_op(")");
    return make_expr(std::move(tuple), start);
  }

  Expr parse_list() {
    Span start = peek().span;
    expect_op("[");
    ListLit list;
    while (!peek().is_operator("]")) {
      list.items.push_back(parse_test());
      if (!accept_op(",")) break;
    }
    expect_op("]");
    return make_expr(std::move(list), start);
  }

  Expr parse_dict() {
    Span start = peek().span;
    expect_op("{");
    DictLit dict;
    while (!peek().is_operator("}")) {
      DictItem item;
      item.key = parse_test();
      expect_op(":");
      item.value = parse_test();
      dict.items.push_back(std::move(item));
      if (!accept_op(",")) break;
    }
    expect_op("}");
    return make_expr(std::move(dict), start);
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Token* last_ = nullptr;
  std::vector<Comment> pending_;
  NodeId next_id_ = 0;
};

}  // namespace

Module parse(std::string_view source) { return Parser(source).run(); }

}  // namespace kchlint
