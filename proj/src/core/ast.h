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

#ifndef KCHLINT_CORE_AST_H_
#define KCHLINT_CORE_AST_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "core/span.h"

namespace kchlint {

using NodeId = std::uint32_t;

// Owning, nullable, deep-copying pointer. Equality compares pointees.
template <typename T>
class Box {
 public:
  Box() = default;
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other)
      : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) {
      ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    }
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  explicit operator bool() const { return ptr_ != nullptr; }
  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }
  T* get() { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
  }

 private:
  std::unique_ptr<T> ptr_;
};

struct Expr;

struct Name {
  std::string id;
  friend bool operator==(const Name&, const Name&) = default;
};

struct Attribute {
  Box<Expr> value;
  std::string attr;
  Span attr_span;
  friend bool operator==(const Attribute& a, const Attribute& b) {
    return a.value == b.value && a.attr == b.attr;
  }
};

struct KeywordArg {
  std::string name;
  Box<Expr> value;
  friend bool operator==(const KeywordArg&, const KeywordArg&) = default;
};

struct Call {
  Box<Expr> func;
  std::vector<Expr> args;
  std::vector<KeywordArg> keywords;
  friend bool operator==(const Call&, const Call&) = default;
};

// `body` is the raw text between the quotes; escapes are not interpreted.
struct StringLit {
  std::string prefix;
  std::string quote;
  std::string body;
  friend bool operator==(const StringLit&, const StringLit&) = default;
};

struct NumberLit {
  std::string raw;
  friend bool operator==(const NumberLit&, const NumberLit&) = default;
};

struct ListLit {
  std::vector<Expr> items;
  friend bool operator==(const ListLit&, const ListLit&) = default;
};

struct TupleLit {
  std::vector<Expr> items;
  bool parenthesized = true;
  friend bool operator==(const TupleLit&, const TupleLit&) = default;
};

struct DictItem {
  Box<Expr> key;
  Box<Expr> value;
  friend bool operator==(const DictItem&, const DictItem&) = default;
};

struct DictLit {
  std::vector<DictItem> items;
  friend bool operator==(const DictLit&, const DictLit&) = default;
};

// Binary arithmetic, bitwise, comparison and boolean operators.
struct BinOp {
  Box<Expr> left;
  std::string op;
  Box<Expr> right;
  friend bool operator==(const BinOp&, const BinOp&) = default;
};

struct UnaryOp {
  std::string op;
  Box<Expr> operand;
  friend bool operator==(const UnaryOp&, const UnaryOp&) = default;
};

struct Subscript {
  Box<Expr> value;
  Box<Expr> index;
  friend bool operator==(const Subscript&, const Subscript&) = default;
};

struct Slice {
  Box<Expr> lower;
  Box<Expr> upper;
  Box<Expr> step;
  friend bool operator==(const Slice&, const Slice&) = default;
};

struct Expr {
  using Node = std::variant<Name, Attribute, Call, StringLit, NumberLit,
                            ListLit, TupleLit, DictLit, BinOp, UnaryOp,
                            Subscript, Slice>;
  Node node;
  Span span;
  NodeId id = 0;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
  // Span and id are positional metadata, not structure.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.node == b.node;
  }
};

struct ImportName {
  std::string path;
  std::string alias;  // empty when absent
  Span span;
  friend bool operator==(const ImportName& a, const ImportName& b) {
    return a.path == b.path && a.alias == b.alias;
  }
};

struct Import {
  std::vector<ImportName> names;
  friend bool operator==(const Import&, const Import&) = default;
};

struct ImportFrom {
  std::string module;
  std::vector<ImportName> names;
  friend bool operator==(const ImportFrom&, const ImportFrom&) = default;
};

struct Assign {
  std::vector<Expr> targets;
  Expr value;
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct AugAssign {
  Expr target;
  std::string op;
  Expr value;
  friend bool operator==(const AugAssign&, const AugAssign&) = default;
};

struct ExprStmt {
  Expr value;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};

struct Param {
  std::string name;
  Box<Expr> default_value;
  Span span;
  friend bool operator==(const Param& a, const Param& b) {
    return a.name == b.name && a.default_value == b.default_value;
  }
};

struct Stmt;

struct FunctionDef {
  std::string name;
  std::vector<Param> params;
  std::vector<Stmt> body;
  Span name_span;
  friend bool operator==(const FunctionDef& a, const FunctionDef& b) {
    return a.name == b.name && a.params == b.params && a.body == b.body;
  }
};

struct Return {
  Box<Expr> value;
  friend bool operator==(const Return&, const Return&) = default;
};

struct For {
  Expr target;
  Expr iter;
  std::vector<Stmt> body;
  friend bool operator==(const For&, const For&) = default;
};

// `elif` chains are an If whose orelse holds exactly one If.
struct If {
  Expr test;
  std::vector<Stmt> body;
  std::vector<Stmt> orelse;
  friend bool operator==(const If&, const If&) = default;
};

struct WithItem {
  Expr context;
  Box<Expr> target;
  friend bool operator==(const WithItem&, const WithItem&) = default;
};

struct With {
  std::vector<WithItem> items;
  std::vector<Stmt> body;
  friend bool operator==(const With&, const With&) = default;
};

struct Pass {
  friend bool operator==(const Pass&, const Pass&) = default;
};
struct Break {
  friend bool operator==(const Break&, const Break&) = default;
};
struct Continue {
  friend bool operator==(const Continue&, const Continue&) = default;
};

// `text` includes the leading '#'. A trailing comment sits on the last line
// of its statement; the others precede it on lines of their own.
struct Comment {
  std::string text;
  int attached_line = 0;
  bool trailing = false;
  friend bool operator==(const Comment& a, const Comment& b) {
    return a.text == b.text && a.trailing == b.trailing;
  }
};

struct Stmt {
  using Node = std::variant<Import, ImportFrom, Assign, AugAssign, ExprStmt,
                            FunctionDef, Return, For, If, With, Pass, Break,
                            Continue>;
  Node node;
  std::vector<Comment> comments;
  Span span;
  NodeId id = 0;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  T* as() {
    return std::get_if<T>(&node);
  }
  bool is_import() const {
    return std::holds_alternative<Import>(node) ||
           std::holds_alternative<ImportFrom>(node);
  }
  friend bool operator==(const Stmt& a, const Stmt& b) {
    return a.node == b.node && a.comments == b.comments;
  }
};

struct Module {
  std::vector<Stmt> body;
  // Comments after the last statement.
  std::vector<Comment> trailing_comments;
  Span span;
  friend bool operator==(const Module& a, const Module& b) {
    return a.body == b.body && a.trailing_comments == b.trailing_comments;
  }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Span span, std::string expected, std::string found)
      : std::runtime_error(to_string(span) + ": expected " + expected +
                           ", found " + found),
        span_(span),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const Span& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Span span_;
  std::string expected_;
  std::string found_;
};

// Parses the supported Python subset. Throws LexError or SyntaxError.
Module parse(std::string_view source);

// Canonical rendering: 4-space indents, one statement per line, no blank
// lines, original string quoting. Deterministic for equal trees.
std::string unparse(const Module& module);
std::string unparse(const Expr& expr);

// "pd.read_csv" for Attribute(Name(pd), read_csv); nullopt for anything that
// is not a pure Name/Attribute chain.
std::optional<std::string> dotted_path(const Expr& expr);

// Children of an expression in source order.
std::vector<const Expr*> children(const Expr& expr);
std::vector<Expr*> children(Expr& expr);

// Statement-level expressions (not descending into nested statements) and
// nested statement blocks, in source order.
std::vector<const Expr*> expressions(const Stmt& stmt);
std::vector<Expr*> expressions(Stmt& stmt);
std::vector<const std::vector<Stmt>*> blocks(const Stmt& stmt);
std::vector<std::vector<Stmt>*> blocks(Stmt& stmt);

// Pre-order traversal of every expression node in the module.
void for_each_expr(const Module& module,
                   const std::function<void(const Expr&, const Stmt&)>& fn);
void for_each_expr(Module& module, const std::function<void(Expr&)>& fn);

// Pre-order traversal of every statement, with the enclosing FunctionDef
// (or nullptr at module level).
void for_each_stmt(
    const Module& module,
    const std::function<void(const Stmt&, const Stmt* function)>& fn);

NodeId max_node_id(const Module& module);

}  // namespace kchlint

#endif  // KCHLINT_CORE_AST_H_
