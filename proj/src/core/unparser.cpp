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

#include <string>

#include "core/ast.h"

namespace kchlint {

namespace {

constexpr int kTupleBare = 0;
constexpr int kTest = 1;
constexpr int kBitOr = 5;
constexpr int kUnary = 11;
constexpr int kPower = 12;
constexpr int kAtom = 13;

int binary_precedence(const std::string& op) {
  if (op == "or") return 1;
  if (op == "and") return 2;
  if (op == "|") return 5;
  if (op == "^") return 6;
  if (op == "&") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "//" || op == "%" || op == "@") return 10;
  if (op == "**") return kPower;
  return 4;  // comparisons
}

int precedence(const Expr& e) {
  if (const auto* b = e.as<BinOp>()) return binary_precedence(b->op);
  if (const auto* u = e.as<UnaryOp>()) return u->op == "not" ? 3 : kUnary;
  if (const auto* t = e.as<TupleLit>()) {
    return t->parenthesized || t->items.empty() ? kAtom : kTupleBare;
  }
  return kAtom;
}

class Printer {
 public:
  std::string expr(const Expr& e, int min_prec) {
    if (precedence(e) < min_prec) {
      if (const auto* t = e.as<TupleLit>()) return "(" + tuple_items(*t) + ")";
      return "(" + expr(e, kTupleBare) + ")";
    }
    return std::visit([this](const auto& node) { return render(node); },
                      e.node);
  }

  void block(const std::vector<Stmt>& body, int depth) {
    for (const Stmt& s : body) stmt(s, depth);
  }

  void comments_line(const std::vector<Comment>& comments, int depth) {
    for (const Comment& c : comments) {
      if (c.trailing) continue;
      indent(depth);
      out_ += c.text;
      out_ += '\n';
    }
  }

  std::string take() { return std::move(out_); }

 private:
  std::string render(const Name& n) { return n.id; }
  std::string render(const NumberLit& n) { return n.raw; }
  std::string render(const StringLit& s) {
    return s.prefix + s.quote + s.body + s.quote;
  }
  std::string render(const Attribute& a) {
    return expr(*a.value, kAtom) + "." + a.attr;
  }
  std::string render(const Call& c) {
    std::string out = expr(*c.func, kAtom) + "(";
    bool first = true;
    for (const Expr& a : c.args) {
      if (!first) out += ", ";
      first = false;
      out += expr(a, kTest);
    }
    for (const KeywordArg& k : c.keywords) {
      if (!first) out += ", ";
      first = false;
      out += k.name + "=" + expr(*k.value, kTest);
    }
    return out + ")";
  }
  std::string render(const ListLit& l) {
    std::string out = "[";
    for (std::size_t i = 0; i < l.items.size(); ++i) {
      if (i != 0) out += ", ";
      out += expr(l.items[i], kTest);
    }
    return out + "]";
  }
  std::string tuple_items(const TupleLit& t) {
    std::string out;
    for (std::size_t i = 0; i < t.items.size(); ++i) {
      if (i != 0) out += ", ";
      out += expr(t.items[i], kTest);
    }
    if (t.items.size() == 1) out += ",";
    return out;
  }
  std::string render(const TupleLit& t) {
    if (t.parenthesized || t.items.empty()) return "(" + tuple_items(t) + ")";
    return tuple_items(t);
  }
  std::string render(const DictLit& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.items.size(); ++i) {
      if (i != 0) out += ", ";
      out += expr(*d.items[i].key, kTest) + ": " + expr(*d.items[i].value, kTest);
    }
    return out + "}";
  }
  std::string render(const BinOp& b) {
    int p = binary_precedence(b.op);
    bool right_assoc = b.op == "**";
    return expr(*b.left, right_assoc ? p + 1 : p) + " " + b.op + " " +
           expr(*b.right, right_assoc ? p : p + 1);
  }
  std::string render(const UnaryOp& u) {
    if (u.op == "not") return "not " + expr(*u.operand, 3);
    return u.op + expr(*u.operand, kUnary);
  }
  std::string subscript_item(const Expr& e) {
    return e.as<Slice>() != nullptr ? render(*e.as<Slice>()) : expr(e, kTest);
  }
  std::string render(const Subscript& s) {
    std::string index;
    const auto* tuple = s.index->as<TupleLit>();
    if (tuple != nullptr && !tuple->parenthesized && !tuple->items.empty()) {
      for (std::size_t i = 0; i < tuple->items.size(); ++i) {
        if (i != 0) index += ", ";
        index += subscript_item(tuple->items[i]);
      }
      if (tuple->items.size() == 1) index += ",";
    } else {
      index = subscript_item(*s.index);
    }
    return expr(*s.value, kAtom) + "[" + index + "]";
  }
  std::string render(const Slice& s) {
    std::string out;
    if (s.lower) out += expr(*s.lower, kTest);
    out += ":";
    if (s.upper) out += expr(*s.upper, kTest);
    if (s.step) out += ":" + expr(*s.step, kTest);
    return out;
  }

  void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 4, ' '); }

  void end_line(const Stmt& s) {
    for (const Comment& c : s.comments) {
      if (c.trailing) {
        out_ += "  ";
        out_ += c.text;
      }
    }
    out_ += '\n';
  }

  static std::string import_name(const ImportName& n) {
    return n.alias.empty() ? n.path : n.path + " as " + n.alias;
  }

  void stmt(const Stmt& s, int depth) {
    comments_line(s.comments, depth);
    indent(depth);
    std::visit([&](const auto& node) { render_stmt(node, s, depth); }, s.node);
  }

  void render_stmt(const Import& n, const Stmt& s, int) {
    out_ += "import ";
    for (std::size_t i = 0; i < n.names.size(); ++i) {
      if (i != 0) out_ += ", ";
      out_ += import_name(n.names[i]);
    }
    end_line(s);
  }
  void render_stmt(const ImportFrom& n, const Stmt& s, int) {
    out_ += "from " + n.module + " import ";
    for (std::size_t i = 0; i < n.names.size(); ++i) {
      if (i != 0) out_ += ", ";
      out_ += import_name(n.names[i]);
    }
    end_line(s);
  }
  void render_stmt(const Assign& n, const Stmt& s, int) {
    for (const Expr& t : n.targets) out_ += expr(t, kTupleBare) + " = ";
    out_ += expr(n.value, kTupleBare);
    end_line(s);
  }
  void render_stmt(const AugAssign& n, const Stmt& s, int) {
    out_ += expr(n.target, kTupleBare) + " " + n.op + " " +
            expr(n.value, kTupleBare);
    end_line(s);
  }
  void render_stmt(const ExprStmt& n, const Stmt& s, int) {
    out_ += expr(n.value, kTupleBare);
    end_line(s);
  }
  void render_stmt(const FunctionDef& n, const Stmt& s, int depth) {
    out_ += "def " + n.name + "(";
    for (std::size_t i = 0; i < n.params.size(); ++i) {
      if (i != 0) out_ += ", ";
      out_ += n.params[i].name;
      if (n.params[i].default_value) {
        out_ += "=" + expr(*n.params[i].default_value, kTest);
      }
    }
    out_ += "):";
    end_line(s);
    block(n.body, depth + 1);
  }
  void render_stmt(const Return& n, const Stmt& s, int) {
    out_ += "return";
    if (n.value) out_ += " " + expr(*n.value, kTupleBare);
    end_line(s);
  }
  void render_stmt(const For& n, const Stmt& s, int depth) {
    out_ += "for " + expr(n.target, kTupleBare) + " in " +
            expr(n.iter, kTupleBare) + ":";
    end_line(s);
    block(n.body, depth + 1);
  }
  void render_stmt(const If& n, const Stmt& s, int depth) {
    out_ += "if " + expr(n.test, kTest) + ":";
    end_line(s);
    block(n.body, depth + 1);
    const If* current = &n;
    while (!current->orelse.empty()) {
      const Stmt& next = current->orelse.front();
      const If* elif = next.as<If>();
      bool leading = false;
      for (const Comment& c : next.comments) leading |= !c.trailing;
      if (current->orelse.size() == 1 && elif != nullptr && !leading) {
        indent(depth);
        out_ += "elif " + expr(elif->test, kTest) + ":";
        end_line(next);
        block(elif->body, depth + 1);
        current = elif;
        continue;
      }
      indent(depth);
      out_ += "else:\n";
      block(current->orelse, depth + 1);
      break;
    }
  }
  void render_stmt(const With& n, const Stmt& s, int depth) {
    out_ += "with ";
    for (std::size_t i = 0; i < n.items.size(); ++i) {
      if (i != 0) out_ += ", ";
      out_ += expr(n.items[i].context, kTest);
      if (n.items[i].target) out_ += " as " + expr(*n.items[i].target, kBitOr);
    }
    out_ += ":";
    end_line(s);
    block(n.body, depth + 1);
  }
  void render_stmt(const Pass&, const Stmt& s, int) {
    out_ += "pass";
    end_line(s);
  }
  void render_stmt(const Break&, const Stmt& s, int) {
    out_ += "break";
    end_line(s);
  }
  void render_stmt(const Continue&, const Stmt& s, int) {
    out_ += "continue";
    end_line(s);
  }

  std::string out_;
};

}  // namespace

std::string unparse(const Module& module) {
  Printer p;
  p.block(module.body, 0);
  p.comments_line(module.trailing_comments, 0);
  return p.take();
}

std::string unparse(const Expr& expr) { return Printer().expr(expr, kTupleBare); }

}  // namespace kchlint
