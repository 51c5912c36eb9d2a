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

#include "core/ast.h"

namespace kchlint {

namespace {

template <typename ExprT, typename Out>
void collect_children(ExprT& expr, Out& out) {
  auto add = [&out](auto& box) {
    if (box) out.push_back(box.get());
  };
  std::visit(
      [&](auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Attribute>) {
          add(node.value);
        } else if constexpr (std::is_same_v<T, Call>) {
          add(node.func);
          for (auto& a : node.args) out.push_back(&a);
          for (auto& k : node.keywords) add(k.value);
        } else if constexpr (std::is_same_v<T, ListLit> ||
                             std::is_same_v<T, TupleLit>) {
          for (auto& item : node.items) out.push_back(&item);
        } else if constexpr (std::is_same_v<T, DictLit>) {
          for (auto& item : node.items) {
            add(item.key);
            add(item.value);
          }
        } else if constexpr (std::is_same_v<T, BinOp>) {
          add(node.left);
          add(node.right);
        } else if constexpr (std::is_same_v<T, UnaryOp>) {
          add(node.operand);
        } else if constexpr (std::is_same_v<T, Subscript>) {
          add(node.value);
          add(node.index);
        } else if constexpr (std::is_same_v<T, Slice>) {
          add(node.lower);
          add(node.upper);
          add(node.step);
        }
      },
      expr.node);
}

template <typename StmtT, typename Out>
void collect_expressions(StmtT& stmt, Out& out) {
  std::visit(
      [&](auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Assign>) {
          for (auto& t : node.targets) out.push_back(&t);
          out.push_back(&node.value);
        } else if constexpr (std::is_same_v<T, AugAssign>) {
          out.push_back(&node.target);
          out.push_back(&node.value);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          out.push_back(&node.value);
        } else if constexpr (std::is_same_v<T, FunctionDef>) {
          for (auto& p : node.params) {
            if (p.default_value) out.push_back(p.default_value.get());
          }
        } else if constexpr (std::is_same_v<T, Return>) {
          if (node.value) out.push_back(node.value.get());
        } else if constexpr (std::is_same_v<T, For>) {
          out.push_back(&node.target);
          out.push_back(&node.iter);
        } else if constexpr (std::is_same_v<T, If>) {
          out.push_back(&node.test);
        } else if constexpr (std::is_same_v<T, With>) {
          for (auto& item : node.items) {
            out.push_back(&item.context);
            if (item.target) out.push_back(item.target.get());
          }
        }
      },
      stmt.node);
}

template <typename StmtT, typename Out>
void collect_blocks(StmtT& stmt, Out& out) {
  std::visit(
      [&](auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FunctionDef> ||
                      std::is_same_v<T, For> || std::is_same_v<T, With>) {
          out.push_back(&node.body);
        } else if constexpr (std::is_same_v<T, If>) {
          out.push_back(&node.body);
          if (!node.orelse.empty()) out.push_back(&node.orelse);
        }
      },
      stmt.node);
}

void walk_expr(const Expr& expr, const Stmt& stmt,
               const std::function<void(const Expr&, const Stmt&)>& fn) {
  fn(expr, stmt);
  for (const Expr* child : children(expr)) walk_expr(*child, stmt, fn);
}

void walk_expr(Expr& expr, const std::function<void(Expr&)>& fn) {
  fn(expr);
  for (Expr* child : children(expr)) walk_expr(*child, fn);
}

void walk_block(const std::vector<Stmt>& block,
                const std::function<void(const Expr&, const Stmt&)>& fn) {
  for (const Stmt& stmt : block) {
    for (const Expr* e : expressions(stmt)) walk_expr(*e, stmt, fn);
    for (const auto* inner : blocks(stmt)) walk_block(*inner, fn);
  }
}

void walk_block(std::vector<Stmt>& block,
                const std::function<void(Expr&)>& fn) {
  for (Stmt& stmt : block) {
    for (Expr* e : expressions(stmt)) walk_expr(*e, fn);
    for (auto* inner : blocks(stmt)) walk_block(*inner, fn);
  }
}

void walk_stmts(const std::vector<Stmt>& block, const Stmt* function,
                const std::function<void(const Stmt&, const Stmt*)>& fn) {
  for (const Stmt& stmt : block) {
    fn(stmt, function);
    const Stmt* inner_function =
        stmt.as<FunctionDef>() != nullptr ? &stmt : function;
    for (const auto* inner : blocks(stmt)) {
      walk_stmts(*inner, inner_function, fn);
    }
  }
}

}  // namespace

std::optional<std::string> dotted_path(const Expr& expr) {
  if (const auto* name = expr.as<Name>()) return name->id;
  if (const auto* attr = expr.as<Attribute>()) {
    if (!attr->value) return std::nullopt;
    auto base = dotted_path(*attr->value);
    if (!base) return std::nullopt;
    return *base + "." + attr->attr;
  }
  return std::nullopt;
}

std::vector<const Expr*> children(const Expr& expr) {
  std::vector<const Expr*> out;
  collect_children(expr, out);
  return out;
}

std::vector<Expr*> children(Expr& expr) {
  std::vector<Expr*> out;
  collect_children(expr, out);
  return out;
}

std::vector<const Expr*> expressions(const Stmt& stmt) {
  std::vector<const Expr*> out;
  collect_expressions(stmt, out);
  return out;
}

std::vector<Expr*> expressions(Stmt& stmt) {
  std::vector<Expr*> out;
  collect_expressions(stmt, out);
  return out;
}

std::vector<const std::vector<Stmt>*> blocks(const Stmt& stmt) {
  std::vector<const std::vector<Stmt>*> out;
  collect_blocks(stmt, out);
  return out;
}

std::vector<std::vector<Stmt>*> blocks(Stmt& stmt) {
  std::vector<std::vector<Stmt>*> out;
  collect_blocks(stmt, out);
  return out;
}

void for_each_expr(const Module& module,
                   const std::function<void(const Expr&, const Stmt&)>& fn) {
  walk_block(module.body, fn);
}

void for_each_expr(Module& module, const std::function<void(Expr&)>& fn) {
  walk_block(module.body, fn);
}

void for_each_stmt(
    const Module& module,
    const std::function<void(const Stmt&, const Stmt* function)>& fn) {
  walk_stmts(module.body, nullptr, fn);
}

NodeId max_node_id(const Module& module) {
  NodeId max = 0;
  for_each_stmt(module, [&](const Stmt& s, const Stmt*) {
    max = std::max(max, s.id);
  });
  for_each_expr(module, [&](const Expr& e, const Stmt&) {
    max = std::max(max, e.id);
  });
  return max;
}

}  // namespace kchlint
