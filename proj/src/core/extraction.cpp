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
#include <cctype>
#include <functional>
#include <set>
#include <unordered_set>

#include "core/extraction.h"

namespace kchlint {

namespace {

constexpr std::array<std::string_view, 156> kBuiltins = {
    "ArithmeticError", "AssertionError", "AttributeError", "BaseException",
    "BlockingIOError", "BrokenPipeError", "BufferError", "BytesWarning",
    "ChildProcessError", "ConnectionAbortedError", "ConnectionError",
    "ConnectionRefusedError", "ConnectionResetError", "DeprecationWarning",
    "EOFError", "Ellipsis", "EncodingWarning", "EnvironmentError", "Exception",
    "False", "FileExistsError", "FileNotFoundError", "FloatingPointError",
    "FutureWarning", "GeneratorExit", "IOError", "ImportError", "ImportWarning",
    "IndentationError", "IndexError", "InterruptedError", "IsADirectoryError",
    "KeyError", "KeyboardInterrupt", "LookupError", "MemoryError",
    "ModuleNotFoundError", "NameError", "None", "NotADirectoryError",
    "NotImplemented", "NotImplementedError", "OSError", "OverflowError",
    "PendingDeprecationWarning", "PermissionError", "ProcessLookupError",
    "RecursionError", "ReferenceError", "ResourceWarning", "RuntimeError",
    "RuntimeWarning", "StopAsyncIteration", "StopIteration", "SyntaxError",
    "SyntaxWarning", "SystemError", "SystemExit", "TabError", "TimeoutError",
    "True", "TypeError", "UnboundLocalError", "UnicodeDecodeError",
    "UnicodeEncodeError", "UnicodeError", "UnicodeTranslateError",
    "UnicodeWarning", "UserWarning", "ValueError", "Warning",
    "ZeroDivisionError", "__build_class__", "__debug__", "__doc__", "__file__",
    "__import__", "__loader__", "__name__", "__package__", "__spec__", "abs",
    "aiter", "all", "anext", "any", "ascii", "bin", "bool", "breakpoint",
    "bytearray", "bytes", "callable", "chr", "classmethod", "compile",
    "complex", "copyright", "credits", "delattr", "dict", "dir", "divmod",
    "enumerate", "eval", "exec", "exit", "filter", "float", "format",
    "frozenset", "getattr", "globals", "hasattr", "hash", "help", "hex", "id",
    "input", "int", "isinstance", "issubclass", "iter", "len", "license",
    "list", "locals", "map", "max", "memoryview", "min", "next", "object",
    "oct", "open", "ord", "pow", "print", "property", "quit", "range", "repr",
    "reversed", "round", "set", "setattr", "slice", "sorted", "staticmethod",
    "str", "sum", "super", "tuple", "type", "vars", "zip",
};

struct WalkHooks {
  std::function<void(const Stmt& def, int scope, int parent)> enter_function;
  std::function<void(const Stmt&, int scope)> on_stmt;
  std::function<void(const Expr&, const Stmt&, int scope)> on_expr;
};

class ScopedWalker {
 public:
  explicit ScopedWalker(const WalkHooks& hooks) : hooks_(hooks) {}

  void walk(const Module& module) { walk_block(module.body, 0); }

 private:
  void walk_block(const std::vector<Stmt>& block, int scope) {
    for (const Stmt& stmt : block) {
      if (hooks_.on_stmt) hooks_.on_stmt(stmt, scope);
      for (const Expr* e : expressions(stmt)) walk_expr(*e, stmt, scope);
      int inner = scope;
      if (stmt.as<FunctionDef>() != nullptr) {
        inner = ++last_scope_;
        if (hooks_.enter_function) hooks_.enter_function(stmt, inner, scope);
      }
      for (const auto* b : blocks(stmt)) walk_block(*b, inner);
    }
  }

  void walk_expr(const Expr& e, const Stmt& stmt, int scope) {
    if (hooks_.on_expr) hooks_.on_expr(e, stmt, scope);
    for (const Expr* c : children(e)) walk_expr(*c, stmt, scope);
  }

  const WalkHooks& hooks_;
  int last_scope_ = 0;
};

// Names bound by an assignment-like target; Attribute and Subscript targets
// bind nothing.
void collect_target_names(const Expr& target, std::vector<const Expr*>& out) {
  if (target.as<Name>() != nullptr) {
    out.push_back(&target);
    return;
  }
  const std::vector<Expr>* items = nullptr;
  if (const auto* t = target.as<TupleLit>()) items = &t->items;
  if (const auto* l = target.as<ListLit>()) items = &l->items;
  if (items == nullptr) return;
  for (const Expr& item : *items) collect_target_names(item, out);
}

std::vector<const Expr*> stored_names(const Stmt& stmt) {
  std::vector<const Expr*> out;
  if (const auto* a = stmt.as<Assign>()) {
    for (const Expr& t : a->targets) collect_target_names(t, out);
  } else if (const auto* f = stmt.as<For>()) {
    collect_target_names(f->target, out);
  } else if (const auto* w = stmt.as<With>()) {
    for (const WithItem& item : w->items) {
      if (item.target) collect_target_names(*item.target, out);
    }
  }
  return out;
}

// `import a.b` binds `a`; `import a.b as c` binds c.
void bind_import_names(const Stmt& stmt,
                       const std::function<void(AliasEntry)>& bind) {
  if (const auto* imp = stmt.as<Import>()) {
    for (const ImportName& n : imp->names) {
      if (!n.alias.empty()) {
        bind(AliasEntry{n.alias, n.path, stmt.id, n.span});
      } else {
        std::string head = n.path.substr(0, n.path.find('.'));
        bind(AliasEntry{head, head, stmt.id, n.span});
      }
    }
  } else if (const auto* from = stmt.as<ImportFrom>()) {
    for (const ImportName& n : from->names) {
      bind(AliasEntry{n.alias.empty() ? n.path : n.alias,
                      from->module + "." + n.path, stmt.id, n.span});
    }
  }
}

std::string statement_text(const Stmt& stmt) {
  Module m;
  m.body.push_back(stmt);
  for (auto* b : blocks(m.body.front())) b->clear();
  std::string text = unparse(m);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

}  // namespace

void AliasMap::bind(AliasEntry entry) {
  order_.erase(std::remove(order_.begin(), order_.end(), entry.alias),
               order_.end());
  order_.push_back(entry.alias);
  std::string key = entry.alias;
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

const AliasEntry* AliasMap::find(std::string_view alias) const {
  auto it = entries_.find(alias);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> AliasMap::alias_for(
    std::string_view module_path) const {
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    if (entries_.at(*it).target == module_path) return *it;
  }
  return std::nullopt;
}

AliasMap extract_imports(const Module& module) {
  AliasMap aliases;
  for_each_stmt(module, [&](const Stmt& stmt, const Stmt*) {
    bind_import_names(stmt, [&](AliasEntry e) { aliases.bind(std::move(e)); });
  });
  return aliases;
}

std::string_view to_string(CalleeKind kind) {
  switch (kind) {
    case CalleeKind::kQualified: return "qualified";
    case CalleeKind::kBare: return "bare";
    case CalleeKind::kMethodOnValue: return "method-on-value";
  }
  return "?";
}

bool is_builtin_name(std::string_view name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

std::optional<std::string> file_extension(std::string_view value) {
  std::size_t dot = value.rfind('.');
  if (dot == std::string_view::npos || dot + 1 == value.size()) {
    return std::nullopt;
  }
  std::string ext = ".";
  for (char c : value.substr(dot + 1)) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return std::nullopt;
    ext.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return ext;
}

ArgFeature make_arg_feature(const Expr& arg, int position, std::string keyword) {
  ArgFeature f;
  f.position = position;
  f.keyword = std::move(keyword);
  if (const auto* s = arg.as<StringLit>()) {
    f.literal_kind = LiteralKind::kString;
    f.string_value = s->body;
    f.file_extension = file_extension(s->body);
  } else if (arg.as<NumberLit>() != nullptr) {
    f.literal_kind = LiteralKind::kNumber;
  }
  return f;
}

const std::vector<Definition>* ScopeTable::lookup(int scope,
                                                  std::string_view name) const {
  while (scope >= 0) {
    const Scope& s = scopes_[static_cast<std::size_t>(scope)];
    if (auto it = s.defined.find(name); it != s.defined.end()) {
      return &it->second;
    }
    scope = s.parent;
  }
  return nullptr;
}

std::vector<std::string> ScopeTable::visible_names(int scope) const {
  std::set<std::string> names;
  while (scope >= 0) {
    const Scope& s = scopes_[static_cast<std::size_t>(scope)];
    for (const auto& [name, defs] : s.defined) names.insert(name);
    scope = s.parent;
  }
  return {names.begin(), names.end()};
}

ScopeTable extract_scopes(const Module& module) {
  ScopeTable table;
  auto& scopes = table.scopes();
  scopes.push_back(Scope{"<module>", -1, {}, {}});
  std::unordered_set<NodeId> stores;
  std::unordered_set<NodeId> callees;

  auto define = [&](int scope, Definition d) {
    std::string key = d.name;
    scopes[static_cast<std::size_t>(scope)].defined[key].push_back(std::move(d));
  };

  WalkHooks hooks;
  hooks.enter_function = [&](const Stmt& def, int scope, int parent) {
    const auto& fn = *def.as<FunctionDef>();
    if (scopes.size() <= static_cast<std::size_t>(scope)) {
      scopes.resize(static_cast<std::size_t>(scope) + 1);
    }
    scopes[static_cast<std::size_t>(scope)].name = fn.name;
    scopes[static_cast<std::size_t>(scope)].parent = parent;
    for (const Param& p : fn.params) {
      define(scope, Definition{p.name, p.span, DefinitionKind::kParameter, {}});
    }
  };
  hooks.on_stmt = [&](const Stmt& stmt, int scope) {
    bind_import_names(stmt, [&](AliasEntry e) {
      define(scope, Definition{e.alias, e.span, DefinitionKind::kImport, {}});
    });
    if (const auto* fn = stmt.as<FunctionDef>()) {
      define(scope,
             Definition{fn->name, fn->name_span, DefinitionKind::kFunction, {}});
    }
    DefinitionKind kind = DefinitionKind::kAssignment;
    if (stmt.as<For>() != nullptr) kind = DefinitionKind::kLoopTarget;
    if (stmt.as<With>() != nullptr) kind = DefinitionKind::kWithTarget;
    const auto* assign = stmt.as<Assign>();
    for (const Expr* target : stored_names(stmt)) {
      stores.insert(target->id);
      Definition d{target->as<Name>()->id, target->span, kind, {}};
      if (assign != nullptr && assign->targets.size() == 1 &&
          &assign->targets.front() == target) {
        if (const auto* call = assign->value.as<Call>()) {
          d.value_callee_path = dotted_path(*call->func);
        }
      }
      define(scope, std::move(d));
    }
  };
  hooks.on_expr = [&](const Expr& e, const Stmt&, int scope) {
    if (const auto* call = e.as<Call>()) {
      if (call->func->as<Name>() != nullptr) callees.insert(call->func->id);
    }
    const auto* name = e.as<Name>();
    if (name == nullptr || stores.count(e.id) != 0) return;
    scopes[static_cast<std::size_t>(scope)].uses.push_back(
        NameUse{name->id, e.span, e.id, callees.count(e.id) != 0});
  };
  ScopedWalker(hooks).walk(module);
  return table;
}

std::vector<CallSite> extract_call_sites(const Module& module,
                                         const AliasMap& aliases) {
  return extract_call_sites(module, aliases, extract_scopes(module));
}

std::vector<CallSite> extract_call_sites(const Module& module,
                                         const AliasMap& aliases,
                                         const ScopeTable& scopes) {
  std::vector<CallSite> sites;

  // Resolves a dotted path through the alias map: "pd.read_csv" ->
  // "pandas.read_csv". Returns nullopt when the head is not an import.
  auto resolve = [&](const std::string& path) -> std::optional<std::string> {
    std::string head = path.substr(0, path.find('.'));
    const AliasEntry* entry = aliases.find(head);
    if (entry == nullptr) return std::nullopt;
    return entry->target + path.substr(head.size());
  };
  auto split = [](const std::string& path) {
    std::size_t dot = path.rfind('.');
    if (dot == std::string::npos) return std::pair<std::string, std::string>{"", path};
    return std::pair{path.substr(0, dot), path.substr(dot + 1)};
  };

  const Stmt* cached_stmt = nullptr;
  std::string cached_text;

  WalkHooks hooks;
  hooks.on_expr = [&](const Expr& e, const Stmt& stmt, int scope) {
    const auto* call = e.as<Call>();
    if (call == nullptr) return;
    CallSite site;
    site.span = e.span;
    site.call_id = e.id;
    site.scope = scope;
    const Expr& func = *call->func;
    site.callee_id = func.id;
    site.callee_span = func.span;
    if (const auto* attr = func.as<Attribute>()) site.callee_span = attr->attr_span;

    std::optional<std::string> path = dotted_path(func);
    std::optional<std::string> resolved = path ? resolve(*path) : std::nullopt;
    if (func.as<Name>() != nullptr) site.callee_is_name = true;
    if (resolved) {
      auto [base, name] = split(*resolved);
      site.callee_kind = base.empty() ? CalleeKind::kBare : CalleeKind::kQualified;
      site.base_path = base;
      site.func_name = base.empty() ? *path : name;
    } else if (const auto* n = func.as<Name>()) {
      site.callee_kind = CalleeKind::kBare;
      site.func_name = n->id;
    } else {
      site.callee_kind = CalleeKind::kMethodOnValue;
      if (const auto* attr = func.as<Attribute>()) {
        site.func_name = attr->attr;
        site.base_path = unparse(*attr->value);
        const auto* receiver = attr->value->as<Name>();
        const std::vector<Definition>* defs =
            receiver != nullptr ? scopes.lookup(scope, receiver->id) : nullptr;
        if (defs != nullptr && defs->size() == 1 &&
            defs->front().value_callee_path) {
          if (auto origin = resolve(*defs->front().value_callee_path)) {
            auto [base, name] = split(*origin);
            if (!base.empty()) site.receiver_origin = ReceiverOrigin{base, name};
          }
        }
      }
    }

    for (std::size_t i = 0; i < call->args.size(); ++i) {
      site.args.push_back(make_arg_feature(call->args[i], static_cast<int>(i)));
    }
    for (const KeywordArg& k : call->keywords) {
      site.args.push_back(make_arg_feature(*k.value, -1, k.name));
    }

    for (const Comment& c : stmt.comments) site.statement_comments.push_back(c.text);
    for (const Expr* t : stored_names(stmt)) {
      site.assigned_names.push_back(t->as<Name>()->id);
    }
    const Expr* value = nullptr;
    if (const auto* a = stmt.as<Assign>()) value = &a->value;
    if (const auto* a = stmt.as<AugAssign>()) {
      value = &a->value;
      if (const auto* n = a->target.as<Name>()) site.assigned_names.push_back(n->id);
    }
    if (const auto* x = stmt.as<ExprStmt>()) value = &x->value;
    if (const auto* r = stmt.as<Return>()) value = r->value.get();
    site.is_statement_value = value == &e;
    if (cached_stmt != &stmt) {
      cached_stmt = &stmt;
      cached_text = statement_text(stmt);
    }
    site.enclosing_statement_text = cached_text;
    sites.push_back(std::move(site));
  };
  ScopedWalker(hooks).walk(module);
  return sites;
}

}  // namespace kchlint
