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

#include "core/correction.h"

#include <algorithm>
#include <unordered_map>

#include "core/token.h"

namespace kchlint {

namespace {

struct NodeInfo {
  bool is_attribute = false;
  Span span;
};

std::unordered_map<NodeId, NodeInfo> index_nodes(const Module& module) {
  std::unordered_map<NodeId, NodeInfo> out;
  for_each_expr(module, [&](const Expr& e, const Stmt&) {
    if (const auto* attr = e.as<Attribute>()) {
      out[e.id] = NodeInfo{true, attr->attr_span};
    } else if (e.as<Name>() != nullptr) {
      out[e.id] = NodeInfo{false, e.span};
    }
  });
  return out;
}

Expr make_path(const std::string& dotted, NodeId& next_id) {
  std::size_t dot = dotted.find('.');
  Expr head;
  head.node = Name{dotted.substr(0, dot)};
  head.id = ++next_id;
  while (dot != std::string::npos) {
    std::size_t next = dotted.find('.', dot + 1);
    Expr attr;
    attr.node = Attribute{std::move(head), dotted.substr(dot + 1, next - dot - 1), {}};
    attr.id = ++next_id;
    head = std::move(attr);
    dot = next;
  }
  return head;
}

}  // namespace

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kReplaceAttrName: return "replace-attr-name";
    case EditKind::kReplaceName: return "replace-name";
    case EditKind::kQualifyCall: return "qualify-call";
    case EditKind::kInsertImport: return "insert-import";
  }
  return "?";
}

FixPlan plan_fixes(const Module& module, const std::vector<Diagnostic>& diagnostics,
                   const FixOptions& options) {
  FixPlan plan;
  auto nodes = index_nodes(module);
  std::vector<Span> claimed;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    const Diagnostic& d = diagnostics[i];
    if (!d.suggestion ||
        (d.category == Category::kSemanticIntent && !options.fix_intent)) {
      plan.unfixed.push_back(i);
      continue;
    }
    const SuggestedFix& s = *d.suggestion;
    std::vector<FixEdit> group;
    if (d.target != 0) {
      auto it = nodes.find(d.target);
      if (it == nodes.end()) {
        plan.unfixed.push_back(i);
        continue;
      }
      FixEdit edit;
      edit.target = d.target;
      edit.span = it->second.span;
      edit.diagnostic = i;
      if (s.kind == FixKind::kInsertImportAndQualify) {
        std::size_t dot = s.replacement.rfind('.');
        if (it->second.is_attribute || dot == std::string::npos) {
          plan.unfixed.push_back(i);
          continue;
        }
        edit.kind = EditKind::kQualifyCall;
        edit.alias = s.replacement.substr(0, dot);
        edit.replacement = s.replacement.substr(dot + 1);
      } else {
        edit.kind = it->second.is_attribute ? EditKind::kReplaceAttrName
                                            : EditKind::kReplaceName;
        edit.replacement = s.replacement;
      }
      bool overlap = std::any_of(claimed.begin(), claimed.end(),
                                 [&](const Span& c) { return c.overlaps(edit.span); });
      if (overlap) {
        plan.unfixed.push_back(i);
        continue;
      }
      claimed.push_back(edit.span);
      group.push_back(std::move(edit));
    }
    if (s.required_import) {
      const RequiredImport& imp = *s.required_import;
      bool planned = std::any_of(
          plan.edits.begin(), plan.edits.end(), [&](const FixEdit& e) {
            return e.kind == EditKind::kInsertImport &&
                   e.module_path == imp.module_path && e.alias == imp.alias;
          });
      if (!planned) {
        FixEdit edit;
        edit.kind = EditKind::kInsertImport;
        edit.module_path = imp.module_path;
        edit.alias = imp.alias;
        edit.replacement = imp.alias;
        edit.diagnostic = i;
        group.push_back(std::move(edit));
      }
    }
    plan.applied.push_back(i);
    for (FixEdit& e : group) plan.edits.push_back(std::move(e));
  }
  return plan;
}

Module apply_fixes(const Module& module, const std::vector<FixEdit>& edits) {
  Module out = module;
  if (edits.empty()) return out;
  NodeId next_id = max_node_id(out);
  std::unordered_map<NodeId, const FixEdit*> by_target;
  for (const FixEdit& e : edits) {
    if (e.kind != EditKind::kInsertImport) by_target[e.target] = &e;
  }
  for_each_expr(out, [&](Expr& expr) {
    auto it = by_target.find(expr.id);
    if (it == by_target.end()) return;
    const FixEdit& edit = *it->second;
    switch (edit.kind) {
      case EditKind::kReplaceAttrName:
        if (auto* attr = expr.as<Attribute>()) attr->attr = edit.replacement;
        break;
      case EditKind::kReplaceName:
        if (auto* name = expr.as<Name>()) name->id = edit.replacement;
        break;
      case EditKind::kQualifyCall:
        if (expr.as<Name>() != nullptr) {
          Attribute attr{make_path(edit.alias, next_id), edit.replacement,
                         expr.span};
          expr.node = std::move(attr);
        }
        break;
      case EditKind::kInsertImport:
        break;
    }
  });

  auto first_code = std::find_if(out.body.begin(), out.body.end(),
                                 [](const Stmt& s) { return !s.is_import(); });
  std::size_t position = static_cast<std::size_t>(first_code - out.body.begin());
  for (const FixEdit& e : edits) {
    if (e.kind != EditKind::kInsertImport) continue;
    Stmt stmt;
    stmt.id = ++next_id;
    ImportName name;
    name.path = e.module_path;
    if (e.alias != e.module_path) name.alias = e.alias;
    stmt.node = Import{{std::move(name)}};
    out.body.insert(out.body.begin() + static_cast<std::ptrdiff_t>(position),
                    std::move(stmt));
    ++position;
  }
  return out;
}

FixResult fix(std::string_view source, const KnowledgeBase& kb,
              const FixOptions& options) {
  FixResult result;
  Module module;
  try {
    module = parse(source);
  } catch (const LexError& e) {
    result.fixed_source = std::string(source);
    result.parse_failure = e.what();
    return result;
  } catch (const SyntaxError& e) {
    result.fixed_source = std::string(source);
    result.parse_failure = e.what();
    return result;
  }
  std::vector<Diagnostic> diagnostics = validate(module, kb);
  FixPlan plan = plan_fixes(module, diagnostics, options);
  for (std::size_t i : plan.applied) result.applied.push_back(diagnostics[i]);
  for (std::size_t i : plan.unfixed) result.unfixed.push_back(diagnostics[i]);
  result.fixed_source = unparse(apply_fixes(module, plan.edits));
  result.edits = std::move(plan.edits);
  return result;
}

}  // namespace kchlint
