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

#ifndef KCHLINT_CORE_TOKEN_H_
#define KCHLINT_CORE_TOKEN_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/span.h"

namespace kchlint {

enum class TokenKind {
  kName,
  kNumber,
  kString,
  kOperator,
  kKeyword,
  kNewline,
  kIndent,
  kDedent,
  kComment,
  kEof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEof;
  // Exact source text of the token. Synthetic tokens (indent, dedent, eof and
  // the newline closing an unterminated last line) have an empty lexeme.
  std::string lexeme;
  // Whitespace, blank lines and line continuations preceding the token.
  std::string trivia;
  Span span;

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
  bool is_operator(std::string_view text) const {
    return is(TokenKind::kOperator, text);
  }
  bool is_keyword(std::string_view text) const {
    return is(TokenKind::kKeyword, text);
  }
};

// Splits a string token lexeme into prefix (r, b, f, ...), quote and body.
struct StringParts {
  std::string prefix;
  std::string quote;
  std::string body;
};
StringParts split_string_lexeme(std::string_view lexeme);

class LexError : public std::runtime_error {
 public:
  LexError(Span span, std::string reason)
      : std::runtime_error(to_string(span) + ": " + reason),
        span_(span),
        reason_(std::move(reason)) {}

  const Span& span() const { return span_; }
  const std::string& reason() const { return reason_; }

 private:
  Span span_;
  std::string reason_;
};

// Tokenizes Python source. The last token is always kEof. Comments are
// emitted as tokens; blank lines and comment-only lines produce no newline
// token.
std::vector<Token> tokenize(std::string_view source);

bool is_python_keyword(std::string_view word);

}  // namespace kchlint

#endif  // KCHLINT_CORE_TOKEN_H_
