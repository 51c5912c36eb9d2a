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
#include <cstdint>

#include "core/token.h"

namespace kchlint {

namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert", "async",
    "await",  "break",  "class",   "continue", "def",      "del",    "elif",
    "else",   "except", "finally", "for",      "from",     "global", "if",
    "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};

// Longest operators first so that a linear scan finds the longest match.
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", ">>", "<<",
    "<=",  ">=",  "==",  "!=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",  "@=",  "+",   "-",   "*",   "/",  "%",  "@",  "&",  "|",  "^",
    "~",   "<",   ">",   "(",   ")",   "[",  "]",  "{",  "}",  ",",  ":",
    ".",   ";",   "="};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c >= 0x80;
}

bool is_ident_char(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_string_prefix(std::string_view word) {
  if (word.size() > 2) return false;
  std::string lower;
  for (char c : word) lower.push_back(static_cast<char>(c | 0x20));
  return lower == "r" || lower == "b" || lower == "u" || lower == "f" ||
         lower == "rb" || lower == "br" || lower == "fr" || lower == "rf";
}

// Returns the offset of the first invalid byte, or npos.
std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t min = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    std::uint32_t cp = c & (0x7F >> len);
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    if (auto bad = find_invalid_utf8(src_); bad != std::string_view::npos) {
      throw LexError(span_at(bad, bad + 1), "invalid UTF-8 sequence");
    }
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!handle_line_start()) continue;
      }
      scan_token();
    }
    if (line_has_code_) emit_synthetic(TokenKind::kNewline);
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit_synthetic(TokenKind::kDedent);
    }
    emit_synthetic(TokenKind::kEof);
    return std::move(tokens_);
  }

 private:
  Span span_at(std::size_t begin, std::size_t end) const {
    Span s;
    s.line = line_;
    s.col = static_cast<int>(begin - line_begin_);
    s.begin = begin;
    s.end = end;
    return s;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void emit(TokenKind kind, std::size_t begin) {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(src_.substr(begin, pos_ - begin));
    t.trivia = std::move(trivia_);
    trivia_.clear();
    t.span = span_at(begin, pos_);
    tokens_.push_back(std::move(t));
    if (kind != TokenKind::kComment && kind != TokenKind::kNewline) {
      line_has_code_ = true;
    }
  }

  void emit_synthetic(TokenKind kind) {
    Token t;
    t.kind = kind;
    t.span = span_at(pos_, pos_);
    if (kind == TokenKind::kEof) {
      t.trivia = std::move(trivia_);
      trivia_.clear();
    }
    tokens_.push_back(std::move(t));
    if (kind == TokenKind::kNewline) line_has_code_ = false;
  }

  void new_line(std::size_t next_line_begin) {
    ++line_;
    line_begin_ = next_line_begin;
  }

  // Consumes indentation, blank lines and comment-only lines. Returns false
  // when the current line produced no code tokens (caller loops again).
  bool handle_line_start() {
    std::size_t start = pos_;
    int width = 0;
    while (pos_ < src_.size() && (peek() == ' ' || peek() == '\t' ||
                                  peek() == '\f')) {
      width = peek() == '\t' ? (width / 8 + 1) * 8 : width + 1;
      ++pos_;
    }
    std::string_view indent = src_.substr(start, pos_ - start);
    if (pos_ >= src_.size()) {
      trivia_ += indent;
      return false;
    }
    char c = peek();
    if (c == '\n' || c == '\r') {
      trivia_ += indent;
      consume_line_break_into_trivia();
      return false;
    }
    if (c == '#') {
      trivia_ += indent;
      std::size_t begin = pos_;
      while (pos_ < src_.size() && peek() != '\n' && peek() != '\r') ++pos_;
      emit(TokenKind::kComment, begin);
      if (pos_ < src_.size()) consume_line_break_into_trivia();
      return false;
    }
    if (c == '\\' && (peek(1) == '\n' || peek(1) == '\r')) {
      throw LexError(span_at(pos_, pos_ + 1),
                     "line continuation at start of line");
    }
    at_line_start_ = false;
    trivia_ += indent;
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit_synthetic(TokenKind::kIndent);
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit_synthetic(TokenKind::kDedent);
      }
      if (width != indents_.back()) {
        throw LexError(span_at(pos_, pos_),
                       "unindent does not match any outer indentation level");
      }
    }
    return true;
  }

  void consume_line_break_into_trivia() {
    if (peek() == '\r' && peek(1) == '\n') {
      trivia_ += "\r\n";
      pos_ += 2;
    } else {
      trivia_ += peek();
      ++pos_;
    }
    new_line(pos_);
  }

  void scan_token() {
    char c = peek();
    auto uc = static_cast<unsigned char>(c);
    if (c == ' ' || c == '\t' || c == '\f') {
      trivia_ += c;
      ++pos_;
      return;
    }
    if (c == '\\') {
      if (peek(1) == '\n' || peek(1) == '\r') {
        trivia_ += c;
        ++pos_;
        consume_line_break_into_trivia();
        return;
      }
      throw LexError(span_at(pos_, pos_ + 1), "unexpected character '\\'");
    }
    if (c == '\n' || c == '\r') {
      if (depth_ > 0) {
        consume_line_break_into_trivia();
        return;
      }
      std::size_t begin = pos_;
      pos_ += (c == '\r' && peek(1) == '\n') ? 2 : 1;
      emit(TokenKind::kNewline, begin);
      line_has_code_ = false;
      at_line_start_ = true;
      new_line(pos_);
      return;
    }
    if (c == '#') {
      std::size_t begin = pos_;
      while (pos_ < src_.size() && peek() != '\n' && peek() != '\r') ++pos_;
      emit(TokenKind::kComment, begin);
      return;
    }
    if (c == '"' || c == '\'') {
      scan_string(pos_);
      return;
    }
    if (is_ident_start(uc)) {
      std::size_t begin = pos_;
      while (pos_ < src_.size() && is_ident_char(peek())) ++pos_;
      std::string_view word = src_.substr(begin, pos_ - begin);
      if ((peek() == '"' || peek() == '\'') && is_string_prefix(word)) {
        scan_string(begin);
        return;
      }
      emit(is_python_keyword(word) ? TokenKind::kKeyword : TokenKind::kName,
           begin);
      return;
    }
    if (is_digit(uc) || (c == '.' && is_digit(peek(1)))) {
      scan_number();
      return;
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        std::size_t begin = pos_;
        pos_ += op.size();
        if (op == "(" || op == "[" || op == "{") ++depth_;
        if ((op == ")" || op == "]" || op == "}") && depth_ > 0) --depth_;
        emit(TokenKind::kOperator, begin);
        return;
      }
    }
    throw LexError(span_at(pos_, pos_ + 1),
                   std::string("illegal character '") + c + "'");
  }

  void scan_number() {
    std::size_t begin = pos_;
    while (pos_ < src_.size()) {
      char c = peek();
      if (is_ident_char(c) || c == '.') {
        bool exponent = (c == 'e' || c == 'E') && (peek(1) == '+' ||
                                                   peek(1) == '-');
        pos_ += exponent ? 2 : 1;
      } else {
        break;
      }
    }
    emit(TokenKind::kNumber, begin);
  }

  void scan_string(std::size_t begin) {
    char quote = peek();
    bool triple = peek(1) == quote && peek(2) == quote;
    std::size_t qlen = triple ? 3 : 1;
    int start_line = line_;
    std::size_t start_line_begin = line_begin_;
    pos_ += qlen;
    while (true) {
      if (pos_ >= src_.size()) {
        line_ = start_line;
        line_begin_ = start_line_begin;
        throw LexError(span_at(begin, src_.size()),
                       "unterminated string literal");
      }
      char c = peek();
      if (c == '\\') {
        if (peek(1) == '\n') {
          pos_ += 2;
          pending_lines_.push_back(pos_);
        } else {
          pos_ += 2;
        }
        continue;
      }
      if (c == '\n' || c == '\r') {
        if (!triple) {
          line_ = start_line;
          line_begin_ = start_line_begin;
          throw LexError(span_at(begin, pos_), "unterminated string literal");
        }
        if (c == '\r' && peek(1) == '\n') ++pos_;
        ++pos_;
        pending_lines_.push_back(pos_);
        continue;
      }
      if (c == quote &&
          (!triple || (peek(1) == quote && peek(2) == quote))) {
        pos_ += qlen;
        break;
      }
      ++pos_;
    }
    emit(TokenKind::kString, begin);
    for (std::size_t next : pending_lines_) new_line(next);
    pending_lines_.clear();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_begin_ = 0;
  int depth_ = 0;
  bool at_line_start_ = true;
  bool line_has_code_ = false;
  std::vector<int> indents_{0};
  std::vector<std::size_t> pending_lines_;
  std::string trivia_;
  std::vector<Token> tokens_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kName: return "name";
    case TokenKind::kNumber: return "number";
    case TokenKind::kString: return "string";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kNewline: return "newline";
    case TokenKind::kIndent: return "indent";
    case TokenKind::kDedent: return "dedent";
    case TokenKind::kComment: return "comment";
    case TokenKind::kEof: return "eof";
  }
  return "?";
}

bool is_python_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

StringParts split_string_lexeme(std::string_view lexeme) {
  StringParts parts;
  std::size_t i = 0;
  while (i < lexeme.size() && lexeme[i] != '\'' && lexeme[i] != '"') ++i;
  parts.prefix = std::string(lexeme.substr(0, i));
  std::size_t qlen = 1;
  if (lexeme.size() >= i + 6 && lexeme[i + 1] == lexeme[i] &&
      lexeme[i + 2] == lexeme[i]) {
    qlen = 3;
  }
  parts.quote = std::string(lexeme.substr(i, qlen));
  if (lexeme.size() >= i + 2 * qlen) {
    parts.body = std::string(lexeme.substr(i + qlen, lexeme.size() - i - 2 * qlen));
  }
  return parts;
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace kchlint
