#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plift/error.hpp"

namespace plift::detail {

enum class Tok { Ident, Int, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier, digits, punctuation, or decoded string
  int line = 1;
  int column = 1;
};

/// Shared tokenizer for the constraint and presence-condition languages.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool is(std::string_view punct_or_keyword) const {
    return (current_.kind == Tok::Punct || current_.kind == Tok::Ident) &&
           current_.text == punct_or_keyword;
  }

  bool accept(std::string_view punct_or_keyword) {
    if (!is(punct_or_keyword)) return false;
    advance();
    return true;
  }

  Token expect(std::string_view punct_or_keyword) {
    if (!is(punct_or_keyword)) fail({"'" + std::string(punct_or_keyword) + "'"});
    return next();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = current_.kind == Tok::End ? "end of input"
                                                  : "'" + current_.text + "'";
    throw SyntaxError("unexpected " + found, current_.line, current_.column,
                      std::move(expected));
  }

private:
  void advance();
  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }
  void bump();

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

}  // namespace plift::detail
