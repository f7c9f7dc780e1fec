#include "lexer.hpp"

#include <array>
#include <cctype>

namespace plift::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

constexpr std::array<std::string_view, 6> kTwoChar = {"!=", "&&", "||",
                                                      "=>", "<=", ">="};

}  // namespace

void Lexer::bump() {
  if (at(pos_) == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void Lexer::advance() {
  for (;;) {
    while (std::isspace(static_cast<unsigned char>(at(pos_))) != 0) bump();
    if (at(pos_) == '#' || (at(pos_) == '/' && at(pos_ + 1) == '/')) {
      while (pos_ < text_.size() && at(pos_) != '\n') bump();
      continue;
    }
    break;
  }
  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= text_.size()) return;

  char c = at(pos_);
  if (ident_start(c)) {
    std::size_t start = pos_;
    while (ident_char(at(pos_))) bump();
    current_.kind = Tok::Ident;
    current_.text = std::string(text_.substr(start, pos_ - start));
    return;
  }
  if (digit(c) || (c == '-' && digit(at(pos_ + 1)))) {
    std::size_t start = pos_;
    bump();
    while (digit(at(pos_))) bump();
    current_.kind = Tok::Int;
    current_.text = std::string(text_.substr(start, pos_ - start));
    return;
  }
  if (c == '"') {
    bump();
    std::string value;
    for (;;) {
      if (pos_ >= text_.size())
        throw SyntaxError("unterminated string literal", current_.line,
                          current_.column, {"'\"'"});
      char ch = at(pos_);
      if (ch == '"') {
        bump();
        break;
      }
      if (ch == '\\') {
        bump();
        char esc = at(pos_);
        if (esc == 'n') value += '\n';
        else if (esc == 't') value += '\t';
        else if (esc == '"' || esc == '\\') value += esc;
        else
          throw SyntaxError("invalid escape in string literal", line_, column_,
                            {"'\\\"'", "'\\\\'", "'\\n'", "'\\t'"});
        bump();
        continue;
      }
      value += ch;
      bump();
    }
    current_.kind = Tok::String;
    current_.text = std::move(value);
    return;
  }
  for (auto two : kTwoChar) {
    if (text_.substr(pos_, 2) == two) {
      bump();
      bump();
      current_.kind = Tok::Punct;
      current_.text = std::string(two);
      return;
    }
  }
  static constexpr std::string_view kOneChar = ":.()!=<>,&|";
  if (kOneChar.find(c) != std::string_view::npos) {
    bump();
    current_.kind = Tok::Punct;
    current_.text = std::string(1, c);
    return;
  }
  throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_, {});
}

}  // namespace plift::detail
