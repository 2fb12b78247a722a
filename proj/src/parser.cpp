#include "iterwb/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace iterwb {
namespace {

enum class Tok { ident, literal, lambda, colon, dot, arrow, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::literal: return "word literal";
    case Tok::lambda: return "'\\'";
    case Tok::colon: return "':'";
    case Tok::dot: return "'.'";
    case Tok::arrow: return "'->'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      char ch = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          id += advance();
        }
        out.push_back({Tok::ident, id, line, col});
      } else if (ch == '\'') {
        advance();
        std::string bits;
        while (pos_ < src_.size() && src_[pos_] != '\'') {
          char b = src_[pos_];
          if (b != '0' && b != '1') {
            throw ParseError(std::string("invalid symbol '") + b +
                                 "' in word literal",
                             line_, col_);
          }
          bits += advance();
        }
        if (pos_ >= src_.size()) {
          throw ParseError("unterminated word literal", line, col);
        }
        advance();
        out.push_back({Tok::literal, bits, line, col});
      } else if (ch == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::arrow, "->", line, col});
      } else {
        Tok kind;
        switch (ch) {
          case '\\': kind = Tok::lambda; break;
          case ':': kind = Tok::colon; break;
          case '.': kind = Tok::dot; break;
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          default:
            throw ParseError(std::string("unexpected character '") + ch + "'",
                             line, col);
        }
        advance();
        out.push_back({kind, std::string(1, ch), line, col});
      }
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const TypeContext& free)
      : toks_(std::move(toks)), free_(free) {}

  Term parse_all() {
    Term t = term();
    expect(Tok::end);
    return t;
  }

  Type parse_type_all() {
    Type t = type();
    expect(Tok::end);
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok kind) const { return cur().kind == kind; }

  Token expect(Tok kind) {
    if (!at(kind)) {
      throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                           describe(cur().kind),
                       cur().line, cur().column);
    }
    return toks_[pos_++];
  }

  Type type() {
    Type left = type_atom();
    if (at(Tok::arrow)) {
      ++pos_;
      return Type::arrow(std::move(left), type());
    }
    return left;
  }

  Type type_atom() {
    if (at(Tok::lparen)) {
      ++pos_;
      Type t = type();
      expect(Tok::rparen);
      return t;
    }
    Token tok = expect(Tok::ident);
    if (tok.text != "W") {
      throw ParseError("unknown type '" + tok.text + "'", tok.line, tok.column);
    }
    return Type::word();
  }

  Term term() {
    if (at(Tok::lambda)) return abstraction();
    Term t = atom();
    while (starts_atom() || at(Tok::lambda)) {
      if (at(Tok::lambda)) return Term::app(std::move(t), abstraction());
      t = Term::app(std::move(t), atom());
    }
    return t;
  }

  bool starts_atom() const {
    return at(Tok::ident) || at(Tok::literal) || at(Tok::lparen);
  }

  Term abstraction() {
    expect(Tok::lambda);
    Token name = expect(Tok::ident);
    if (name.text == "W" || lookup_constant(name.text)) {
      throw ParseError("cannot bind reserved name '" + name.text + "'",
                       name.line, name.column);
    }
    expect(Tok::colon);
    Type ty = type();
    expect(Tok::dot);
    scope_.emplace_back(name.text, ty);
    Term body = term();
    scope_.pop_back();
    return Term::abs(name.text, std::move(ty), std::move(body));
  }

  Term atom() {
    if (at(Tok::lparen)) {
      ++pos_;
      Term t = term();
      expect(Tok::rparen);
      return t;
    }
    if (at(Tok::literal)) return Term::lit(from_bits(toks_[pos_++].text));
    Token tok = expect(Tok::ident);
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == tok.text) return Term::var(tok.text, it->second);
    }
    if (auto c = lookup_constant(tok.text)) return Term::constant(*c);
    if (auto it = free_.find(tok.text); it != free_.end()) {
      return Term::var(tok.text, it->second);
    }
    if (tok.text.rfind("iterk", 0) == 0 || tok.text.rfind("jterk", 0) == 0) {
      throw ParseError("unknown constant '" + tok.text +
                           "' (expected a decimal budget suffix)",
                       tok.line, tok.column);
    }
    throw ParseError("unbound variable '" + tok.text +
                         "' without type annotation",
                     tok.line, tok.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const TypeContext& free_;
  std::vector<std::pair<std::string, Type>> scope_;
};

}  // namespace

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

Term parse(std::string_view text, const TypeContext& free) {
  return Parser(Lexer(text).run(), free).parse_all();
}

Type parse_type(std::string_view text) {
  TypeContext none;
  return Parser(Lexer(text).run(), none).parse_type_all();
}

}  // namespace iterwb
