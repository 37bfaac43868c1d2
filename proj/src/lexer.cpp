#include "uamasp/lexer.hpp"

#include <cctype>

namespace uamasp {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Variable: return "variable";
    case TokenKind::Anonymous: return "'_'";
    case TokenKind::Integer: return "integer";
    case TokenKind::DotDot: return "'..'";
    case TokenKind::If: return "':-'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Period: return "'.'";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Eq: return "'='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::Ne: return "'!='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Not: return "'not'";
    case TokenKind::Count: return "'#count'";
    case TokenKind::Show: return "'#show'";
  }
  return "token";
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (at_end()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t len, SourcePos start) {
    std::string lexeme(src_.substr(i_, len));
    for (std::size_t k = 0; k < len; ++k) advance();
    return Token{kind, std::move(lexeme), start};
  }

  Token next() {
    const SourcePos start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 0;
      while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
      return make(TokenKind::Integer, len, start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (is_name_char(peek(len))) ++len;
      const std::string_view word = src_.substr(i_, len);
      TokenKind kind = TokenKind::Identifier;
      if (c == '_') {
        kind = TokenKind::Anonymous;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        kind = TokenKind::Variable;
      } else if (word == "not") {
        kind = TokenKind::Not;
      }
      return make(kind, len, start);
    }
    if (c == '#') {
      std::size_t len = 1;
      while (is_name_char(peek(len))) ++len;
      const std::string_view word = src_.substr(i_, len);
      if (word == "#count") return make(TokenKind::Count, len, start);
      if (word == "#show") return make(TokenKind::Show, len, start);
      throw LexError("unknown directive '" + std::string(word) + "'", start);
    }
    switch (c) {
      case '.':
        return peek(1) == '.' ? make(TokenKind::DotDot, 2, start) : make(TokenKind::Period, 1, start);
      case ':':
        return peek(1) == '-' ? make(TokenKind::If, 2, start) : make(TokenKind::Colon, 1, start);
      case ';': return make(TokenKind::Semicolon, 1, start);
      case '{': return make(TokenKind::LBrace, 1, start);
      case '}': return make(TokenKind::RBrace, 1, start);
      case '(': return make(TokenKind::LParen, 1, start);
      case ')': return make(TokenKind::RParen, 1, start);
      case ',': return make(TokenKind::Comma, 1, start);
      case '<':
        return peek(1) == '=' ? make(TokenKind::Le, 2, start) : make(TokenKind::Lt, 1, start);
      case '>':
        return peek(1) == '=' ? make(TokenKind::Ge, 2, start) : make(TokenKind::Gt, 1, start);
      case '=':
        return peek(1) == '=' ? make(TokenKind::EqEq, 2, start) : make(TokenKind::Eq, 1, start);
      case '!':
        if (peek(1) == '=') return make(TokenKind::Ne, 2, start);
        break;
      case '+': return make(TokenKind::Plus, 1, start);
      case '-': return make(TokenKind::Minus, 1, start);
      case '*': return make(TokenKind::Star, 1, start);
      case '/': return make(TokenKind::Slash, 1, start);
      default:
        break;
    }
    throw LexError("unexpected character '" + std::string(1, c) + "'", start);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace uamasp
