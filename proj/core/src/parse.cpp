#include "finring/parse.hpp"

#include <cctype>
#include <charconv>

namespace finring {

namespace {

struct Token {
  enum class Kind { ident, number, lparen, rparen, lbrace, rbrace, comma, at_path, end };
  Kind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Kind::end, {}, start};
    char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; return {Token::Kind::lparen, text_.substr(start, 1), start};
      case ')': ++pos_; return {Token::Kind::rparen, text_.substr(start, 1), start};
      case '{': ++pos_; return {Token::Kind::lbrace, text_.substr(start, 1), start};
      case '}': ++pos_; return {Token::Kind::rbrace, text_.substr(start, 1), start};
      case ',': ++pos_; return {Token::Kind::comma, text_.substr(start, 1), start};
      case '@': {
        ++pos_;
        std::size_t p = pos_;
        while (p < text_.size()) {
          char ch = text_[p];
          if (ch == ' ' || ch == '\t' || ch == ',' || ch == '(' || ch == ')' ||
              ch == '{' || ch == '}') {
            break;
          }
          ++p;
        }
        Token t{Token::Kind::at_path, text_.substr(pos_, p - pos_), start};
        pos_ = p;
        return t;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t p = pos_;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      Token t{Token::Kind::number, text_.substr(pos_, p - pos_), start};
      pos_ = p;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t p = pos_;
      while (p < text_.size() && std::isalnum(static_cast<unsigned char>(text_[p]))) ++p;
      Token t{Token::Kind::ident, text_.substr(pos_, p - pos_), start};
      pos_ = p;
      return t;
    }
    return {Token::Kind::ident, text_.substr(start, 1), start};  // rejected by parser
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ConstructionAst parse() {
    ConstructionAst ast = parse_expr();
    expect_end();
    return ast;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = tok_.kind == Token::Kind::end
                            ? "end of input"
                            : "'" + std::string(tok_.text) + "'";
    throw ParseError(tok_.offset, std::move(expected), found);
  }

  void expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) fail({what});
    advance();
  }

  void expect_end() {
    if (tok_.kind != Token::Kind::end) fail({"end of input"});
  }

  std::size_t parse_int() {
    if (tok_.kind != Token::Kind::number) fail({"integer"});
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), v);
    if (ec != std::errc() || p != tok_.text.data() + tok_.text.size()) fail({"integer"});
    advance();
    return v;
  }

  // "M2" -> ('M', 2); empty suffix when no digits follow.
  static bool split_letter_int(std::string_view s, char letter, std::size_t& out) {
    if (s.size() < 2 || s[0] != letter) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    out = 0;
    std::from_chars(s.data() + 1, s.data() + s.size(), out);
    return true;
  }

  ConstructionAst parse_expr() {
    if (tok_.kind != Token::Kind::ident) {
      fail({"ring expression"});
    }
    std::string_view id = tok_.text;
    std::size_t num = 0;
    using Kind = ConstructionAst::Kind;

    if (id == "prod") {
      advance();
      expect(Token::Kind::lparen, "'('");
      ConstructionAst ast;
      ast.kind = Kind::product;
      ast.children.push_back(parse_expr());
      while (tok_.kind == Token::Kind::comma) {
        advance();
        ast.children.push_back(parse_expr());
      }
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    if (id == "quot") {
      advance();
      expect(Token::Kind::lparen, "'('");
      ConstructionAst ast;
      ast.kind = Kind::quotient;
      ast.children.push_back(parse_expr());
      expect(Token::Kind::comma, "','");
      expect(Token::Kind::lbrace, "'{'");
      if (tok_.kind != Token::Kind::rbrace) {
        ast.generators.push_back(parse_int());
        while (tok_.kind == Token::Kind::comma) {
          advance();
          ast.generators.push_back(parse_int());
        }
      }
      expect(Token::Kind::rbrace, "'}'");
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    if (id == "corner") {
      advance();
      expect(Token::Kind::lparen, "'('");
      ConstructionAst ast;
      ast.kind = Kind::corner;
      ast.children.push_back(parse_expr());
      expect(Token::Kind::comma, "','");
      ast.number = parse_int();
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    if (id == "GR") {
      advance();
      expect(Token::Kind::lparen, "'('");
      ConstructionAst ast;
      ast.kind = Kind::group_ring;
      ast.children.push_back(parse_expr());
      expect(Token::Kind::comma, "','");
      ast.group_name = parse_group();
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    if (id == "K") {
      advance();
      expect(Token::Kind::lparen, "'('");
      ConstructionAst ast;
      ast.kind = Kind::gen_matrix;
      ast.children.push_back(parse_expr());
      expect(Token::Kind::comma, "','");
      ast.number = parse_int();
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    if (split_letter_int(id, 'Z', num)) {
      advance();
      ConstructionAst ast;
      ast.kind = Kind::zn;
      ast.number = num;
      return ast;
    }
    if (split_letter_int(id, 'M', num) || split_letter_int(id, 'T', num)) {
      ConstructionAst ast;
      ast.kind = id[0] == 'M' ? Kind::matrix : Kind::triangular;
      ast.number = num;
      advance();
      expect(Token::Kind::lparen, "'('");
      ast.children.push_back(parse_expr());
      expect(Token::Kind::rparen, "')'");
      return ast;
    }
    fail({"ring expression (Zn, Mk(...), Tk(...), K(...), prod(...), quot(...), "
          "corner(...), GR(...))"});
  }

  std::string parse_group() {
    if (tok_.kind == Token::Kind::at_path) {
      std::string name = "@" + std::string(tok_.text);
      advance();
      return name;
    }
    if (tok_.kind == Token::Kind::ident) {
      std::string_view id = tok_.text;
      std::size_t num = 0;
      bool ok = id == "C2xC2" || id == "S3" || id == "D4" || id == "Q8" ||
                split_letter_int(id, 'C', num);
      if (ok) {
        std::string name(id);
        advance();
        return name;
      }
    }
    fail({"group (Cn, C2xC2, S3, D4, Q8, @file)"});
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

ConstructionAst parse_ring_expr(std::string_view text) {
  return Parser(text).parse();
}

std::vector<std::string> parse_catalog_text(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    std::string_view line = text.substr(start, eol == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : eol - start);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    while (!line.empty() &&
           (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (!line.empty()) out.emplace_back(line);
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  return out;
}

BuiltRing build_from_expr(std::string_view text) {
  return eval_ast(parse_ring_expr(text));
}

}  // namespace finring
