#include "polydec/parse.hpp"

#include <cctype>
#include <sstream>

namespace polydec {

PolyQ binomial_poly(const PolyQ& e, unsigned long k) {
  PolyQ acc(Rat(1));
  for (unsigned long i = 0; i < k; ++i)
    acc = acc * (e - PolyQ(Rat(static_cast<long>(i))));
  return acc / Rat(factorial(k));
}

PolyQ rising_factorial_poly(const PolyQ& e, unsigned long k) {
  PolyQ acc(Rat(1));
  for (unsigned long i = 0; i < k; ++i)
    acc = acc * (e + PolyQ(Rat(static_cast<long>(i))));
  return acc;
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int col;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_ = {Tok::End, "", col};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Tok::Int, s_.substr(start, pos_ - start), col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Tok::Ident, s_.substr(start, pos_ - start), col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Tok::Plus, "+", col}; return;
      case '-': tok_ = {Tok::Minus, "-", col}; return;
      case '*': tok_ = {Tok::Star, "*", col}; return;
      case '/': tok_ = {Tok::Slash, "/", col}; return;
      case '^': tok_ = {Tok::Caret, "^", col}; return;
      case '(': tok_ = {Tok::LParen, "(", col}; return;
      case ')': tok_ = {Tok::RParen, ")", col}; return;
      case ',': tok_ = {Tok::Comma, ",", col}; return;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", col);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const ParseOptions& opts)
      : lex_(text), opts_(opts) {}

  PolyQ run() {
    PolyQ p = parse_expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw parse_error("unexpected trailing input", t.col);
    return p;
  }

 private:
  PolyQ parse_expr() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      neg = true;
    } else if (lex_.peek().kind == Tok::Plus) {
      lex_.next();
    }
    PolyQ acc = parse_term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.next().kind == Tok::Minus;
      PolyQ t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Int || k == Tok::Ident || k == Tok::LParen;
  }

  PolyQ parse_term() {
    PolyQ acc = parse_factor();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.next();
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
          lex_.next();
          neg = true;
        }
        PolyQ f = parse_factor();
        acc = acc * (neg ? -f : f);
      } else if (starts_factor(k)) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  PolyQ parse_factor() {
    PolyQ base = parse_base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.next();
      unsigned long e = parse_uint("exponent");
      return poly_pow(base, e);
    }
    return base;
  }

  unsigned long parse_uint(const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Int)
      throw parse_error(std::string("expected nonnegative integer ") + what, t.col);
    Token tok = lex_.next();
    Int v(tok.text);
    if (v > opts_.exponent_cap)
      throw parse_error(std::string(what) + " exceeds cap " +
                            std::to_string(opts_.exponent_cap),
                        tok.col);
    return v.get_ui();
  }

  PolyQ parse_base() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Int: {
        Token num = lex_.next();
        Int n(num.text);
        if (lex_.peek().kind == Tok::Slash) {
          lex_.next();
          const Token& dt = lex_.peek();
          if (dt.kind != Tok::Int)
            throw parse_error("expected denominator", dt.col);
          Token den = lex_.next();
          Int d(den.text);
          if (d == 0) throw parse_error("zero denominator", den.col);
          Rat q(n, d);
          q.canonicalize();
          return PolyQ(q);
        }
        return PolyQ(Rat(n));
      }
      case Tok::Ident: {
        Token id = lex_.next();
        if (id.text == "x") return PolyQ::variable();
        if (id.text == "binomial" || id.text == "risingfactorial") {
          expect(Tok::LParen, "'('");
          PolyQ arg = parse_expr();
          expect(Tok::Comma, "','");
          unsigned long k = parse_uint("argument");
          expect(Tok::RParen, "')'");
          return id.text == "binomial" ? binomial_poly(arg, k)
                                       : rising_factorial_poly(arg, k);
        }
        throw parse_error("unknown identifier '" + id.text + "'", id.col);
      }
      case Tok::LParen: {
        lex_.next();
        PolyQ inner = parse_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw parse_error("expected a factor", t.col);
    }
  }

  void expect(Tok k, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != k)
      throw parse_error(std::string("expected ") + what, t.col);
    lex_.next();
  }

  Lexer lex_;
  ParseOptions opts_;
};

}  // namespace

PolyQ parse(const std::string& text, const ParseOptions& opts) {
  return Parser(text, opts).run();
}

std::string canonical_text(const PolyQ& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = f.degree(); e >= 0; --e) {
    Rat c = f.coeff(e);
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rat a = abs(c);
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "x";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace polydec
