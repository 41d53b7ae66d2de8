#include "moyal/text.hpp"

#include <cctype>
#include <sstream>

#include "moyal/error.hpp"

namespace moyal {

std::string render(const Rational& r) { return r.str(); }

std::string render(GenId gen) {
  return std::string(1, family_char(gen.family)) + std::to_string(gen.index);
}

namespace {

std::string atom_str(const Atom& a) {
  if (a.is_integral())
    return "Dxi^" + std::to_string(a.depth()) + "(" + render(a.body()) + ")";
  std::string s = render(a.gen_id());
  if (a.y_order() > 0)
    s += "^(" + std::to_string(a.x_order()) + ";" + std::to_string(a.y_order()) + ")";
  else if (a.x_order() > 0)
    s += "^(" + std::to_string(a.x_order()) + ")";
  return s;
}

/// Body of |m| without its sign.
std::string mono_body(const Monomial& m) {
  std::string out;
  Rational c = m.coeff.abs();
  if (!c.is_one() || (m.eps == 0 && m.atoms.empty())) out = c.str();
  if (m.eps != 0) {
    if (!out.empty()) out += "*";
    out += "e";
    if (m.eps != 1) out += "^" + std::to_string(m.eps);
  }
  for (const auto& a : m.atoms) {
    if (!out.empty()) out += "*";
    out += atom_str(a);
  }
  return out;
}

struct Piece {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].negative ? "-" : "";
    else
      out += pieces[i].negative ? " - " : " + ";
    out += pieces[i].body;
  }
  return out;
}

std::string p_str(int exponent) {
  return exponent == 1 ? "p" : "p^" + std::to_string(exponent);
}

}  // namespace

std::string render(const Monomial& m) {
  return (m.coeff.is_negative() ? "-" : "") + mono_body(m);
}

std::string render(const DiffPoly& p) {
  std::vector<Piece> pieces;
  pieces.reserve(p.terms().size());
  for (const auto& m : p.terms())
    pieces.push_back({m.coeff.is_negative(), mono_body(m)});
  return join(pieces);
}

std::string render(const PSymbol& f) {
  std::vector<Piece> pieces;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    const int e = it->first;
    const DiffPoly& c = it->second;
    if (e == 0) {
      for (const auto& m : c.terms())
        pieces.push_back({m.coeff.is_negative(), mono_body(m)});
      continue;
    }
    if (c.terms().size() == 1) {
      const Monomial& m = c.terms()[0];
      std::string body = mono_body(m);
      if (body == "1")
        pieces.push_back({m.coeff.is_negative(), p_str(e)});
      else if (m.has_atoms())
        pieces.push_back({m.coeff.is_negative(), "(" + body + ")*" + p_str(e)});
      else
        pieces.push_back({m.coeff.is_negative(), body + "*" + p_str(e)});
    } else {
      pieces.push_back({false, "(" + render(c) + ")*" + p_str(e)});
    }
  }
  return join(pieces);
}

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, semi, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    current_.offset = pos_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::end, "", pos_};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
      }
      current_ = {Tok::number, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      current_ = {Tok::ident, src_.substr(start, pos_ - start), start};
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ';': kind = Tok::semi; break;
      default:
        throw ParseError(pos_, {"expression token"},
                         "unexpected character '" + std::string(1, c) +
                             "' at offset " + std::to_string(pos_));
    }
    current_ = {kind, std::string(1, c), pos_};
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token current_;
};

[[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
  std::string want;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) want += expected.size() == 2 ? " or " : ", ";
    want += expected[i];
  }
  std::string found = at.kind == Tok::end ? "end of input" : "'" + at.text + "'";
  throw ParseError(at.offset, std::move(expected),
                   "expected " + want + " at offset " +
                       std::to_string(at.offset) + ", found " + found);
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  PSymbol parse() {
    PSymbol v = expr();
    if (lex_.peek().kind != Tok::end)
      fail(lex_.peek(), {"'+'", "'-'", "'*'", "end of input"});
    return v;
  }

 private:
  PSymbol expr() {
    PSymbol v = term();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool minus = lex_.take().kind == Tok::minus;
      PSymbol r = term();
      v = minus ? v - r : v + r;
    }
    return v;
  }

  PSymbol term() {
    bool negative = false;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
      if (lex_.take().kind == Tok::minus) negative = !negative;
    PSymbol v = factor();
    while (lex_.peek().kind == Tok::star) {
      lex_.take();
      v = classical_mul(v, factor());
    }
    return negative ? -v : v;
  }

  static int checked_int(const Token& t) {
    try {
      long v = std::stol(t.text);
      if (v > 1000000) fail(t, {"smaller integer"});
      return static_cast<int>(v);
    } catch (const std::out_of_range&) {
      fail(t, {"smaller integer"});
    }
  }

  int signed_int() {
    bool neg = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      neg = true;
    }
    Token t = lex_.peek();
    if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
      fail(t, {"integer"});
    lex_.take();
    int v = checked_int(t);
    return neg ? -v : v;
  }

  int unsigned_int(const char* what) {
    Token t = lex_.peek();
    if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
      fail(t, {what});
    lex_.take();
    return checked_int(t);
  }

  void expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) fail(lex_.peek(), {what});
    lex_.take();
  }

  PSymbol factor() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::number: {
        lex_.take();
        return PSymbol::from_poly(DiffPoly::constant(Rational::parse(t.text)));
      }
      case Tok::lparen: {
        lex_.take();
        PSymbol v = expr();
        expect(Tok::rparen, "')'");
        return v;
      }
      case Tok::ident:
        return ident_factor();
      default:
        fail(t, {"number", "generator", "'e'", "'p'", "'Dxi'", "'('"});
    }
  }

  PSymbol ident_factor() {
    Token t = lex_.take();
    if (t.text == "p") {
      int e = 1;
      if (lex_.peek().kind == Tok::caret) {
        lex_.take();
        e = signed_int();
      }
      return PSymbol::p_power(e);
    }
    if (t.text == "e") {
      int k = 1;
      if (lex_.peek().kind == Tok::caret) {
        lex_.take();
        k = signed_int();
      }
      return PSymbol::from_poly(DiffPoly(Monomial{Rational(1), k, {}}));
    }
    if (t.text == "Dxi") {
      int depth = 1;
      if (lex_.peek().kind == Tok::caret) {
        lex_.take();
        depth = unsigned_int("integer");
        if (depth < 1)
          throw ParseError(t.offset, {"positive depth"},
                           "Dxi depth must be >= 1 at offset " +
                               std::to_string(t.offset));
      }
      expect(Tok::lparen, "'('");
      std::size_t body_at = lex_.peek().offset;
      PSymbol body = expr();
      expect(Tok::rparen, "')'");
      if (body.degree() && *body.degree() != 0)
        throw ParseError(body_at, {"p-free expression"},
                         "Dxi body must not contain p (offset " +
                             std::to_string(body_at) + ")");
      DiffPoly out = body.is_zero() ? DiffPoly::zero() : body.coeff(0);
      for (int i = 0; i < depth; ++i) out = integrate_x(out);
      return PSymbol::from_poly(std::move(out));
    }
    // Generator name: family letter + positive index.
    if ((t.text[0] == 'a' || t.text[0] == 'w' || t.text[0] == 'u') &&
        t.text.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(t.text[1]))) {
      for (std::size_t i = 1; i < t.text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
          fail(t, {"generator"});
      Family fam = t.text[0] == 'a'   ? Family::a
                   : t.text[0] == 'w' ? Family::w
                                      : Family::u;
      Token index_tok{Tok::number, t.text.substr(1), t.offset + 1};
      int index = checked_int(index_tok);
      if (index < 1) fail(t, {"generator with index >= 1"});
      int xo = 0, yo = 0;
      if (lex_.peek().kind == Tok::caret) {
        lex_.take();
        expect(Tok::lparen, "'('");
        xo = unsigned_int("derivative order");
        if (lex_.peek().kind == Tok::semi) {
          lex_.take();
          yo = unsigned_int("derivative order");
        }
        expect(Tok::rparen, "')'");
      }
      if (fam != Family::a && yo > 0)
        throw ParseError(t.offset, {"x-only generator"},
                         "omega/u generators carry no y-derivatives (offset " +
                             std::to_string(t.offset) + ")");
      return PSymbol::from_poly(DiffPoly::generator(fam, index, xo, yo));
    }
    fail(t, {"generator", "'e'", "'p'", "'Dxi'"});
  }

  Lexer lex_;
};

}  // namespace

PSymbol parse_symbol(const std::string& text) { return Parser(text).parse(); }

DiffPoly parse_poly(const std::string& text) {
  PSymbol s = parse_symbol(text);
  if (s.degree() && *s.degree() != 0)
    throw ParseError(0, {"p-free expression"},
                     "expression must not contain p");
  if (!s.coeffs().empty() && s.coeffs().begin()->first != 0)
    throw ParseError(0, {"p-free expression"},
                     "expression must not contain p");
  return s.is_zero() ? DiffPoly::zero() : s.coeff(0);
}

GenId parse_gen(const std::string& text) {
  if (text.size() >= 2 &&
      (text[0] == 'a' || text[0] == 'w' || text[0] == 'u')) {
    bool digits = true;
    for (std::size_t i = 1; i < text.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(text[i]));
    if (digits) {
      Family fam = text[0] == 'a'   ? Family::a
                   : text[0] == 'w' ? Family::w
                                    : Family::u;
      try {
        long v = std::stol(text.substr(1));
        if (v >= 1 && v <= 1000000) return {fam, static_cast<int>(v)};
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw ParseError(0, {"generator"}, "not a generator name: '" + text + "'");
}

}  // namespace moyal
