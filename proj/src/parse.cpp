#include "braidkit/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view s, SourcePos at) {
  std::vector<Token> out;
  int line = at.line;
  int col = at.column;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int c = col;
    if (s.substr(i, 3) == "(x)") {
      out.push_back({Tok::Tensor, "(x)", l, c});
      advance(3);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, c});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, c});
      advance(j - i);
    } else {
      Tok k;
      switch (ch) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + ch + "'", l, c);
      }
      out.push_back({k, std::string(1, ch), l, c});
      advance(1);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const Alphabet& scalar_alphabet() {
  static const Alphabet empty("scalar", {});
  return empty;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& signature) : toks_(std::move(tokens)), sig_(signature) {}

  NcElement parse_all() {
    NcElement e = sum();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw ParseError(kind, msg, peek().line, peek().column);
  }

  // sum := [+|-] tensor_term ((+|-) tensor_term)*
  NcElement sum() {
    NcElement total(sig_);
    bool negate = false;
    if (accept(Tok::Minus)) {
      negate = true;
    } else {
      accept(Tok::Plus);
    }
    for (;;) {
      NcElement t = tensor_term();
      if (negate) {
        total -= t;
      } else {
        total += t;
      }
      if (accept(Tok::Plus)) {
        negate = false;
      } else if (accept(Tok::Minus)) {
        negate = true;
      } else {
        break;
      }
    }
    return total;
  }

  // tensor_term := slot_product ((x) slot_product)*
  NcElement tensor_term() {
    const Token& start = peek();
    std::vector<NcElement> factors;
    factors.push_back(slot_product(slot_alphabet(0, start)));
    while (peek().kind == Tok::Tensor) {
      const Token& sep = next();
      factors.push_back(slot_product(slot_alphabet(factors.size(), sep)));
    }
    if (factors.size() == 1 && sig_.size() > 1) {
      // A bare scalar stands for scalar * 1(x)...(x)1.
      const NcElement& f = factors.front();
      for (const auto& [w, c] : f.terms()) {
        if (!w[0].empty()) {
          throw ParseError(ErrorKind::SignatureMismatch,
                           "expected " + std::to_string(sig_.size()) + " tensor slots, found 1", start.line,
                           start.column);
        }
      }
      return NcElement::scalar(sig_, f.constant());
    }
    if (factors.size() != sig_.size()) {
      throw ParseError(ErrorKind::SignatureMismatch,
                       "expected " + std::to_string(sig_.size()) + " tensor slots, found " +
                           std::to_string(factors.size()),
                       start.line, start.column);
    }
    NcElement out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    return out;
  }

  const Alphabet& slot_alphabet(std::size_t slot, const Token& at) const {
    if (slot >= sig_.size()) {
      throw ParseError(ErrorKind::SignatureMismatch,
                       "too many tensor slots (expected " + std::to_string(sig_.size()) + ")", at.line, at.column);
    }
    return *sig_[slot];
  }

  // slot_product := unary (* unary)*
  NcElement slot_product(const Alphabet& a) {
    NcElement e = unary(a);
    while (accept(Tok::Star)) e = tensor_mul(e, unary(a));
    return e;
  }

  NcElement unary(const Alphabet& a) {
    if (accept(Tok::Minus)) return -unary(a);
    return power(a);
  }

  int exponent() {
    bool paren = accept(Tok::LParen);
    bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected exponent");
    int n = std::stoi(next().text);
    if (paren) expect(Tok::RParen, "')'");
    return negative ? -n : n;
  }

  NcElement power(const Alphabet& a) {
    const Signature one{&a};
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      mpq_class value(t.text);
      if (accept(Tok::Slash)) {
        if (peek().kind != Tok::Number) fail("expected denominator");
        mpq_class den(next().text);
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      return NcElement::scalar(one, Scalar(value));
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "q") {
        int e = 1;
        if (accept(Tok::Caret)) e = exponent();
        return NcElement::scalar(one, Scalar::q(e));
      }
      auto id = a.find(t.text);
      if (!id) {
        throw ParseError(ErrorKind::UnknownGenerator, "'" + t.text + "' is not a generator of " + a.name(), t.line,
                         t.column);
      }
      int e = 1;
      if (accept(Tok::Caret)) {
        e = exponent();
        if (e < 0) fail("negative power of a generator");
      }
      return NcElement::term(one, {Word(static_cast<std::size_t>(e), *id)});
    }
    if (accept(Tok::LParen)) {
      Signature saved = sig_;
      sig_ = one;
      NcElement inner = sum();
      sig_ = std::move(saved);
      expect(Tok::RParen, "')'");
      if (accept(Tok::Caret)) {
        int e = exponent();
        if (e < 0) fail("negative power of a parenthesized expression");
        NcElement p = NcElement::one(one);
        for (int k = 0; k < e; ++k) p = tensor_mul(p, inner);
        return p;
      }
      return inner;
    }
    fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
};

}  // namespace

NcElement parse_element(std::string_view text, const Signature& signature, SourcePos at) {
  for (const Alphabet* a : signature) {
    if (a->find("q")) throw Error(ErrorKind::SyntaxError, "generator name 'q' is reserved");
  }
  Parser p(lex(text, at), signature);
  return p.parse_all();
}

Scalar parse_scalar(std::string_view text, SourcePos at) {
  const Signature sig{&scalar_alphabet()};
  NcElement e = parse_element(text, sig, at);
  return e.constant();
}

}  // namespace braidkit
