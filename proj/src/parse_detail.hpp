#pragma once

// Internal: lexer and recursive-descent expression parser shared by the
// element, Laurent, certificate and handle readers. The parser is generic
// over an algebra so the same grammar builds either ring elements or Laurent
// elements; generator payloads are always parsed as ring elements.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "splitring/element.hpp"
#include "splitring/encode.hpp"
#include "splitring/errors.hpp"
#include "splitring/handle.hpp"
#include "splitring/indet.hpp"
#include "splitring/rational.hpp"
#include "splitring/tower.hpp"

namespace splitring::detail {

constexpr long kMaxExponent = 1000000;

struct Token {
  enum class Kind { End, Number, Ident, Punct };
  Kind kind = Kind::End;
  std::string text;  // Number / Ident
  char punct = 0;    // Punct
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  bool at_end() const { return cur_.kind == Token::Kind::End; }

  bool at_punct(char c) const {
    return cur_.kind == Token::Kind::Punct && cur_.punct == c;
  }

  void expect_punct(char c) {
    if (!at_punct(c))
      fail(errc::parse_error, std::string("expected '") + c + "' at offset " +
                                  std::to_string(cur_.pos));
    advance();
  }

 private:
  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  static bool is_alpha(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }
  static bool is_word(char c) {
    return is_digit(c) || is_alpha(c) || c == '_';
  }

  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])) != 0)
      ++pos_;
    cur_ = Token{};
    cur_.pos = pos_;
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          is_digit(src_[pos_ + 1])) {
        ++pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
      cur_.kind = Token::Kind::Number;
      cur_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (is_alpha(c)) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() && is_word(src_[pos_])) ++pos_;
      if (pos_ - start == 1 && src_[start] == 's' && pos_ < src_.size() &&
          src_[pos_] == '\'')
        ++pos_;  // the conjugate marker: s'
      cur_.kind = Token::Kind::Ident;
      cur_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '^':
      case '(':
      case ')':
      case '{':
      case '}':
      case '[':
      case ']':
      case ';':
        cur_.kind = Token::Kind::Punct;
        cur_.punct = c;
        ++pos_;
        return;
      default:
        fail(errc::parse_error, "unexpected character '" + std::string(1, c) +
                                    "' at offset " + std::to_string(pos_));
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

inline long parse_integer(Lexer& lex, long max_abs) {
  bool negative = false;
  if (lex.at_punct('-')) {
    lex.take();
    negative = true;
  } else if (lex.at_punct('+')) {
    lex.take();
  }
  const Token& t = lex.peek();
  if (t.kind != Token::Kind::Number ||
      t.text.find('/') != std::string::npos)
    fail(errc::parse_error,
         "expected an integer at offset " + std::to_string(t.pos));
  if (t.text.size() > 9)
    fail(errc::parse_error,
         "integer too large at offset " + std::to_string(t.pos));
  long value = std::stol(lex.take().text);
  if (value > max_abs)
    fail(errc::parse_error, "exponent magnitude exceeds " +
                                std::to_string(max_abs));
  return negative ? -value : value;
}

struct ElementAlgebra {
  using Value = Element;
  static Value constant(const Rational& c) { return Element::constant(c); }
  static Value from_element(const Element& e) { return e; }
  static Value indet_power(const IndetId& id, long exp, std::size_t pos) {
    if (exp < 0)
      fail(errc::parse_error,
           "negative exponent at offset " + std::to_string(pos));
    return Element::indet(id, static_cast<int>(exp));
  }
  static Value add(const Value& x, const Value& y) { return x + y; }
  static Value sub(const Value& x, const Value& y) { return x - y; }
  static Value mul(const Value& x, const Value& y) { return x * y; }
  static Value neg(const Value& x) { return -x; }
  static Value pow(const Value& x, long exp, std::size_t pos) {
    if (exp < 0)
      fail(errc::parse_error,
           "negative exponent at offset " + std::to_string(pos));
    return x.pow(static_cast<int>(exp));
  }
};

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(Lexer& lex, const Tower& tower, const ElementResolver& resolver)
      : lex_(lex), tower_(tower), resolver_(resolver) {}

  Value expr() {
    Value acc = term();
    while (lex_.at_punct('+') || lex_.at_punct('-')) {
      char op = lex_.take().punct;
      Value rhs = term();
      acc = op == '+' ? Algebra::add(acc, rhs) : Algebra::sub(acc, rhs);
    }
    return acc;
  }

 private:
  struct Base {
    enum class Kind { Rat, Indet, Val };
    Kind kind = Kind::Val;
    Rational rat;
    std::optional<IndetId> id;
    std::optional<Value> value;
    std::size_t pos = 0;
  };

  bool starts_factor() const {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident)
      return true;
    return t.kind == Token::Kind::Punct && (t.punct == '(' || t.punct == '{');
  }

  Value term() {
    bool negate = false;
    while (lex_.at_punct('-')) {
      lex_.take();
      negate = !negate;
    }
    Value acc = factor();
    for (;;) {
      if (lex_.at_punct('*')) {
        lex_.take();
        acc = Algebra::mul(acc, factor());
      } else if (starts_factor()) {
        acc = Algebra::mul(acc, factor());
      } else {
        break;
      }
    }
    return negate ? Algebra::neg(acc) : acc;
  }

  Value factor() {
    Base base = primary();
    bool has_exp = false;
    long exp = 1;
    if (lex_.at_punct('^')) {
      lex_.take();
      exp = parse_integer(lex_, kMaxExponent);
      has_exp = true;
    }
    switch (base.kind) {
      case Base::Kind::Rat: {
        if (!has_exp) return Algebra::constant(base.rat);
        if (exp >= 0) return Algebra::constant(rational_pow(base.rat, static_cast<int>(exp)));
        if (base.rat == 0)
          fail(errc::parse_error, "zero to a negative power at offset " +
                                      std::to_string(base.pos));
        return Algebra::constant(
            Rational(1) / rational_pow(base.rat, static_cast<int>(-exp)));
      }
      case Base::Kind::Indet:
        return Algebra::indet_power(*base.id, exp, base.pos);
      case Base::Kind::Val:
        if (!has_exp) return *std::move(base.value);
        return Algebra::pow(*base.value, exp, base.pos);
    }
    fail(errc::parse_error, "unreachable");
  }

  Base primary() {
    const Token& t = lex_.peek();
    std::size_t pos = t.pos;
    if (t.kind == Token::Kind::Number) {
      Base b;
      b.kind = Base::Kind::Rat;
      b.pos = pos;
      b.rat = rational_from_text(lex_.take().text);
      return b;
    }
    if (t.kind == Token::Kind::Punct && (t.punct == '(' || t.punct == '{')) {
      char open = lex_.take().punct;
      Value inner = expr();
      lex_.expect_punct(open == '(' ? ')' : '}');
      Base b;
      b.kind = Base::Kind::Val;
      b.value = std::move(inner);
      b.pos = pos;
      return b;
    }
    if (t.kind == Token::Kind::Ident) {
      std::string name = lex_.take().text;
      if (name.size() >= 2 && name[0] == 't' &&
          std::all_of(name.begin() + 1, name.end(),
                      [](char c) { return is_digit(c); })) {
        if (name.size() > 7)
          fail(errc::parse_error,
               "stage out of range at offset " + std::to_string(pos));
        Base b;
        b.kind = Base::Kind::Indet;
        b.id = IndetId::stage_var(std::stoi(name.substr(1)));
        b.pos = pos;
        return b;
      }
      if ((name == "s" || name == "s'" || name == "u") && lex_.at_punct('[')) {
        Base b;
        b.kind = Base::Kind::Indet;
        b.id = generator_literal(name, pos);
        b.pos = pos;
        return b;
      }
      if (resolver_) {
        if (std::optional<Element> bound = resolver_(name)) {
          Base b;
          b.kind = Base::Kind::Val;
          b.value = Algebra::from_element(*bound);
          b.pos = pos;
          return b;
        }
      }
      fail(errc::unknown_indeterminate,
           "unknown name '" + name + "' at offset " + std::to_string(pos));
    }
    fail(errc::parse_error,
         "expected an expression at offset " + std::to_string(pos));
  }

  IndetId generator_literal(const std::string& head, std::size_t pos) {
    lex_.expect_punct('[');
    long stage = parse_integer(lex_, kMaxExponent);
    lex_.expect_punct(';');
    Element first = payload();
    if (head == "u") {
      lex_.expect_punct(';');
      Element second = payload();
      lex_.expect_punct(']');
      const UnitSeedRecord* rec =
          tower_.find_unit_seed(static_cast<int>(stage),
                                canonical_encode(first),
                                canonical_encode(second));
      if (!rec)
        fail(errc::unknown_indeterminate,
             "unregistered unit seed at offset " + std::to_string(pos));
      return rec->seed;
    }
    lex_.expect_punct(']');
    const SplitRecord* rec = tower_.find_split(canonical_encode(first));
    if (!rec || rec->key.stage != stage)
      fail(errc::unknown_indeterminate,
           "unregistered split at offset " + std::to_string(pos));
    return head == "s" ? rec->gen : rec->conj;
  }

  Element payload() {
    Parser<ElementAlgebra> sub(lex_, tower_, resolver_);
    return sub.expr();
  }

  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  Lexer& lex_;
  const Tower& tower_;
  const ElementResolver& resolver_;
};

// Reads one prime-handle literal: a split-generator literal or
// w[stage;{a};{b}] for the unit prime of the pair (a, b).
inline PrimeHandle parse_handle_tokens(Lexer& lex, const Tower& tower) {
  const Token& t = lex.peek();
  if (t.kind != Token::Kind::Ident)
    fail(errc::parse_error,
         "expected a prime handle at offset " + std::to_string(t.pos));
  std::size_t pos = t.pos;
  std::string head = lex.take().text;
  if (head != "s" && head != "s'" && head != "w")
    fail(errc::parse_error,
         "expected a prime handle at offset " + std::to_string(pos));
  lex.expect_punct('[');
  long stage = parse_integer(lex, kMaxExponent);
  lex.expect_punct(';');
  ElementResolver none;
  Parser<ElementAlgebra> sub(lex, tower, none);
  Element first = sub.expr();
  if (head == "w") {
    lex.expect_punct(';');
    Element second = sub.expr();
    lex.expect_punct(']');
    const UnitSeedRecord* rec = tower.find_unit_seed(
        static_cast<int>(stage), canonical_encode(first),
        canonical_encode(second));
    if (!rec)
      fail(errc::unknown_handle,
           "no unit prime for this pair at offset " + std::to_string(pos));
    return PrimeHandle::unit_prime(rec->seed);
  }
  lex.expect_punct(']');
  const SplitRecord* rec = tower.find_split(canonical_encode(first));
  if (!rec || rec->key.stage != stage)
    fail(errc::unknown_handle,
         "no split for this prime at offset " + std::to_string(pos));
  return PrimeHandle::stable(head == "s" ? rec->gen : rec->conj);
}

}  // namespace splitring::detail
