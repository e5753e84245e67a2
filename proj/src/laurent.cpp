#include "splitring/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parse_detail.hpp"
#include "splitring/errors.hpp"

namespace splitring {

namespace {

void check_budget(std::size_t terms) {
  if (static_cast<long>(terms) > static_cast<long>(max_terms_limit()))
    fail(errc::expansion_limit,
         "term count exceeded the limit of " +
             std::to_string(max_terms_limit()));
}

bool monomial_in_extension(const Monomial& m) {
  for (const auto& [id, exp] : m.factors()) {
    if (id.kind() == IndetKind::SplitConj) return false;
    if (id.kind() != IndetKind::Split && exp < 0) return false;
  }
  return true;
}

}  // namespace

LaurentElement LaurentElement::constant(const Rational& c) {
  LaurentElement out;
  if (c != 0) out.terms_.push_back({c, Monomial::one()});
  return out;
}

LaurentElement LaurentElement::indet_power(const IndetId& id, int exponent) {
  if (exponent == 0) return one();
  if (id.kind() == IndetKind::Split)
    return term(Rational(1), Monomial::of(id, exponent));
  if (exponent < 0)
    fail(errc::invalid_argument,
         "only split generators are invertible in the Laurent extension");
  if (id.kind() == IndetKind::SplitConj)
    return to_laurent(Element::indet(id, exponent));
  return term(Rational(1), Monomial::of(id, exponent));
}

LaurentElement LaurentElement::term(const Rational& c, const Monomial& m) {
  if (!monomial_in_extension(m))
    fail(errc::invalid_argument, "monomial outside the Laurent extension");
  LaurentElement out;
  if (c != 0) out.terms_.push_back({c, m});
  return out;
}

LaurentElement LaurentElement::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, MonomialDescending> merged;
  for (auto& [c, m] : terms) {
    if (c == 0) continue;
    if (!monomial_in_extension(m))
      fail(errc::invalid_argument, "monomial outside the Laurent extension");
    auto [it, inserted] = merged.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) merged.erase(it);
    }
  }
  check_budget(merged.size());
  LaurentElement out;
  out.terms_.reserve(merged.size());
  for (auto& [m, c] : merged) out.terms_.push_back({c, m});
  return out;
}

bool LaurentElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].second.is_one());
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement out = *this;
  for (auto& [c, m] : out.terms_) c = -c;
  return out;
}

LaurentElement LaurentElement::scaled(const Rational& c) const {
  if (c == 0) return zero();
  LaurentElement out = *this;
  for (auto& [coeff, m] : out.terms_) coeff *= c;
  return out;
}

LaurentElement LaurentElement::pow(int exponent) const {
  if (exponent < 0)
    fail(errc::invalid_argument, "negative power of a Laurent element");
  LaurentElement acc = one();
  LaurentElement base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return acc;
}

LaurentElement operator+(const LaurentElement& x, const LaurentElement& y) {
  std::vector<LaurentElement::Term> terms = x.terms_;
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return LaurentElement::from_terms(std::move(terms));
}

LaurentElement operator-(const LaurentElement& x, const LaurentElement& y) {
  return x + (-y);
}

LaurentElement operator*(const LaurentElement& x, const LaurentElement& y) {
  std::map<Monomial, Rational, MonomialDescending> merged;
  for (const auto& [cx, mx] : x.terms_) {
    for (const auto& [cy, my] : y.terms_) {
      Monomial m = mx.times(my);
      Rational c = cx * cy;
      auto [it, inserted] = merged.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) merged.erase(it);
      }
    }
    check_budget(merged.size());
  }
  LaurentElement out;
  out.terms_.reserve(merged.size());
  for (auto& [m, c] : merged) out.terms_.push_back({c, m});
  return out;
}

LaurentElement to_laurent(const Element& x) {
  LaurentElement acc;
  for (const auto& [coeff, mono] : x.terms()) {
    LaurentElement piece = LaurentElement::constant(coeff);
    Monomial direct;
    for (const auto& [id, exp] : mono.factors()) {
      if (id.kind() == IndetKind::SplitConj) {
        // conjugate = prime * generator^-1
        piece = piece * to_laurent(id.payload()).pow(exp);
        direct = direct.times(id.conjugate(), -exp);
      } else {
        direct = direct.times(id, exp);
      }
    }
    acc = acc + piece * LaurentElement::term(Rational(1), direct);
  }
  return acc;
}

std::optional<LaurentElement> laurent_divide(const LaurentElement& x,
                                             const LaurentElement& d) {
  if (d.is_zero()) fail(errc::zero_divisor, "Laurent division by zero");
  if (x.is_zero()) return LaurentElement::zero();

  // Per-variable minimum exponents over each operand (a term without the
  // variable counts as exponent zero).
  std::map<IndetId, std::pair<int, int>> mins;  // id -> (min in x, min in d)
  for (const auto& [c, m] : x.terms())
    for (const auto& [id, exp] : m.factors())
      mins.emplace(id, std::pair{0, 0});
  for (const auto& [c, m] : d.terms())
    for (const auto& [id, exp] : m.factors())
      mins.emplace(id, std::pair{0, 0});
  for (auto& [id, mm] : mins) {
    mm.first = x.terms().front().second.exponent(id);
    for (const auto& [c, m] : x.terms())
      mm.first = std::min(mm.first, m.exponent(id));
    mm.second = d.terms().front().second.exponent(id);
    for (const auto& [c, m] : d.terms())
      mm.second = std::min(mm.second, m.exponent(id));
  }

  Monomial shift_x;
  Monomial shift_d;
  Monomial shift_q;
  for (const auto& [id, mm] : mins) {
    shift_x = shift_x.times(id, -mm.first);
    shift_d = shift_d.times(id, -mm.second);
    shift_q = shift_q.times(id, mm.first - mm.second);
  }

  struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return Monomial::compare_graded_lex(a, b) == std::strong_ordering::greater;
    }
  };

  std::map<Monomial, Rational, GradedLexDescending> remainder;
  for (const auto& [c, m] : x.terms()) remainder.emplace(m.times(shift_x), c);

  std::vector<LaurentElement::Term> divisor;
  divisor.reserve(d.terms().size());
  for (const auto& [c, m] : d.terms()) divisor.push_back({c, m.times(shift_d)});
  std::size_t lead = 0;
  for (std::size_t i = 1; i < divisor.size(); ++i)
    if (Monomial::compare_graded_lex(divisor[i].second,
                                     divisor[lead].second) ==
        std::strong_ordering::greater)
      lead = i;
  const Monomial& dlm = divisor[lead].second;
  const Rational& dlc = divisor[lead].first;

  std::map<Monomial, Rational, GradedLexDescending> quotient;
  long steps = 0;
  while (!remainder.empty()) {
    if (++steps > 1000000)
      fail(errc::expansion_limit, "division step budget exceeded");
    const auto& [ltm, ltc] = *remainder.begin();
    std::optional<Monomial> qm = ltm.exact_quotient(dlm);
    if (!qm) return std::nullopt;
    Rational qc = ltc / dlc;
    quotient.emplace(*qm, qc);
    for (const auto& [c, m] : divisor) {
      Monomial key = m.times(*qm);
      auto [it, inserted] = remainder.emplace(std::move(key), Rational(0));
      it->second -= qc * c;
      if (it->second == 0) remainder.erase(it);
    }
    check_budget(remainder.size());
  }

  std::vector<LaurentElement::Term> out;
  out.reserve(quotient.size());
  for (auto& [m, c] : quotient) {
    Monomial shifted = m.times(shift_q);
    if (!monomial_in_extension(shifted)) return std::nullopt;
    out.push_back({c, std::move(shifted)});
  }
  return LaurentElement::from_terms(std::move(out));
}

std::optional<Element> from_laurent(const LaurentElement& x) {
  if (x.is_zero()) return Element::zero();

  // The highest split generator carrying a negative exponent anywhere.
  std::optional<IndetId> worst;
  for (const auto& [c, m] : x.terms())
    for (const auto& [id, exp] : m.factors())
      if (id.kind() == IndetKind::Split && exp < 0)
        if (!worst || *worst < id) worst = id;

  if (!worst) return Element::from_terms(x.terms());

  std::map<int, std::vector<LaurentElement::Term>> buckets;
  std::vector<LaurentElement::Term> rest;
  for (const auto& [c, m] : x.terms()) {
    int e = m.exponent(*worst);
    if (e < 0)
      buckets[e].push_back({c, m.times(*worst, -e)});
    else
      rest.push_back({c, m});
  }

  std::optional<Element> out =
      from_laurent(LaurentElement::from_terms(std::move(rest)));
  if (!out) return std::nullopt;

  LaurentElement prime = to_laurent(worst->payload());
  IndetId conj = worst->conjugate();
  for (auto& [e, terms] : buckets) {
    LaurentElement coefficient =
        LaurentElement::from_terms(std::move(terms));
    std::optional<LaurentElement> q = laurent_divide(coefficient, prime.pow(-e));
    if (!q) return std::nullopt;
    std::optional<Element> sub = from_laurent(*q);
    if (!sub) return std::nullopt;
    out = *out + *sub * Element::indet(conj, -e);
  }
  return out;
}

std::string laurent_encode(const LaurentElement& x) {
  if (x.is_zero()) return "{0}";
  std::string out = "{";
  bool first = true;
  for (const auto& [coeff, mono] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += rational_to_text(coeff);
    for (const auto& [id, exp] : mono.factors()) {
      out += '*';
      out += id.text();
      out += '^';
      out += std::to_string(exp);
    }
  }
  out += '}';
  return out;
}

namespace {

struct LaurentAlgebra {
  using Value = LaurentElement;
  static Value constant(const Rational& c) {
    return LaurentElement::constant(c);
  }
  static Value from_element(const Element& e) { return to_laurent(e); }
  static Value indet_power(const IndetId& id, long exp, std::size_t pos) {
    if (exp < 0 && id.kind() != IndetKind::Split)
      fail(errc::parse_error,
           "negative exponents apply to split generators only, at offset " +
               std::to_string(pos));
    return LaurentElement::indet_power(id, static_cast<int>(exp));
  }
  static Value add(const Value& x, const Value& y) { return x + y; }
  static Value sub(const Value& x, const Value& y) { return x - y; }
  static Value mul(const Value& x, const Value& y) { return x * y; }
  static Value neg(const Value& x) { return -x; }
  static Value pow(const Value& x, long exp, std::size_t pos) {
    if (exp < 0)
      fail(errc::parse_error,
           "negative exponents apply to split generators only, at offset " +
               std::to_string(pos));
    return x.pow(static_cast<int>(exp));
  }
};

}  // namespace

LaurentElement parse_laurent(std::string_view src, const Tower& tower,
                             const ElementResolver& resolver) {
  detail::Lexer lex(src);
  detail::Parser<LaurentAlgebra> parser(lex, tower, resolver);
  LaurentElement value = parser.expr();
  if (!lex.at_end())
    fail(errc::parse_error, "unexpected trailing input at offset " +
                                std::to_string(lex.peek().pos));
  return value;
}

}  // namespace splitring
