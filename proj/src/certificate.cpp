#include "splitring/certificate.hpp"

#include <algorithm>
#include <string>

#include "parse_detail.hpp"
#include "splitring/errors.hpp"
#include "splitring/tower.hpp"

namespace splitring {

Certificate Certificate::unit(const Rational& u) {
  if (u == 0) fail(errc::zero_argument, "certificate unit must be nonzero");
  Certificate c;
  c.unit_ = u;
  return c;
}

Certificate Certificate::prime(const PrimeHandle& h, int exponent) {
  if (exponent <= 0)
    fail(errc::invalid_argument, "prime exponent must be positive");
  Certificate c;
  c.factors_.emplace(h, exponent);
  return c;
}

int Certificate::exponent(const PrimeHandle& h) const {
  auto it = factors_.find(h);
  return it == factors_.end() ? 0 : it->second;
}

bool Certificate::is_unit_in_ring() const {
  for (const auto& [h, e] : factors_)
    if (h.is_stable()) return false;
  return true;
}

bool Certificate::stable_squarefree() const {
  for (const auto& [h, e] : factors_)
    if (h.is_stable() && e > 1) return false;
  return true;
}

int Certificate::max_handle_stage() const {
  int best = 0;
  for (const auto& [h, e] : factors_) best = std::max(best, h.stage());
  return best;
}

int Certificate::stable_factor_count() const {
  int count = 0;
  for (const auto& [h, e] : factors_)
    if (h.is_stable()) ++count;
  return count;
}

Element Certificate::value() const {
  Element v = Element::constant(unit_);
  for (const auto& [h, e] : factors_) v = v * h.value().pow(e);
  return v;
}

std::string Certificate::text() const {
  std::string out = rational_to_text(unit_);
  for (const auto& [h, e] : factors_) {
    out += " * ";
    out += h.text();
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

Certificate Certificate::with_unit(const Rational& u) const {
  if (u == 0) fail(errc::zero_argument, "certificate unit must be nonzero");
  Certificate c = *this;
  c.unit_ = u;
  return c;
}

Certificate Certificate::times_unit(const Rational& u) const {
  if (u == 0) fail(errc::zero_argument, "certificate unit must be nonzero");
  Certificate c = *this;
  c.unit_ *= u;
  return c;
}

Certificate Certificate::times(const PrimeHandle& h, int exponent) const {
  Certificate c = *this;
  auto [it, inserted] = c.factors_.emplace(h, 0);
  it->second += exponent;
  if (it->second < 0)
    fail(errc::invalid_argument, "prime exponent driven negative");
  if (it->second == 0) c.factors_.erase(it);
  return c;
}

Certificate operator*(const Certificate& x, const Certificate& y) {
  Certificate out = x;
  out.unit_ *= y.unit_;
  for (const auto& [h, e] : y.factors_) {
    auto [it, inserted] = out.factors_.emplace(h, 0);
    it->second += e;
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

Certificate cert_gcd(const Certificate& x, const Certificate& y) {
  Certificate out;
  for (const auto& [h, e] : x.factors()) {
    int shared = std::min(e, y.exponent(h));
    if (shared > 0) out = out.times(h, shared);
  }
  return out;
}

Certificate cert_cofactor(const Certificate& c, const Certificate& g) {
  Certificate out = c;
  for (const auto& [h, e] : g.factors()) {
    if (out.exponent(h) < e)
      fail(errc::not_subcertificate,
           "cofactor would need a negative power of " + h.text());
    out = out.times(h, -e);
  }
  return out.with_unit(c.unit_part() / g.unit_part());
}

long phi(const Certificate& c) {
  long total = 0;
  for (const auto& [h, e] : c.factors())
    if (h.is_stable()) total += static_cast<long>(e) * e;
  return total;
}

bool verify_certificate(const Certificate& c, const Element& claimed) {
  return c.value() == claimed;
}

Certificate parse_certificate(std::string_view src, const Tower& tower) {
  detail::Lexer lex(src);
  Certificate acc;
  Rational unit(1);
  for (;;) {
    if (lex.peek().kind == detail::Token::Kind::Number || lex.at_punct('-')) {
      bool negative = false;
      while (lex.at_punct('-')) {
        lex.take();
        negative = !negative;
      }
      if (lex.peek().kind != detail::Token::Kind::Number)
        fail(errc::parse_error, "expected a rational at offset " +
                                    std::to_string(lex.peek().pos));
      Rational r = rational_from_text(lex.take().text);
      unit *= negative ? Rational(-r) : r;
    } else if (lex.peek().kind == detail::Token::Kind::Ident) {
      PrimeHandle h = detail::parse_handle_tokens(lex, tower);
      long exp = 1;
      if (lex.at_punct('^')) {
        lex.take();
        exp = detail::parse_integer(lex, detail::kMaxExponent);
        if (exp <= 0)
          fail(errc::parse_error, "handle exponents must be positive");
      }
      acc = acc.times(h, static_cast<int>(exp));
    } else {
      fail(errc::parse_error, "expected a certificate factor at offset " +
                                  std::to_string(lex.peek().pos));
    }
    if (lex.at_punct('*')) {
      lex.take();
      continue;
    }
    break;
  }
  if (!lex.at_end())
    fail(errc::parse_error, "unexpected trailing input at offset " +
                                std::to_string(lex.peek().pos));
  if (unit == 0) fail(errc::zero_argument, "certificate unit must be nonzero");
  return acc.with_unit(unit);
}

}  // namespace splitring
