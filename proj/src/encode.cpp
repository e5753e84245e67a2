#include "splitring/encode.hpp"

#include <string>

#include "parse_detail.hpp"
#include "splitring/errors.hpp"
#include "splitring/tower.hpp"

namespace splitring {

std::string canonical_encode(const Element& e) {
  if (e.is_zero()) return "{0}";
  std::string out = "{";
  bool first = true;
  for (const auto& [coeff, mono] : e.terms()) {
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

Element parse_element(std::string_view src, const Tower& tower,
                      const ElementResolver& resolver) {
  detail::Lexer lex(src);
  detail::Parser<detail::ElementAlgebra> parser(lex, tower, resolver);
  Element value = parser.expr();
  if (!lex.at_end())
    fail(errc::parse_error, "unexpected trailing input at offset " +
                                std::to_string(lex.peek().pos));
  return value;
}

PrimeHandle parse_handle(std::string_view src, const Tower& tower) {
  detail::Lexer lex(src);
  PrimeHandle handle = detail::parse_handle_tokens(lex, tower);
  if (!lex.at_end())
    fail(errc::parse_error, "unexpected trailing input at offset " +
                                std::to_string(lex.peek().pos));
  return handle;
}

}  // namespace splitring
