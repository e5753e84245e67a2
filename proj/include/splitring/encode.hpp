#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "splitring/element.hpp"

namespace splitring {

class Tower;

// Canonical element text. This grammar is the persistence and registry-key
// format and is bit-exact:
//
//   rational := ["-"] digits ["/" digits]
//   indet    := "t" stage | "s[" stage ";" elem "]" | "s'[" stage ";" elem "]"
//             | "u[" stage ";" elem ";" elem "]"
//   factor   := indet "^" exponent          (exponent >= 1, always printed)
//   monomial := factor ("*" factor)*        (ascending generator order)
//   term     := rational ["*" monomial]     (coefficient always printed)
//   elem     := "{" term (" + " term)* "}"  (descending term order)
//
// Zero is "{0}". encode(parse(s)) == s for every canonical string s.
std::string canonical_encode(const Element& e);

// Resolves bare identifiers in expressions (CLI bindings). Returning nullopt
// means "unknown name".
using ElementResolver =
    std::function<std::optional<Element>(std::string_view)>;

// Parses the relaxed expression grammar, a superset of the canonical form:
// +, binary and unary -, * (or juxtaposition), ^ with exponent >= 0,
// parentheses, braces, rationals, generator literals, resolver names.
// Generator literals must reference generators registered in `tower`
// (errc::unknown_indeterminate otherwise); stage variables t<k> need no
// registration. Evaluation goes through ring operations, so results are
// always in canonical normal form.
Element parse_element(std::string_view src, const Tower& tower,
                      const ElementResolver& resolver = {});

}  // namespace splitring
