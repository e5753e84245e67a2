#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitring/element.hpp"
#include "splitring/encode.hpp"

namespace splitring {

// Element of the split-Laurent extension the ring embeds into: split
// generators may carry exponents of either sign, conjugates never occur
// (each conjugate equals its defining prime times the inverse generator, and
// is eliminated on the way in), and stage / unit-seed exponents stay
// nonnegative. In this extension the generators are genuinely free, so exact
// division is ordinary multivariate polynomial division; that is what makes
// the embedding useful.
class LaurentElement {
 public:
  using Term = Element::Term;

  LaurentElement() = default;  // zero

  static LaurentElement zero() { return LaurentElement(); }
  static LaurentElement one() { return constant(Rational(1)); }
  static LaurentElement constant(const Rational& c);
  // Split generators accept any exponent; stage and unit-seed generators only
  // nonnegative ones; conjugates are converted via their defining relation
  // (nonnegative exponents only).
  static LaurentElement indet_power(const IndetId& id, int exponent);
  // `m` must satisfy the class invariant (no conjugates, stage and unit-seed
  // exponents nonnegative).
  static LaurentElement term(const Rational& c, const Monomial& m);
  static LaurentElement from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentElement operator-() const;
  LaurentElement scaled(const Rational& c) const;
  LaurentElement pow(int exponent) const;  // exponent >= 0

  friend LaurentElement operator+(const LaurentElement& x,
                                  const LaurentElement& y);
  friend LaurentElement operator-(const LaurentElement& x,
                                  const LaurentElement& y);
  friend LaurentElement operator*(const LaurentElement& x,
                                  const LaurentElement& y);

  friend bool operator==(const LaurentElement& x, const LaurentElement& y) {
    return x.terms_ == y.terms_;
  }

 private:
  std::vector<Term> terms_;  // descending canonical order, nonzero coeffs
};

// The embedding: injective ring homomorphism. Conjugate factors are replaced
// by (defining prime) * (generator)^-1, recursively through the payloads.
LaurentElement to_laurent(const Element& x);

// Exact division in the Laurent extension: the unique q with q * d == x, or
// nullopt when x is not divisible. Both operands are normalized to plain
// polynomials by per-variable exponent shifts, divided by leading-term
// elimination, and the quotient is shifted back; a quotient that would need a
// negative stage or unit-seed exponent is not in the extension and yields
// nullopt. errc::zero_divisor when d is zero.
std::optional<LaurentElement> laurent_divide(const LaurentElement& x,
                                             const LaurentElement& d);

// Membership: the unique preimage under to_laurent, or nullopt when x is not
// in the image of the ring. Negative split exponents are resolved from the
// highest split down; the coefficient of each negative power must be exactly
// divisible by the matching power of the defining prime.
std::optional<Element> from_laurent(const LaurentElement& x);

// Display form: same shape as the canonical element encoding but exponents
// may be negative. Not a registry key.
std::string laurent_encode(const LaurentElement& x);

// Parses the relaxed expression grammar in the Laurent extension: negative
// exponents are allowed on split generators only.
LaurentElement parse_laurent(std::string_view src, const Tower& tower,
                             const ElementResolver& resolver = {});

}  // namespace splitring
