#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "splitring/monomial.hpp"
#include "splitring/rational.hpp"

namespace splitring {

// Term-count guard for products and sums. Exceeding the limit raises
// errc::expansion_limit instead of grinding on. Thread local.
int max_terms_limit();
void set_max_terms_limit(int limit);

// Products eliminate conjugate pairs (split * conjugate -> defining prime)
// until no monomial contains both halves of a pair. The default schedule is
// deterministic: highest split first, whole pairs at once. The randomized
// schedule picks elimination sites at random; since the rewrite system is
// confluent the result is identical, and tests assert exactly that.
struct RewriteSchedule {
  static void use_deterministic();
  static void use_randomized(std::uint64_t seed);
  static bool randomized();
};

// RAII helper so tests can flip schedule/limit without leaking state.
class ScheduleGuard {
 public:
  ScheduleGuard();
  ~ScheduleGuard();
  ScheduleGuard(const ScheduleGuard&) = delete;
  ScheduleGuard& operator=(const ScheduleGuard&) = delete;

 private:
  bool was_randomized_;
  int limit_;
};

// An exact element of the iterated-adjunction ring: a finite sum of terms
// (coefficient, monomial) kept in canonical normal form. Normal form means:
// no zero coefficients, no monomial with both halves of a conjugate pair,
// terms sorted in descending canonical monomial order. Elements are immutable
// values; all operations are pure.
class Element {
 public:
  using Term = std::pair<Rational, Monomial>;

  Element() = default;  // zero

  static Element zero() { return Element(); }
  static Element one() { return constant(Rational(1)); }
  static Element constant(const Rational& c);
  static Element indet(const IndetId& id, int exponent = 1);
  // Single term; `m` must already be free of conjugate pairs.
  static Element term(const Rational& c, const Monomial& m);
  // Terms may repeat monomials (they are merged) but must be pair-free.
  static Element from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Units of the polynomial stages are exactly the nonzero constants.
  bool is_unit() const { return is_constant() && !is_zero(); }
  const Rational& constant_value() const;  // pre: is_constant and nonzero

  int term_count() const { return static_cast<int>(terms_.size()); }
  // Descending canonical monomial order.
  const std::vector<Term>& terms() const { return terms_; }

  const Rational& leading_coefficient() const;  // pre: nonzero
  const Monomial& leading_monomial() const;     // pre: nonzero
  Element monic() const;                        // pre: nonzero

  // Highest stage of any generator occurring; 0 for constants and zero.
  int rank() const;

  Element operator-() const;
  Element scaled(const Rational& c) const;
  Element pow(int exponent) const;  // exponent >= 0

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);

  // Decomposition by the integer grading of one split: maps grade to the sum
  // of terms with that grade. Empty map iff zero.
  std::map<int, Element> grade_decompose(const SplitKey& key) const;
  // Max grade minus min grade; throws errc::zero_element at 0.
  int spread(const SplitKey& key) const;
  std::pair<int, int> grade_range(const SplitKey& key) const;  // pre: nonzero

  friend bool operator==(const Element& x, const Element& y) {
    return x.terms_ == y.terms_;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace splitring
