#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "splitring/indet.hpp"

namespace splitring {

// Power product of generators, stored as (id, exponent) pairs in ascending
// canonical generator order with all exponents nonzero. Ring elements only
// ever hold positive exponents; the Laurent layer reuses the container with
// signed exponents on Split generators.
class Monomial {
 public:
  using Factor = std::pair<IndetId, int>;

  Monomial() = default;  // the empty product

  static Monomial one() { return Monomial(); }
  static Monomial of(const IndetId& id, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int size() const { return static_cast<int>(factors_.size()); }

  int degree() const;  // sum of exponents (may be negative in Laurent use)
  int exponent(const IndetId& id) const;
  bool contains(const IndetId& id) const { return exponent(id) != 0; }
  int max_stage() const;  // 0 for the empty product

  // exponent of the split generator minus exponent of its conjugate
  int grade(const SplitKey& key) const;

  bool has_negative_exponent() const;
  bool all_positive() const { return !has_negative_exponent(); }

  Monomial times(const Monomial& other) const;
  Monomial times(const IndetId& id, int exponent) const;
  // exponent-wise difference; nullopt if any exponent would go negative
  std::optional<Monomial> exact_quotient(const Monomial& divisor) const;
  bool divides(const Monomial& multiple) const;
  Monomial pow(int exponent) const;

  // Conjugate pairs present: splits whose generator and conjugate both occur
  // with positive exponent, highest split first. Empty means normal form.
  std::vector<SplitKey> conjugate_pairs() const;
  // The Split-kind generator of `key` as it occurs here (carries the payload).
  std::optional<IndetId> generator_of(const SplitKey& key) const;

  // Canonical order: total degree, then per-split grades compared over the
  // splits present in either monomial in descending split order, then an
  // exponent-wise tiebreak walking generators from the highest down. This is
  // a genuine monomial order (degree-graded, translation invariant) and it is
  // what "descending term order" means everywhere in this library.
  static std::strong_ordering compare(const Monomial& x, const Monomial& y);

  // Plain degree-then-lex order used by the free-ring division loop, where
  // all exponents are nonnegative.
  static std::strong_ordering compare_graded_lex(const Monomial& x,
                                                 const Monomial& y);

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.factors_ == y.factors_;
  }

 private:
  std::vector<Factor> factors_;
};

// Comparator: descending canonical order, for term maps.
struct MonomialDescending {
  bool operator()(const Monomial& x, const Monomial& y) const {
    return Monomial::compare(x, y) == std::strong_ordering::greater;
  }
};

}  // namespace splitring
