#pragma once

#include <compare>
#include <string>

#include "splitring/element.hpp"
#include "splitring/indet.hpp"

namespace splitring {

// Reference to one prime of the eventual localized ring, up to associates.
// Stable handles are split generators (either half of a conjugate pair);
// unit-prime handles stand for a - u*b where u is the unit seed adjoined for
// the pair (a, b). Unit primes become units after localization, stable
// handles stay prime forever.
class PrimeHandle {
 public:
  enum class Kind { Stable = 0, UnitPrime = 1 };

  static PrimeHandle stable(const IndetId& generator);  // Split/SplitConj
  static PrimeHandle unit_prime(const IndetId& seed);   // UnitSeed

  Kind kind() const { return kind_; }
  const IndetId& id() const { return id_; }
  int stage() const { return id_.stage(); }
  bool is_stable() const { return kind_ == Kind::Stable; }

  // The prime itself: the generator, or a - u*b. Exact, recomputed on call.
  Element value() const;

  // Stable: the generator literal. Unit prime: w[stage;{a};{b}].
  std::string text() const;

  friend bool operator==(const PrimeHandle& x, const PrimeHandle& y) {
    return x.kind_ == y.kind_ && x.id_ == y.id_;
  }
  friend std::strong_ordering operator<=>(const PrimeHandle& x,
                                          const PrimeHandle& y) {
    if (auto c = static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_);
        c != 0)
      return c;
    return x.id_ <=> y.id_;
  }

 private:
  PrimeHandle(Kind kind, IndetId id) : kind_(kind), id_(std::move(id)) {}

  Kind kind_;
  IndetId id_;
};

}  // namespace splitring
