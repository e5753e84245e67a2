#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitring/certificate.hpp"
#include "splitring/element.hpp"
#include "splitring/tower.hpp"

namespace splitring {

// Element of the localized ring, written as a fraction: a numerator from the
// adjunction tower over a denominator that is a unit of the localized ring
// (rational times unit primes). Two fractions are equal iff cross-multiplied
// numerator values agree exactly. Numerators usually carry their
// factorization certificate; quotients produced by division steps are the
// exception (a fresh seed variable has no certified factorization).
class LocalElement {
 public:
  LocalElement() = default;  // zero

  static LocalElement zero() { return LocalElement(); }
  static LocalElement from_certificate(const Certificate& numerator,
                                       const Certificate& denominator = {});
  static LocalElement from_element(const Element& numerator,
                                   const Certificate& denominator = {});

  bool is_zero() const { return num_value_.is_zero(); }
  const Element& numerator_value() const { return num_value_; }
  const std::optional<Certificate>& numerator() const { return num_cert_; }
  const Certificate& denominator() const { return den_; }
  bool certified() const { return is_zero() || num_cert_.has_value(); }

  // "(<numerator>) / (<denominator>)", certificates in their text form,
  // uncertified numerators in canonical element form, zero as "0".
  std::string text() const;

  friend bool operator==(const LocalElement& x, const LocalElement& y) {
    return x.num_value_ * y.den_.value() == y.num_value_ * x.den_.value();
  }

 private:
  Element num_value_;
  std::optional<Certificate> num_cert_;
  Certificate den_;  // unit of the localized ring
};

// Euclidean size of a certified nonzero local element: the sum of squared
// stable exponents of the numerator certificate. Unit primes, rational units
// and the denominator contribute nothing.
long phi(const LocalElement& x);

enum class DivisionCase {
  Exact = 1,          // divisor cofactor is a unit of the localized ring
  UnitAdjunction = 2, // squarefree cofactor: a fresh seed makes r a unit-associate of g
  SplitAdjunction = 3 // repeated stable factor: a fresh split pair absorbs r
};

struct DivisionStep {
  LocalElement dividend;
  LocalElement divisor;
  DivisionCase kind = DivisionCase::Exact;
  LocalElement quotient;
  LocalElement remainder;
  long phi_divisor = 0;
  std::optional<long> phi_remainder;  // absent when the remainder is zero
};

struct DivisionTrace {
  std::vector<DivisionStep> steps;

  // Deterministic text table: step | case | phi(b) | phi(r) | q | r.
  std::string table() const;
  std::vector<int> case_pattern() const;
};

// One Euclidean division: a = q*b + r exactly (as fractions), with r == 0 or
// phi(r) < phi(b). May adjoin a fresh seed (case 2) or a fresh split pair
// (case 3) to the tower. Inputs must be certified; b nonzero.
DivisionStep div_step(Tower& tower, const LocalElement& a,
                      const LocalElement& b);

// Iterates (a, b) <- (b, r) until the remainder vanishes. The trace never
// exceeds three steps and the last nonzero remainder is an associate of the
// certificate gcd of the inputs.
DivisionTrace euclid_run(Tower& tower, const LocalElement& a,
                         const LocalElement& b);

// The two fresh stable primes dividing v*t - q*p^2, where t is the stage
// variable just above the stable prime p. Whatever candidate quotient q is
// proposed for dividing v*t by p^2, the remainder acquires at least two
// stable prime factors; `value` is that remainder and
// cofactor * first * second == value exactly.
struct DivisorWitness {
  PrimeHandle first;
  PrimeHandle second;
  Certificate cofactor;
  Element value;
};

// Supported class: rank(v), rank(numerator of q) at most rank(p); v a unit
// of the localized ring (unit primes and rationals only). Common unit primes
// of v and q's numerator are divided out first. errc::unsupported_shape when
// outside this class.
DivisorWitness stable_divisor_witness(Tower& tower, const PrimeHandle& p,
                                      const Certificate& v,
                                      const LocalElement& q);

// Plain-text demonstration that no multiplicative norm can satisfy the
// Euclidean condition at p^2 for the given candidate quotients: each witness
// exhibits two stable primes inside the would-be remainder, and the
// multiplicativity chain contradicts the required strict descent. Unsupported
// candidates are listed as skipped with the reason. Deterministic output.
std::string norm_refutation_report(
    Tower& tower, const PrimeHandle& p,
    const std::vector<std::pair<LocalElement, Certificate>>& candidates);

}  // namespace splitring
