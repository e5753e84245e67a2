#pragma once

#include <map>
#include <string>
#include <string_view>

#include "splitring/handle.hpp"
#include "splitring/rational.hpp"

namespace splitring {

class Tower;

// A factored value: nonzero rational unit times a product of registered
// primes with positive exponents. Certificates are how divisibility-aware
// algorithms see elements; the product is exact and can always be expanded
// back to an Element.
class Certificate {
 public:
  Certificate() : unit_(1) {}  // the certificate of 1

  static Certificate unit(const Rational& u);
  static Certificate prime(const PrimeHandle& h, int exponent = 1);

  const Rational& unit_part() const { return unit_; }
  const std::map<PrimeHandle, int>& factors() const { return factors_; }

  int exponent(const PrimeHandle& h) const;
  bool is_rational_only() const { return factors_.empty(); }
  // Unit of the localized ring: no stable factor (unit primes are allowed).
  bool is_unit_in_ring() const;
  bool stable_squarefree() const;  // every stable exponent <= 1
  int max_handle_stage() const;    // 0 when rational-only
  int stable_factor_count() const;

  Element value() const;  // exact expansion

  // "<rational>" or "<rational> * <handle>^<e> * ..." in handle order.
  std::string text() const;

  Certificate with_unit(const Rational& u) const;  // replaces the unit
  Certificate times_unit(const Rational& u) const;
  Certificate times(const PrimeHandle& h, int exponent) const;

  friend Certificate operator*(const Certificate& x, const Certificate& y);
  friend bool operator==(const Certificate& x, const Certificate& y) {
    return x.unit_ == y.unit_ && x.factors_ == y.factors_;
  }

 private:
  Rational unit_;
  std::map<PrimeHandle, int> factors_;
};

// Exponent-wise minimum over both stable and unit-prime handles, unit 1.
Certificate cert_gcd(const Certificate& x, const Certificate& y);

// Exponent-wise difference c / g; errc::not_subcertificate if g does not
// divide c handle-wise.
Certificate cert_cofactor(const Certificate& c, const Certificate& g);

// The Euclidean size: sum of squared exponents of the *stable* factors.
// Unit primes and the rational unit contribute nothing.
long phi(const Certificate& c);

bool verify_certificate(const Certificate& c, const Element& claimed);

// Parses the text() format. Handles must be registered in `tower`.
Certificate parse_certificate(std::string_view src, const Tower& tower);

}  // namespace splitring
