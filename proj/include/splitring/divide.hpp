#pragma once

#include <optional>
#include <vector>

#include "splitring/element.hpp"

namespace splitring {

// Exact division in the ring: the unique q with q * d == x when x is
// divisible by d, nullopt otherwise. Routed through the split-Laurent
// embedding, where the generators are free and exact division is ordinary;
// the candidate quotient is then pulled back through the membership test.
// Sound and complete: a nullopt really means no quotient exists in the ring.
// errc::zero_divisor when d is zero.
std::optional<Element> try_divide(const Element& x, const Element& d);

// Largest k with p^k dividing x. x must be nonzero (errc::zero_element);
// p must be neither zero nor a constant (errc::zero_or_constant).
int valuation(const Element& x, const Element& p);

// x written as a finite sum of coefficients times powers of one generator,
// the coefficients free of that generator and of its conjugate. For split
// generators the powers follow the integer grading, so they may be negative:
// power -k stands for the conjugate to the k-th. coefficients[i] multiplies
// power (min_power + i); zero gaps are present as zero elements.
struct CoefficientSplit {
  IndetId var;
  int min_power = 0;
  std::vector<Element> coefficients;

  Element reassemble() const;  // exact inverse of the decomposition
};

// Requires stage(var) >= rank(x) (errc::rank_too_low), so the coefficients
// live strictly below the generator's stage and the decomposition is the
// module decomposition over the previous ring.
CoefficientSplit coefficients_in(const Element& x, const IndetId& var);

}  // namespace splitring
