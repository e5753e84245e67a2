#include "splitring/divide.hpp"

#include <cassert>
#include <map>
#include <utility>
#include <vector>

#include "splitring/errors.hpp"
#include "splitring/laurent.hpp"

namespace splitring {

std::optional<Element> try_divide(const Element& x, const Element& d) {
  if (d.is_zero()) fail(errc::zero_divisor, "division by zero");
  if (x.is_zero()) return Element::zero();
  if (d.is_constant()) return x.scaled(Rational(1) / d.constant_value());
  std::optional<LaurentElement> lq = laurent_divide(to_laurent(x), to_laurent(d));
  if (!lq) return std::nullopt;
  std::optional<Element> q = from_laurent(*lq);
  if (!q) return std::nullopt;
  assert(*q * d == x);
  return q;
}

int valuation(const Element& x, const Element& p) {
  if (x.is_zero()) fail(errc::zero_element, "valuation of zero is undefined");
  if (p.is_zero() || p.is_constant())
    fail(errc::zero_or_constant, "valuation base must be a nonunit");
  int count = 0;
  Element current = x;
  while (std::optional<Element> q = try_divide(current, p)) {
    current = std::move(*q);
    ++count;
  }
  return count;
}

Element CoefficientSplit::reassemble() const {
  Element out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    int power = min_power + static_cast<int>(i);
    if (power >= 0)
      out = out + coefficients[i] * Element::indet(var, power);
    else
      out = out + coefficients[i] * Element::indet(var.conjugate(), -power);
  }
  return out;
}

CoefficientSplit coefficients_in(const Element& x, const IndetId& var) {
  if (var.stage() < x.rank())
    fail(errc::rank_too_low,
         "coefficients require a generator at or above the element's rank");
  CoefficientSplit out{var, 0, {}};

  // Bucket the terms by the power of `var` they represent. For split
  // generators the conjugate counts as a negative power; no term holds both
  // halves of the pair, so stripping the factor leaves the coefficient free
  // of the whole pair.
  const bool is_split = var.is_split_kind();
  const IndetId partner = is_split ? var.conjugate() : var;
  std::map<int, std::vector<Element::Term>> buckets;
  for (const auto& [c, m] : x.terms()) {
    int direct = m.exponent(var);
    int power = direct;
    Monomial stripped = m;
    if (direct != 0) {
      stripped = stripped.times(var, -direct);
    } else if (is_split) {
      int opposite = m.exponent(partner);
      power = -opposite;
      if (opposite != 0) stripped = stripped.times(partner, -opposite);
    }
    buckets[power].push_back({c, std::move(stripped)});
  }
  if (buckets.empty()) {
    out.min_power = 0;
    out.coefficients.push_back(Element::zero());
    return out;
  }
  out.min_power = buckets.begin()->first;
  int max_power = buckets.rbegin()->first;
  out.coefficients.reserve(static_cast<std::size_t>(max_power - out.min_power) + 1);
  for (int power = out.min_power; power <= max_power; ++power) {
    auto it = buckets.find(power);
    out.coefficients.push_back(
        it == buckets.end() ? Element::zero()
                            : Element::from_terms(std::move(it->second)));
  }
  return out;
}

}  // namespace splitring
