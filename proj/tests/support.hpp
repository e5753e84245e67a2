#pragma once

// Shared test fixture: a deterministic adjunction tower exercising every
// registration path (stage splits, linear splits with constant and certified
// coprimality evidence, unit seeds over rational and certified pairs), plus
// small random-element generators for property tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "splitring/certificate.hpp"
#include "splitring/divide.hpp"
#include "splitring/element.hpp"
#include "splitring/encode.hpp"
#include "splitring/errors.hpp"
#include "splitring/euclid.hpp"
#include "splitring/handle.hpp"
#include "splitring/indet.hpp"
#include "splitring/laurent.hpp"
#include "splitring/monomial.hpp"
#include "splitring/rational.hpp"
#include "splitring/tower.hpp"

namespace testsupport {

using namespace splitring;

struct Fixture {
  Tower tower;
  std::vector<PrimeHandle> stable;  // five conjugate pairs, creation order
  std::vector<PrimeHandle> units;   // four unit primes
  std::vector<IndetId> gens;        // stage vars + stable generators + seeds

  // split of t1 (stage 2)
  const PrimeHandle& s1() const { return stable[0]; }
  const PrimeHandle& s1c() const { return stable[1]; }
  // split of t1 + 1 (stage 2)
  const PrimeHandle& p1() const { return stable[2]; }
  const PrimeHandle& p1c() const { return stable[3]; }
  // split of 1 - t1 (stage 2, lambda -1)
  const PrimeHandle& m1() const { return stable[4]; }
  const PrimeHandle& m1c() const { return stable[5]; }
  // split of t1*t2 - 1 (stage 3)
  const PrimeHandle& r1() const { return stable[6]; }
  const PrimeHandle& r1c() const { return stable[7]; }
  // split of t2 - t3*s1 (stage 4, lambda -1)
  const PrimeHandle& q1() const { return stable[8]; }
  const PrimeHandle& q1c() const { return stable[9]; }

  const PrimeHandle& w1() const { return units[0]; }  // pair (2, 3), stage 1
  const PrimeHandle& w2() const { return units[1]; }  // pair (t1, 5), stage 2
  const PrimeHandle& w3() const { return units[2]; }  // pair (t1+1, s1), st. 3
  const PrimeHandle& w4() const { return units[3]; }  // pair (s1, w1), st. 3
};

inline Fixture make_fixture() {
  Fixture f;
  Tower& tw = f.tower;
  Element one = Element::one();
  Element t1 = Tower::stage_element(1);
  Element t2 = Tower::stage_element(2);
  Element t3 = Tower::stage_element(3);

  auto push_pair = [&f](const Tower::SplitResult& r) {
    f.stable.push_back(r.gen);
    f.stable.push_back(r.conj);
  };
  push_pair(tw.split(t1, PrimeTag::stage_variable()));
  push_pair(tw.split(
      t1 + one, PrimeTag::linear_fresh(one, IndetId::stage_var(1), -one)));
  push_pair(tw.split(
      one - t1, PrimeTag::linear_fresh(one, IndetId::stage_var(1), one)));
  push_pair(tw.split(
      t1 * t2 - one, PrimeTag::linear_fresh(-one, IndetId::stage_var(2), -t1)));
  Certificate s1cert = Certificate::prime(f.stable[0]);
  Element sigma = f.stable[0].value();
  push_pair(tw.split(
      t2 - t3 * sigma,
      PrimeTag::linear_fresh(t2, IndetId::stage_var(3), sigma, nullptr,
                             &s1cert)));

  f.units.push_back(
      tw.fresh_u(1, Element::constant(Rational(2)), Certificate::unit(Rational(3)))
          .prime);
  f.units.push_back(tw.fresh_u(2, t1, Certificate::unit(Rational(5))).prime);
  f.units.push_back(tw.fresh_u(3, t1 + one, s1cert).prime);
  f.units.push_back(
      tw.fresh_u(3, sigma, Certificate::prime(f.units[0])).prime);

  f.gens.push_back(IndetId::stage_var(1));
  f.gens.push_back(IndetId::stage_var(2));
  f.gens.push_back(IndetId::stage_var(3));
  for (const PrimeHandle& h : f.stable) f.gens.push_back(h.id());
  for (const PrimeHandle& h : f.units) f.gens.push_back(h.id());
  return f;
}

// Runs `f` and reports the error code it raised, if any.
template <typename F>
std::optional<errc> error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const ring_error& e) {
    return e.code();
  }
  return std::nullopt;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }
  bool chance(int percent) { return uniform(1, 100) <= percent; }
};

// Sum of up to `max_terms` products of generators; never expands into huge
// normal forms. May be zero only when `allow_zero`.
inline Element random_element(Rng& rng, const std::vector<IndetId>& gens,
                              int max_terms = 3, int max_factors = 2,
                              int max_exp = 2) {
  Element out = Element::zero();
  int terms = rng.uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    int coeff = 0;
    while (coeff == 0) coeff = rng.uniform(-3, 3);
    Element term = Element::constant(Rational(coeff));
    int factors = rng.uniform(0, max_factors);
    for (int j = 0; j < factors; ++j) {
      const IndetId& g =
          gens[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(gens.size()) - 1))];
      term = term * Element::indet(g, rng.uniform(1, max_exp));
    }
    out = out + term;
  }
  return out;
}

inline Element random_nonzero(Rng& rng, const std::vector<IndetId>& gens,
                              int max_terms = 3, int max_factors = 2,
                              int max_exp = 2) {
  for (;;) {
    Element e = random_element(rng, gens, max_terms, max_factors, max_exp);
    if (!e.is_zero()) return e;
  }
}

// Random certificate over the fixture's primes: rational unit, optional unit
// primes, and stable primes with exponents at most `max_stable_exp`.
inline Certificate random_certificate(Rng& rng, const Fixture& f,
                                      int max_stable_factors = 2,
                                      int max_stable_exp = 2,
                                      int max_unit_factors = 1) {
  int unit = 0;
  while (unit == 0) unit = rng.uniform(-4, 4);
  Certificate out = Certificate::unit(Rational(unit));
  int stable_factors = rng.uniform(0, max_stable_factors);
  for (int i = 0; i < stable_factors; ++i) {
    const PrimeHandle& h = f.stable[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(f.stable.size()) - 1))];
    out = out * Certificate::prime(h, rng.uniform(1, max_stable_exp));
  }
  int unit_factors = rng.uniform(0, max_unit_factors);
  for (int i = 0; i < unit_factors; ++i) {
    const PrimeHandle& h = f.units[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(f.units.size()) - 1))];
    out = out * Certificate::prime(h, 1);
  }
  return out;
}

}  // namespace testsupport
