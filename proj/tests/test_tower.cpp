#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <sstream>

using namespace testsupport;

TEST_CASE("registry shape after the standard fixture") {
  Fixture f = make_fixture();
  CHECK_EQ(f.tower.splits().size(), 5u);
  CHECK_EQ(f.tower.unit_seeds().size(), 4u);
  CHECK_EQ(f.tower.event_count(), 9);

  CHECK_EQ(f.s1().text(), "s[2;{1*t1^1}]");
  CHECK_EQ(f.s1c().text(), "s'[2;{1*t1^1}]");
  CHECK_EQ(f.p1().text(), "s[2;{1*t1^1 + 1}]");
  CHECK_EQ(f.m1().text(), "s[2;{1*t1^1 + -1}]");
  CHECK_EQ(f.r1().text(), "s[3;{1*t1^1*t2^1 + -1}]");
  CHECK_EQ(f.q1().text(), "s[4;{1*s[2;{1*t1^1}]^1*t3^1 + -1*t2^1}]");
  CHECK_EQ(f.w1().text(), "w[1;{2};{3}]");
  CHECK_EQ(f.w2().text(), "w[2;{1*t1^1};{5}]");
  CHECK_EQ(f.w3().text(), "w[3;{1*t1^1 + 1};{1*s[2;{1*t1^1}]^1}]");
  CHECK_EQ(f.w4().text(), "w[3;{1*s[2;{1*t1^1}]^1};{-3*u[1;{2};{3}]^1 + 2}]");

  CHECK_EQ(f.s1().stage(), 2);
  CHECK_EQ(f.r1().stage(), 3);
  CHECK_EQ(f.q1().stage(), 4);
  CHECK_EQ(f.w1().stage(), 1);
  CHECK_EQ(f.w4().stage(), 3);

  // Split pairs multiply back to a monic copy of their prime.
  for (const SplitRecord* rec : f.tower.splits()) {
    Element product =
        Element::indet(rec->gen) * Element::indet(rec->conj);
    CHECK(product == *rec->rep);
  }
  // Unit primes are a - u b and classify as unit primes.
  for (const UnitSeedRecord* rec : f.tower.unit_seeds()) {
    PrimeHandle h = PrimeHandle::unit_prime(rec->seed);
    CHECK_EQ(f.tower.classify(h), PrimeClass::UnitPrime);
  }
  CHECK_EQ(f.tower.classify(f.s1()), PrimeClass::Stable);
  CHECK_EQ(f.tower.classify(f.q1c()), PrimeClass::Stable);
}

TEST_CASE("classification rejects handles from a different tower") {
  Fixture f = make_fixture();
  Tower other;
  auto result =
      other.split(Tower::stage_element(1) + Element::constant(Rational(2)),
                  PrimeTag::linear_fresh(Element::constant(Rational(2)),
                                         IndetId::stage_var(1),
                                         Element::constant(Rational(-1))));
  CHECK(result.fresh);
  CHECK_EQ(error_code_of([&] { (void)f.tower.classify(result.gen); }),
           errc::unknown_handle);
}

TEST_CASE("registration is idempotent; scaling matters only for splits") {
  Fixture f = make_fixture();
  int before = f.tower.event_count();

  // Re-splitting the same prime, or any associate, yields the stored pair.
  Element p = Tower::stage_element(1) + Element::one();
  auto again = f.tower.split(p, PrimeTag::stage_variable());  // tag unchecked
  CHECK_FALSE(again.fresh);
  CHECK_EQ(again.gen.text(), f.p1().text());
  CHECK_EQ(again.lambda, Rational(1));

  auto scaled = f.tower.split(p.scaled(Rational(3)), PrimeTag::stage_variable());
  CHECK_FALSE(scaled.fresh);
  CHECK_EQ(scaled.gen.text(), f.p1().text());
  CHECK_EQ(scaled.lambda, Rational(3));

  // Re-registering the same unit-seed pair yields the stored seed.
  auto seed_again = f.tower.fresh_u(1, Element::constant(Rational(2)),
                                    Certificate::unit(Rational(3)));
  CHECK_FALSE(seed_again.fresh);
  CHECK_EQ(PrimeHandle::unit_prime(seed_again.seed).text(), f.w1().text());

  CHECK_EQ(f.tower.event_count(), before);

  // A scaled pair is a different pair: u depends on (a, b) themselves.
  auto seed_scaled = f.tower.fresh_u(1, Element::constant(Rational(4)),
                                     Certificate::unit(Rational(6)));
  CHECK(seed_scaled.fresh);
  CHECK_EQ(PrimeHandle::unit_prime(seed_scaled.seed).text(), "w[1;{4};{6}]");
  CHECK_EQ(f.tower.event_count(), before + 1);
}

TEST_CASE("split rejects degenerate and already-prime inputs") {
  Fixture f = make_fixture();
  PrimeTag stage_tag = PrimeTag::stage_variable();

  CHECK_EQ(error_code_of([&] { f.tower.split(Element::zero(), stage_tag); }),
           errc::zero_or_constant);
  CHECK_EQ(error_code_of([&] { f.tower.split(Element::one(), stage_tag); }),
           errc::zero_or_constant);
  CHECK_EQ(error_code_of([&] { f.tower.split(f.s1().value(), stage_tag); }),
           errc::already_stable_or_unit);
  // An associate of a registered unit prime is recognized by its monic form.
  Element w1_assoc = f.w1().value().scaled(Rational(2));
  CHECK_EQ(error_code_of([&] { f.tower.split(w1_assoc, stage_tag); }),
           errc::already_stable_or_unit);
}

TEST_CASE("split demands primality evidence that matches the element") {
  Fixture f = make_fixture();
  Element t1 = Tower::stage_element(1);
  Element one = Element::one();

  CHECK_EQ(error_code_of([&] {
             f.tower.split(t1 * t1 + one, PrimeTag::stage_variable());
           }),
           errc::not_certified_prime);
  CHECK_EQ(error_code_of([&] {
             f.tower.split(t1 * t1, PrimeTag::stage_variable());
           }),
           errc::not_certified_prime);
  CHECK_EQ(error_code_of([&] {
             f.tower.split(t1 * t1 + one, PrimeTag::stable_generator());
           }),
           errc::not_certified_prime);
  // Evidence for 1 - t2 does not certify t2 + 1.
  PrimeTag wrong = PrimeTag::linear_fresh(one, IndetId::stage_var(2), one);
  Element t2 = Tower::stage_element(2);
  CHECK_EQ(error_code_of([&] { f.tower.split(t2 + one, wrong); }),
           errc::not_certified_prime);
}

TEST_CASE("linear evidence construction validates its inputs") {
  Fixture f = make_fixture();
  Element one = Element::one();
  Element t2 = Tower::stage_element(2);
  Element sigma = f.s1().value();

  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(Element::zero(),
                                          IndetId::stage_var(2), one);
           }),
           errc::zero_argument);
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(one, f.s1().id(), one);
           }),
           errc::invalid_argument);
  // The variable must be fresh over both coefficients.
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(t2, IndetId::stage_var(2), one);
           }),
           errc::rank_too_low);
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(sigma, IndetId::stage_var(1), one);
           }),
           errc::rank_too_low);
  // Nonconstant coefficients with no certificates carry no coprimality
  // evidence at all.
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(sigma, IndetId::stage_var(3), t2);
           }),
           errc::not_coprime);
  // A certificate lets the pair be checked by division; here it fails.
  Certificate sigma_cert = Certificate::prime(f.s1());
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(sigma * t2, IndetId::stage_var(3),
                                          sigma, nullptr, &sigma_cert);
           }),
           errc::not_coprime);
  // Certificates must match the coefficients they describe.
  CHECK_EQ(error_code_of([&] {
             (void)PrimeTag::linear_fresh(t2, IndetId::stage_var(3), sigma,
                                          &sigma_cert, nullptr);
           }),
           errc::invalid_argument);
  // Two disjoint certificates succeed, and the tag splits a genuine prime.
  Certificate p1_cert = Certificate::prime(f.p1());
  PrimeTag good = PrimeTag::linear_fresh(
      f.p1().value(), IndetId::stage_var(3), sigma, &p1_cert, &sigma_cert);
  Element prime = f.p1().value() - Element::indet(IndetId::stage_var(3)) * sigma;
  auto result = f.tower.split(prime, good);
  CHECK(result.fresh);
  CHECK_EQ(result.gen.stage(), 4);
}

TEST_CASE("unit-seed registration validates its inputs") {
  Fixture f = make_fixture();
  Element two = Element::constant(Rational(2));
  Element t1 = Tower::stage_element(1);
  Certificate unit5 = Certificate::unit(Rational(5));

  CHECK_EQ(error_code_of([&] { f.tower.fresh_u(0, two, unit5); }),
           errc::invalid_argument);
  CHECK_EQ(error_code_of([&] { f.tower.fresh_u(1, Element::zero(), unit5); }),
           errc::zero_argument);
  CHECK_EQ(error_code_of([&] { f.tower.fresh_u(1, two, Certificate::unit(Rational(0))); }),
           errc::zero_argument);
  CHECK_EQ(error_code_of([&] { f.tower.fresh_u(1, t1, unit5); }),
           errc::rank_too_high);
  // b = sigma sigma' rewrites to t1 (rank 1), but its certified factors only
  // become primes at stage 2; stage 2 would need them at stage <= 1.
  Certificate pair_cert = Certificate::prime(f.s1()) * Certificate::prime(f.s1c());
  CHECK_EQ(error_code_of([&] {
             f.tower.fresh_u(2, Element::constant(Rational(7)), pair_cert);
           }),
           errc::temporary_divisor);
  CHECK_EQ(error_code_of([&] {
             f.tower.fresh_u(3, Element::constant(Rational(7)),
                             Certificate::prime(f.s1(), 2));
           }),
           errc::stable_square);
  Certificate sigma_cert = Certificate::prime(f.s1());
  CHECK_EQ(error_code_of([&] {
             f.tower.fresh_u(3, f.s1().value(), sigma_cert);
           }),
           errc::not_coprime);
  // An explicit certificate for a must actually describe a.
  CHECK_EQ(error_code_of([&] {
             f.tower.fresh_u(3, t1, unit5, &sigma_cert);
           }),
           errc::invalid_argument);
  // ... and its factors must already be primes below the stage.
  Element rr = f.r1().value() * f.r1c().value();
  Certificate rr_cert = Certificate::prime(f.r1()) * Certificate::prime(f.r1c());
  CHECK_EQ(error_code_of([&] { f.tower.fresh_u(3, rr, unit5, &rr_cert); }),
           errc::rank_too_high);
  // With disjoint certificates the pair registers.
  Certificate p1_cert = Certificate::prime(f.p1());
  auto ok = f.tower.fresh_u(3, f.p1().value(), sigma_cert, &p1_cert);
  CHECK(ok.fresh);
  CHECK_EQ(ok.prime.stage(), 3);
}

TEST_CASE("minimum stage for a unit adjunction") {
  Fixture f = make_fixture();
  CHECK_EQ(min_u_stage(Element::constant(Rational(2)),
                       Certificate::unit(Rational(3))),
           1);
  CHECK_EQ(min_u_stage(Tower::stage_element(1),
                       Certificate::unit(Rational(5))),
           2);
  Certificate sigma_cert = Certificate::prime(f.s1());
  CHECK_EQ(min_u_stage(Tower::stage_element(1) + Element::one(), sigma_cert),
           3);
  Certificate p1_cert = Certificate::prime(f.p1());
  CHECK_EQ(min_u_stage(f.p1().value(), sigma_cert, &p1_cert), 3);
}

TEST_CASE("persistence round-trips byte for byte") {
  Fixture f = make_fixture();
  std::ostringstream first;
  f.tower.save(first);

  std::istringstream in(first.str());
  Tower copy = Tower::load(in);
  CHECK_EQ(copy.event_count(), f.tower.event_count());
  std::ostringstream second;
  copy.save(second);
  CHECK_EQ(first.str(), second.str());

  // Replaying the same event stream adds nothing.
  std::istringstream replay(first.str());
  copy.append_events(replay);
  CHECK_EQ(copy.event_count(), f.tower.event_count());

  // Handles minted by the copy are interchangeable with the original's.
  CHECK_EQ(copy.classify(f.q1()), PrimeClass::Stable);
  CHECK_EQ(copy.classify(f.w4()), PrimeClass::UnitPrime);
}

TEST_CASE("persistence rejects malformed event streams") {
  auto load_text = [](const std::string& text) {
    std::istringstream in(text);
    return Tower::load(in);
  };
  CHECK_EQ(error_code_of([&] { (void)load_text("SPLIT 2 {1*t1^1 + 1} 1\n"); }),
           errc::parse_error);  // missing header
  CHECK_EQ(error_code_of([&] {
             (void)load_text("splitring tower v1\nSPLIT 2 {2*t1^1 + 2} 1\n");
           }),
           errc::parse_error);  // representative not monic
  CHECK_EQ(error_code_of([&] {
             (void)load_text("splitring tower v1\nSPLIT 3 {1*t1^1 + 1} 1\n");
           }),
           errc::parse_error);  // stage does not match
  CHECK_EQ(error_code_of([&] {
             (void)load_text("splitring tower v1\nSPLIT 2 {1 + 1*t1^1} 1\n");
           }),
           errc::parse_error);  // key not canonical
  CHECK_EQ(error_code_of([&] {
             (void)load_text("splitring tower v1\nADJOIN 2 {1*t1^1 + 1}\n");
           }),
           errc::parse_error);  // unknown event kind
  CHECK_EQ(error_code_of([&] {
             (void)load_text("splitring tower v1\nFRESHU 1 {0} {3}\n");
           }),
           errc::parse_error);  // zero component
}

TEST_CASE("certificates stay valid as the tower keeps growing") {
  Fixture f = make_fixture();

  // Freeze certified factorizations and their canonical values now.
  Certificate c1 = Certificate::prime(f.s1(), 2) * Certificate::prime(f.s1c());
  Certificate c2 = Certificate::unit(rational_from_text("-3/2")) *
                   Certificate::prime(f.q1()) * Certificate::prime(f.w4());
  Element v1 = c1.value();
  Element v2 = c2.value();
  std::string e1 = canonical_encode(v1);
  std::string e2 = canonical_encode(v2);

  // Grow the tower by 20 further adjunctions: ten fresh linear splits and
  // ten fresh unit seeds.
  int before = f.tower.event_count();
  for (int k = 2; k <= 11; ++k) {
    Element a = Element::constant(Rational(k));
    Element b = Element::constant(Rational(-1));
    auto r = f.tower.split(Tower::stage_element(1) + a,
                           PrimeTag::linear_fresh(a, IndetId::stage_var(1), b));
    CHECK(r.fresh);
  }
  for (int k = 0; k < 10; ++k) {
    auto r = f.tower.fresh_u(1, Element::constant(Rational(2)),
                             Certificate::unit(Rational(5 + 2 * k)));
    CHECK(r.fresh);
  }
  CHECK_EQ(f.tower.event_count(), before + 20);

  // Old certificates still verify and re-encode identically.
  CHECK(verify_certificate(c1, v1));
  CHECK(verify_certificate(c2, v2));
  CHECK_EQ(canonical_encode(c1.value()), e1);
  CHECK_EQ(canonical_encode(c2.value()), e2);
  CHECK_EQ(f.tower.classify(f.q1()), PrimeClass::Stable);
}
