#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace testsupport;

namespace {

// a == q*b + r as fractions, checked by clearing all four denominators.
void require_division_identity(const LocalElement& a, const LocalElement& b,
                               const DivisionStep& step) {
  const LocalElement& q = step.quotient;
  const LocalElement& r = step.remainder;
  Element lhs = a.numerator_value() * q.denominator().value() *
                b.denominator().value() * r.denominator().value();
  Element rhs = q.numerator_value() * b.numerator_value() *
                    a.denominator().value() * r.denominator().value() +
                r.numerator_value() * a.denominator().value() *
                    q.denominator().value() * b.denominator().value();
  REQUIRE(lhs == rhs);
}

}  // namespace

TEST_CASE("local elements are exact fractions") {
  Fixture f = make_fixture();
  Certificate den = Certificate::unit(Rational(2)) * Certificate::prime(f.w1(), 1);
  LocalElement x = LocalElement::from_certificate(Certificate::prime(f.s1(), 1), den);
  CHECK_FALSE(x.is_zero());
  CHECK(x.certified());
  CHECK_EQ(phi(x), 1);

  // Scaling numerator and denominator by the same unit gives an equal fraction.
  LocalElement y = LocalElement::from_certificate(
      Certificate::prime(f.s1(), 1).times_unit(Rational(3)),
      den.times_unit(Rational(3)));
  CHECK(x == y);
  CHECK_FALSE(x == LocalElement::from_certificate(Certificate::prime(f.s1(), 1)));

  // Zero numerator collapses to the zero fraction regardless of denominator.
  LocalElement z = LocalElement::from_element(Element::zero(), den);
  CHECK(z.is_zero());
  CHECK(z == LocalElement::zero());
  CHECK_EQ(z.text(), "0");

  // The denominator must be a unit of the localized ring.
  CHECK_EQ(error_code_of([&] {
             (void)LocalElement::from_certificate(
                 Certificate(), Certificate::prime(f.s1(), 1));
           }),
           errc::invalid_argument);

  // phi needs a certified nonzero numerator.
  CHECK_EQ(error_code_of([&] { (void)phi(LocalElement::zero()); }),
           errc::zero_element);
  LocalElement raw = LocalElement::from_element(Tower::stage_element(1));
  CHECK_FALSE(raw.certified());
  CHECK_EQ(error_code_of([&] { (void)phi(raw); }), errc::certificate_required);
}

TEST_CASE("division case 1: unit cofactor divides exactly") {
  Fixture f = make_fixture();
  LocalElement a = LocalElement::from_certificate(Certificate::prime(f.s1(), 2));
  LocalElement b = LocalElement::from_certificate(Certificate::prime(f.s1(), 1));
  DivisionStep step = div_step(f.tower, a, b);
  CHECK_EQ(step.kind, DivisionCase::Exact);
  CHECK_EQ(step.quotient.text(), "(1 * s[2;{1*t1^1}]^1) / (1)");
  CHECK(step.remainder.is_zero());
  CHECK_EQ(step.phi_divisor, 1);
  CHECK_FALSE(step.phi_remainder.has_value());
  require_division_identity(a, b, step);

  // Unit-prime and rational denominators land in the same case.
  LocalElement c = LocalElement::from_certificate(
      Certificate::prime(f.s1(), 1) * Certificate::prime(f.w1(), 2));
  DivisionStep step2 = div_step(f.tower, c, b);
  CHECK_EQ(step2.kind, DivisionCase::Exact);
  require_division_identity(c, b, step2);

  // Dividing zero is exact with zero quotient and remainder.
  DivisionStep zstep = div_step(f.tower, LocalElement::zero(), b);
  CHECK_EQ(zstep.kind, DivisionCase::Exact);
  CHECK(zstep.quotient.is_zero());
  CHECK(zstep.remainder.is_zero());
}

TEST_CASE("division case 2: squarefree cofactor needs one fresh seed") {
  Fixture f = make_fixture();
  LocalElement a = LocalElement::from_certificate(
      Certificate::prime(f.p1(), 1) * Certificate::prime(f.p1c(), 1));
  LocalElement b = LocalElement::from_certificate(Certificate::prime(f.s1(), 1));
  DivisionStep step = div_step(f.tower, a, b);
  CHECK_EQ(step.kind, DivisionCase::UnitAdjunction);
  CHECK_EQ(step.quotient.text(),
           "({1*u[3;{1*t1^1 + 1};{1*s[2;{1*t1^1}]^1}]^1}) / (1)");
  CHECK_EQ(step.remainder.text(),
           "(1 * w[3;{1*t1^1 + 1};{1*s[2;{1*t1^1}]^1}]^1) / (1)");
  CHECK_EQ(step.phi_divisor, 1);
  REQUIRE(step.phi_remainder.has_value());
  CHECK_EQ(*step.phi_remainder, 0);
  require_division_identity(a, b, step);

  // The remainder keeps exactly the shared stable part: phi(r) == phi(gcd).
  LocalElement a2 = LocalElement::from_certificate(
      Certificate::prime(f.m1(), 1) * Certificate::prime(f.s1(), 1));
  LocalElement b2 = LocalElement::from_certificate(
      Certificate::prime(f.s1(), 1) * Certificate::prime(f.p1(), 1));
  DivisionStep step2 = div_step(f.tower, a2, b2);
  CHECK_EQ(step2.kind, DivisionCase::UnitAdjunction);
  REQUIRE(step2.phi_remainder.has_value());
  CHECK_EQ(*step2.phi_remainder, 1);  // gcd is one copy of s1
  CHECK_LT(*step2.phi_remainder, step2.phi_divisor);
  require_division_identity(a2, b2, step2);
}

TEST_CASE("division case 3: repeated stable factor needs a fresh split") {
  Fixture f = make_fixture();
  LocalElement a = LocalElement::from_certificate(
      Certificate::prime(f.p1(), 1) * Certificate::prime(f.p1c(), 1));
  LocalElement b = LocalElement::from_certificate(Certificate::prime(f.s1(), 2));
  DivisionStep step = div_step(f.tower, a, b);
  CHECK_EQ(step.kind, DivisionCase::SplitAdjunction);
  CHECK_EQ(step.quotient.text(), "({1*t3^1}) / (1)");
  CHECK_EQ(step.remainder.text(),
           "(-1 * s[4;{1*s[2;{1*t1^1}]^2*t3^1 + -1*t1^1 + -1}]^1 * "
           "s'[4;{1*s[2;{1*t1^1}]^2*t3^1 + -1*t1^1 + -1}]^1) / (1)");
  CHECK_EQ(step.phi_divisor, 4);
  REQUIRE(step.phi_remainder.has_value());
  CHECK_EQ(*step.phi_remainder, 2);
  require_division_identity(a, b, step);
}

TEST_CASE("division rejects unusable inputs") {
  Fixture f = make_fixture();
  LocalElement certified =
      LocalElement::from_certificate(Certificate::prime(f.s1(), 1));
  CHECK_EQ(error_code_of([&] {
             (void)div_step(f.tower, certified, LocalElement::zero());
           }),
           errc::zero_divisor);
  LocalElement raw = LocalElement::from_element(Tower::stage_element(1));
  CHECK_EQ(error_code_of([&] { (void)div_step(f.tower, raw, certified); }),
           errc::certificate_required);
  CHECK_EQ(error_code_of([&] { (void)div_step(f.tower, certified, raw); }),
           errc::certificate_required);
}

TEST_CASE("euclidean runs terminate within three steps") {
  Fixture f = make_fixture();
  LocalElement s2 = LocalElement::from_certificate(Certificate::prime(f.s1(), 2));
  LocalElement s1 = LocalElement::from_certificate(Certificate::prime(f.s1(), 1));
  LocalElement p_pair = LocalElement::from_certificate(
      Certificate::prime(f.p1(), 1) * Certificate::prime(f.p1c(), 1));

  DivisionTrace t1 = euclid_run(f.tower, s2, s1);
  CHECK_EQ(t1.case_pattern(), std::vector<int>{1});
  CHECK(t1.steps.back().remainder.is_zero());

  DivisionTrace t2 = euclid_run(f.tower, p_pair, s1);
  CHECK_EQ(t2.case_pattern(), std::vector<int>({2, 1}));
  CHECK(t2.steps.back().remainder.is_zero());

  DivisionTrace t3 = euclid_run(f.tower, p_pair, s2);
  CHECK_EQ(t3.case_pattern(), std::vector<int>({3, 2, 1}));
  CHECK(t3.steps.back().remainder.is_zero());

  // Each step satisfies the division identity and the strict descent.
  for (const DivisionTrace* trace : {&t1, &t2, &t3}) {
    for (const DivisionStep& step : trace->steps) {
      require_division_identity(step.dividend, step.divisor, step);
      if (step.phi_remainder)
        CHECK_LT(*step.phi_remainder, step.phi_divisor);
    }
  }

  // The last nonzero remainder of the three-step run is a unit of the
  // localized ring, matching the trivial certificate gcd of the inputs.
  const LocalElement& last = t3.steps[1].remainder;
  REQUIRE(last.numerator().has_value());
  CHECK(last.numerator()->is_unit_in_ring());
  CHECK(cert_gcd(Certificate::prime(f.p1(), 1) * Certificate::prime(f.p1c(), 1),
                 Certificate::prime(f.s1(), 2))
            .is_rational_only());
}

TEST_CASE("trace table is deterministic text") {
  Fixture f = make_fixture();
  LocalElement a = LocalElement::from_certificate(Certificate::prime(f.s1(), 2));
  LocalElement b = LocalElement::from_certificate(Certificate::prime(f.s1(), 1));
  DivisionTrace trace = euclid_run(f.tower, a, b);
  CHECK_EQ(trace.table(),
           "step | case | phi(b) | phi(r) | q | r\n"
           "1 | 1 | 1 | - | (1 * s[2;{1*t1^1}]^1) / (1) | 0\n");
}

TEST_CASE("witness: candidate quotients force two stable factors") {
  Fixture f = make_fixture();

  // q with nonzero numerator: the remainder splits as a fresh stage-4 pair.
  DivisorWitness w = stable_divisor_witness(
      f.tower, f.s1(), Certificate(),
      LocalElement::from_certificate(Certificate()));
  CHECK_EQ(w.first.text(), "s[4;{1*s[2;{1*t1^1}]^2 + -1*t3^1}]");
  CHECK_EQ(w.second.text(), "s'[4;{1*s[2;{1*t1^1}]^2 + -1*t3^1}]");
  CHECK_EQ(w.cofactor.text(), "-1");
  CHECK_EQ(canonical_encode(w.value), "{-1*s[2;{1*t1^1}]^2 + 1*t3^1}");
  CHECK(w.cofactor.value() * w.first.value() * w.second.value() == w.value);
  // The pair's product is the monic form of the remainder.
  CHECK(w.first.value() * w.second.value() == w.value.monic());

  // q = 0: the remainder v*t is the stage variable itself.
  DivisorWitness w0 = stable_divisor_witness(f.tower, f.s1(), Certificate(),
                                             LocalElement::zero());
  CHECK(w0.cofactor == Certificate());
  CHECK(w0.value == Element::indet(IndetId::stage_var(3)));
  CHECK(w0.first.value() * w0.second.value() == w0.value);

  // Shared unit primes between v and q are stripped into the cofactor.
  DivisorWitness ws = stable_divisor_witness(
      f.tower, f.s1(), Certificate::prime(f.w1(), 1),
      LocalElement::from_certificate(
          Certificate::unit(Rational(2)) * Certificate::prime(f.w1(), 1)));
  CHECK(ws.cofactor.value() * ws.first.value() * ws.second.value() == ws.value);
  CHECK_EQ(ws.cofactor.exponent(f.w1()), 1);

  // Identity for every witness: value = v*t - q*p^2 with the original v, q.
  Element t3 = Element::indet(IndetId::stage_var(3));
  Element p2 = f.s1().value().pow(2);
  Element w1val = Certificate::prime(f.w1(), 1).value();
  CHECK(ws.value == w1val * t3 - w1val.scaled(Rational(2)) * p2);
}

TEST_CASE("witness rejects inputs outside the supported class") {
  Fixture f = make_fixture();
  CHECK_EQ(error_code_of([&] {
             (void)stable_divisor_witness(
                 f.tower, f.w1(), Certificate(),
                 LocalElement::from_certificate(Certificate()));
           }),
           errc::invalid_argument);  // target must be stable
  CHECK_EQ(error_code_of([&] {
             (void)stable_divisor_witness(
                 f.tower, f.s1(), Certificate::prime(f.p1(), 1),
                 LocalElement::from_certificate(Certificate()));
           }),
           errc::unsupported_shape);  // v has a stable factor
  CHECK_EQ(error_code_of([&] {
             (void)stable_divisor_witness(
                 f.tower, f.s1(), Certificate(),
                 LocalElement::from_element(Tower::stage_element(3)));
           }),
           errc::unsupported_shape);  // q lives above the prime's stage
}

TEST_CASE("refutation report walks the multiplicativity chain") {
  Fixture f = make_fixture();
  std::vector<std::pair<LocalElement, Certificate>> candidates;
  candidates.emplace_back(LocalElement::from_certificate(Certificate()),
                          Certificate());
  candidates.emplace_back(LocalElement::zero(), Certificate());
  candidates.emplace_back(LocalElement::from_element(Tower::stage_element(3)),
                          Certificate());  // unsupported, must be skipped
  std::string report = norm_refutation_report(f.tower, f.s1(), candidates);

  CHECK(report.find("phi(p) = 1 and phi(p^2) = 4.") != std::string::npos);
  CHECK(report.find("psi(p)^2 = psi(p^2) <= psi(p1) * psi(p2) <= psi(r)") !=
        std::string::npos);
  CHECK(report.find("not a universal proof") != std::string::npos);
  CHECK(report.find("skipped (unsupported-shape)") != std::string::npos);
  CHECK(report.find("candidate 3") != std::string::npos);

  // Deterministic: a second run over the same tower is byte-identical.
  CHECK_EQ(norm_refutation_report(f.tower, f.s1(), candidates), report);
}

TEST_CASE("case 3 reuses a stage variable that was split as an element") {
  Tower tower;
  auto s_pair = tower.split(Tower::stage_element(1), PrimeTag::stage_variable());
  auto t3_pair = tower.split(Tower::stage_element(3), PrimeTag::stage_variable());
  CHECK(t3_pair.fresh);

  // Dividing 1 by sigma^2 takes case 3 with x = t3: the element t3 has been
  // split, but the stage variable itself stays a free generator.
  LocalElement one = LocalElement::from_certificate(Certificate());
  LocalElement b =
      LocalElement::from_certificate(Certificate::prime(s_pair.gen, 2));
  DivisionStep step = div_step(tower, one, b);
  CHECK_EQ(step.kind, DivisionCase::SplitAdjunction);
  REQUIRE(step.phi_remainder.has_value());
  CHECK_LT(*step.phi_remainder, step.phi_divisor);
  require_division_identity(one, b, step);
}
