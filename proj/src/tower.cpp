#include "splitring/tower.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "splitring/divide.hpp"
#include "splitring/encode.hpp"
#include "splitring/errors.hpp"

namespace splitring {

namespace {

// True when the certificates are complete factorizations with no handle in
// common. Pairs are compared by handle identity; handles are associate-unique
// by construction (split representatives are monic, unit-prime pairs are
// scaled), so disjoint support really means no common prime.
bool disjoint_support(const Certificate& x, const Certificate& y) {
  for (const auto& [h, e] : x.factors())
    if (y.exponent(h) > 0) return false;
  return true;
}

// Division-checked coprimality: no certified prime of `factored` divides
// `other` exactly.
void require_coprime_by_division(const Element& other,
                                 const Certificate& factored) {
  for (const auto& [h, e] : factored.factors())
    if (try_divide(other, h.value()))
      fail(errc::not_coprime, "operands share the prime " + h.text());
}

}  // namespace

PrimeTag PrimeTag::stage_variable() { return PrimeTag(Shape::StageVariable); }

PrimeTag PrimeTag::stable_generator() {
  return PrimeTag(Shape::StableGenerator);
}

PrimeTag PrimeTag::linear_fresh(const Element& a, const IndetId& x,
                                const Element& b, const Certificate* a_cert,
                                const Certificate* b_cert) {
  if (a.is_zero() || b.is_zero())
    fail(errc::zero_argument, "both coefficients must be nonzero");
  if (x.is_split_kind())
    fail(errc::invalid_argument,
         "the fresh variable must be a stage or unit-seed generator");
  if (x.stage() <= a.rank() || x.stage() <= b.rank())
    fail(errc::rank_too_low,
         "the variable is not fresh over the coefficients");
  if (a_cert && !verify_certificate(*a_cert, a))
    fail(errc::invalid_argument, "certificate does not match the first coefficient");
  if (b_cert && !verify_certificate(*b_cert, b))
    fail(errc::invalid_argument, "certificate does not match the second coefficient");

  bool coprime = false;
  if (a.is_constant() || b.is_constant()) {
    coprime = true;  // a nonzero constant is a unit; the pair is coprime
  } else if (a_cert && b_cert) {
    coprime = disjoint_support(*a_cert, *b_cert);
    if (!coprime)
      fail(errc::not_coprime, "certified factorizations share a prime");
  } else if (b_cert) {
    require_coprime_by_division(a, *b_cert);
    coprime = true;
  } else if (a_cert) {
    require_coprime_by_division(b, *a_cert);
    coprime = true;
  }
  if (!coprime)
    fail(errc::not_coprime,
         "no usable coprimality evidence for the coefficient pair");

  PrimeTag tag(Shape::LinearFresh);
  tag.a_ = a;
  tag.b_ = b;
  tag.x_ = x;
  return tag;
}

const Element& PrimeTag::linear_a() const {
  if (shape_ != Shape::LinearFresh)
    fail(errc::invalid_argument, "tag has no linear coefficients");
  return *a_;
}

const Element& PrimeTag::linear_b() const {
  if (shape_ != Shape::LinearFresh)
    fail(errc::invalid_argument, "tag has no linear coefficients");
  return *b_;
}

const IndetId& PrimeTag::linear_x() const {
  if (shape_ != Shape::LinearFresh)
    fail(errc::invalid_argument, "tag has no linear coefficients");
  return *x_;
}

const SplitRecord* Tower::find_split(const std::string& prime_key) const {
  auto it = splits_.find(prime_key);
  return it == splits_.end() ? nullptr : &it->second;
}

const UnitSeedRecord* Tower::find_unit_seed(int stage,
                                            const std::string& a_key,
                                            const std::string& b_key) const {
  auto it = seeds_.find(std::tuple{stage, a_key, b_key});
  return it == seeds_.end() ? nullptr : &it->second;
}

std::vector<const SplitRecord*> Tower::splits() const {
  std::vector<const SplitRecord*> out;
  for (const Event& event : log_)
    if (const SplitEvent* e = std::get_if<SplitEvent>(&event))
      out.push_back(&splits_.at(e->prime_key));
  return out;
}

std::vector<const UnitSeedRecord*> Tower::unit_seeds() const {
  std::vector<const UnitSeedRecord*> out;
  for (const Event& event : log_)
    if (const SeedEvent* e = std::get_if<SeedEvent>(&event))
      out.push_back(&seeds_.at(std::tuple{e->stage, e->a_key, e->b_key}));
  return out;
}

Element Tower::stage_element(int stage) {
  return Element::indet(IndetId::stage_var(stage));
}

Tower::SplitResult Tower::split(const Element& p, const PrimeTag& tag) {
  if (p.is_zero() || p.is_constant())
    fail(errc::zero_or_constant, "only nonconstant elements are split");
  Rational lambda = p.leading_coefficient();
  Element rep = p.monic();
  std::string key = canonical_encode(rep);

  if (const SplitRecord* existing = find_split(key))
    return {PrimeHandle::stable(existing->gen),
            PrimeHandle::stable(existing->conj), lambda, false};

  // A split generator is never split again, and neither is a unit prime.
  if (rep.term_count() == 1) {
    const Monomial& m = rep.leading_monomial();
    if (m.size() == 1 && m.factors()[0].second == 1 &&
        m.factors()[0].first.is_split_kind())
      fail(errc::already_stable_or_unit, "split generators stay prime");
  }
  for (const auto& [seed_key, record] : seeds_)
    if (record.monic_key == key)
      fail(errc::already_stable_or_unit, "unit primes are not split");

  switch (tag.shape()) {
    case PrimeTag::Shape::StageVariable: {
      const Monomial& m = rep.leading_monomial();
      bool is_stage_var = rep.term_count() == 1 && m.size() == 1 &&
                          m.factors()[0].second == 1 &&
                          m.factors()[0].first.kind() == IndetKind::Stage;
      if (!is_stage_var)
        fail(errc::not_certified_prime,
             "the element is not a rational multiple of a stage variable");
      break;
    }
    case PrimeTag::Shape::StableGenerator:
      // Any element this tag truthfully applies to was rejected above.
      fail(errc::not_certified_prime,
           "the element is not a registered stable prime");
    case PrimeTag::Shape::LinearFresh: {
      Element claimed = tag.linear_a() -
                        Element::indet(tag.linear_x()) * tag.linear_b();
      if (!(claimed == p))
        fail(errc::not_certified_prime,
             "primality evidence does not reproduce the element");
      break;
    }
  }
  return register_split(rep, lambda);
}

Tower::SplitResult Tower::register_split(const Element& rep,
                                         const Rational& lambda) {
  int stage = rep.rank() + 1;
  auto shared = std::make_shared<const Element>(rep);
  IndetId gen = IndetId::split_var(stage, shared, false);
  IndetId conj = IndetId::split_var(stage, shared, true);
  const std::string& key = gen.payload_key();
  SplitRecord record{SplitKey{stage, key}, gen, conj, shared, lambda};
  splits_.emplace(key, std::move(record));
  log_.push_back(SplitEvent{key});
  return {PrimeHandle::stable(gen), PrimeHandle::stable(conj), lambda, true};
}

Tower::UnitSeedResult Tower::fresh_u(int stage, const Element& a,
                                     const Certificate& b_cert,
                                     const Certificate* a_cert) {
  if (stage < 1) fail(errc::invalid_argument, "stages start at 1");
  if (a.is_zero()) fail(errc::zero_argument, "the first component is zero");
  Element b = b_cert.value();
  if (b.is_zero()) fail(errc::zero_argument, "the second component is zero");
  if (a.rank() > stage - 1 || b.rank() > stage - 1)
    fail(errc::rank_too_high, "components must live below the new stage");
  if (b_cert.max_handle_stage() > stage - 1)
    fail(errc::temporary_divisor,
         "a certified factor of b is not yet a prime at this stage");
  if (!b_cert.stable_squarefree())
    fail(errc::stable_square, "b has a repeated stable prime factor");

  if (a_cert) {
    if (!verify_certificate(*a_cert, a))
      fail(errc::invalid_argument, "certificate does not match a");
    if (a_cert->max_handle_stage() > stage - 1)
      fail(errc::rank_too_high,
           "a certified factor of a is not yet available at this stage");
    if (!disjoint_support(*a_cert, b_cert))
      fail(errc::not_coprime, "the pair shares a certified prime");
  } else {
    require_coprime_by_division(a, b_cert);
  }

  std::string a_key = canonical_encode(a);
  std::string b_key = canonical_encode(b);
  if (const UnitSeedRecord* existing = find_unit_seed(stage, a_key, b_key))
    return {existing->seed, PrimeHandle::unit_prime(existing->seed), false};

  return register_seed(stage, a, b);
}

Tower::UnitSeedResult Tower::register_seed(int stage, const Element& a,
                                           const Element& b) {
  auto shared_a = std::make_shared<const Element>(a);
  auto shared_b = std::make_shared<const Element>(b);
  IndetId seed = IndetId::unit_seed(stage, shared_a, shared_b);
  PrimeHandle prime = PrimeHandle::unit_prime(seed);
  UnitSeedRecord record{stage, seed.payload_key(), seed.payload_key2(), seed,
                        canonical_encode(prime.value().monic())};
  std::tuple key{stage, record.a_key, record.b_key};
  seeds_.emplace(std::move(key), std::move(record));
  log_.push_back(SeedEvent{stage, seed.payload_key(), seed.payload_key2()});
  return {seed, prime, true};
}

PrimeClass Tower::classify(const PrimeHandle& h) const {
  if (h.is_stable()) {
    const SplitRecord* rec = find_split(h.id().payload_key());
    if (rec && rec->key.stage == h.stage()) return PrimeClass::Stable;
    fail(errc::unknown_handle, "handle " + h.text() + " is not registered");
  }
  const UnitSeedRecord* rec = find_unit_seed(
      h.stage(), h.id().payload_key(), h.id().payload_key2());
  if (rec) return PrimeClass::UnitPrime;
  fail(errc::unknown_handle, "handle " + h.text() + " is not registered");
}

namespace {

// Reads one balanced-brace group from `line` starting at `pos` (which must
// point at '{'); advances `pos` past the group.
std::string read_group(const std::string& line, std::size_t& pos) {
  while (pos < line.size() && line[pos] == ' ') ++pos;
  if (pos >= line.size() || line[pos] != '{')
    fail(errc::parse_error, "expected a brace group in tower event");
  std::size_t start = pos;
  int depth = 0;
  for (; pos < line.size(); ++pos) {
    if (line[pos] == '{') ++depth;
    if (line[pos] == '}') {
      --depth;
      if (depth == 0) {
        ++pos;
        return line.substr(start, pos - start);
      }
    }
  }
  fail(errc::parse_error, "unbalanced braces in tower event");
}

std::string read_word(const std::string& line, std::size_t& pos) {
  while (pos < line.size() && line[pos] == ' ') ++pos;
  std::size_t start = pos;
  while (pos < line.size() && line[pos] != ' ') ++pos;
  return line.substr(start, pos - start);
}

constexpr const char* kHeader = "splitring tower v1";

}  // namespace

void Tower::save(std::ostream& out) const {
  out << kHeader << '\n';
  for (const Event& event : log_) {
    if (const SplitEvent* e = std::get_if<SplitEvent>(&event)) {
      const SplitRecord& rec = splits_.at(e->prime_key);
      out << "SPLIT " << rec.key.stage << ' ' << e->prime_key << ' '
          << rational_to_text(rec.lambda) << '\n';
    } else {
      const SeedEvent& seed_event = std::get<SeedEvent>(event);
      out << "FRESHU " << seed_event.stage << ' ' << seed_event.a_key << ' '
          << seed_event.b_key << '\n';
    }
  }
}

Tower Tower::load(std::istream& in) {
  Tower tower;
  tower.append_events(in);
  return tower;
}

void Tower::append_events(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    fail(errc::parse_error, "missing tower header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    std::string kind = read_word(line, pos);
    if (kind == "SPLIT") {
      std::string stage_text = read_word(line, pos);
      std::string key = read_group(line, pos);
      std::string lambda_text = read_word(line, pos);
      int stage = std::stoi(stage_text);
      Element rep = parse_element(key, *this);
      if (rep.is_zero() || rep.is_constant() ||
          !(rep.leading_coefficient() == 1))
        fail(errc::parse_error, "split representative must be monic");
      if (rep.rank() + 1 != stage)
        fail(errc::parse_error, "split stage does not match the prime");
      if (canonical_encode(rep) != key)
        fail(errc::parse_error, "split key is not canonical");
      if (!find_split(key)) {
        SplitResult result = register_split(rep, rational_from_text(lambda_text));
        (void)result;
      }
    } else if (kind == "FRESHU") {
      std::string stage_text = read_word(line, pos);
      std::string a_key = read_group(line, pos);
      std::string b_key = read_group(line, pos);
      int stage = std::stoi(stage_text);
      Element a = parse_element(a_key, *this);
      Element b = parse_element(b_key, *this);
      if (a.is_zero() || b.is_zero())
        fail(errc::parse_error, "unit-seed components must be nonzero");
      if (a.rank() > stage - 1 || b.rank() > stage - 1)
        fail(errc::parse_error, "unit-seed components exceed their stage");
      if (canonical_encode(a) != a_key || canonical_encode(b) != b_key)
        fail(errc::parse_error, "unit-seed key is not canonical");
      if (!find_unit_seed(stage, a_key, b_key)) register_seed(stage, a, b);
    } else {
      fail(errc::parse_error, "unknown tower event '" + kind + "'");
    }
  }
}

int min_u_stage(const Element& a, const Certificate& b_cert,
                const Certificate* a_cert) {
  int floor = std::max(a.rank(), b_cert.value().rank());
  floor = std::max(floor, b_cert.max_handle_stage());
  if (a_cert) floor = std::max(floor, a_cert->max_handle_stage());
  return floor + 1;
}

}  // namespace splitring
