#include "splitring/element.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "splitring/errors.hpp"

namespace splitring {

namespace {

struct ScheduleState {
  bool randomized = false;
  std::mt19937_64 rng;
};

thread_local ScheduleState g_schedule;
thread_local int g_max_terms = 10000;

void check_budget(std::size_t pending) {
  if (pending > static_cast<std::size_t>(g_max_terms)) {
    fail(errc::expansion_limit,
         "intermediate expansion exceeded " + std::to_string(g_max_terms) +
             " terms");
  }
}

}  // namespace

int max_terms_limit() { return g_max_terms; }
void set_max_terms_limit(int limit) {
  if (limit < 1) fail(errc::invalid_argument, "max-terms must be positive");
  g_max_terms = limit;
}

void RewriteSchedule::use_deterministic() { g_schedule.randomized = false; }
void RewriteSchedule::use_randomized(std::uint64_t seed) {
  g_schedule.randomized = true;
  g_schedule.rng.seed(seed);
}
bool RewriteSchedule::randomized() { return g_schedule.randomized; }

ScheduleGuard::ScheduleGuard()
    : was_randomized_(g_schedule.randomized), limit_(g_max_terms) {}
ScheduleGuard::~ScheduleGuard() {
  g_schedule.randomized = was_randomized_;
  g_max_terms = limit_;
}

Element Element::constant(const Rational& c) {
  Element e;
  if (c != 0) e.terms_.emplace_back(c, Monomial());
  return e;
}

Element Element::indet(const IndetId& id, int exponent) {
  if (exponent < 0) fail(errc::invalid_argument, "negative exponent");
  if (exponent == 0) return one();
  Element e;
  e.terms_.emplace_back(Rational(1), Monomial::of(id, exponent));
  return e;
}

Element Element::term(const Rational& c, const Monomial& m) {
  assert(m.conjugate_pairs().empty() && m.all_positive());
  Element e;
  if (c != 0) e.terms_.emplace_back(c, m);
  return e;
}

Element Element::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, MonomialDescending> acc;
  for (auto& [c, m] : terms) {
    assert(m.conjugate_pairs().empty() && m.all_positive());
    auto [it, fresh] = acc.emplace(std::move(m), c);
    if (!fresh) it->second += c;
  }
  Element e;
  e.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) e.terms_.emplace_back(c, m);
  }
  return e;
}

bool Element::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].second.is_one());
}

const Rational& Element::constant_value() const {
  if (!is_constant() || is_zero()) {
    fail(errc::invalid_argument, "not a nonzero constant");
  }
  return terms_[0].first;
}

const Rational& Element::leading_coefficient() const {
  if (is_zero()) fail(errc::zero_element, "zero has no leading coefficient");
  return terms_[0].first;
}

const Monomial& Element::leading_monomial() const {
  if (is_zero()) fail(errc::zero_element, "zero has no leading monomial");
  return terms_[0].second;
}

Element Element::monic() const {
  return scaled(Rational(1) / leading_coefficient());
}

int Element::rank() const {
  int r = 0;
  for (const auto& [c, m] : terms_) r = std::max(r, m.max_stage());
  return r;
}

Element Element::operator-() const { return scaled(Rational(-1)); }

Element Element::scaled(const Rational& c) const {
  if (c == 0) return zero();
  Element out;
  out.terms_.reserve(terms_.size());
  for (const auto& [tc, tm] : terms_) out.terms_.emplace_back(tc * c, tm);
  return out;
}

Element operator+(const Element& x, const Element& y) {
  std::map<Monomial, Rational, MonomialDescending> acc;
  for (const auto& [c, m] : x.terms_) acc.emplace(m, c);
  for (const auto& [c, m] : y.terms_) {
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) it->second += c;
  }
  check_budget(acc.size());
  Element out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(c, m);
  }
  return out;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

namespace {

// One conjugate pair is eliminated per round: the monomial loses `count`
// copies of both halves and gains the defining prime to the same power. The
// prime has strictly lower rank than the split stage, so the multiset of
// split-generator stages decreases and the loop terminates regardless of the
// order in which sites are picked.
struct RewriteWork {
  std::vector<Element::Term> pending;
  std::map<Monomial, Rational, MonomialDescending> done;

  void push(Rational c, Monomial m) {
    if (c == 0) return;
    if (m.conjugate_pairs().empty()) {
      auto it = done.find(m);
      if (it == done.end()) {
        done.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
      }
    } else {
      pending.emplace_back(std::move(c), std::move(m));
    }
    check_budget(pending.size() + done.size());
  }
};

}  // namespace

Element operator*(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return Element::zero();

  RewriteWork work;
  for (const auto& [cx, mx] : x.terms_) {
    for (const auto& [cy, my] : y.terms_) {
      work.push(cx * cy, mx.times(my));
    }
  }

  while (!work.pending.empty()) {
    std::size_t pick = work.pending.size() - 1;
    if (RewriteSchedule::randomized()) {
      pick = std::uniform_int_distribution<std::size_t>(
          0, work.pending.size() - 1)(g_schedule.rng);
      std::swap(work.pending[pick], work.pending.back());
    }
    auto [c, m] = std::move(work.pending.back());
    work.pending.pop_back();

    auto pairs = m.conjugate_pairs();
    assert(!pairs.empty());
    std::size_t which = 0;
    if (RewriteSchedule::randomized() && pairs.size() > 1) {
      which = std::uniform_int_distribution<std::size_t>(
          0, pairs.size() - 1)(g_schedule.rng);
    }
    const SplitKey& key = pairs[which];
    IndetId gen = *m.generator_of(key);
    IndetId conj = gen.conjugate();
    int avail = std::min(m.exponent(gen), m.exponent(conj));
    int count = RewriteSchedule::randomized() ? 1 : avail;

    Monomial reduced = m.times(gen, -count).times(conj, -count);
    Element prime_power = gen.payload().pow(count);
    for (const auto& [pc, pm] : prime_power.terms()) {
      work.push(c * pc, reduced.times(pm));
    }
  }

  Element out;
  out.terms_.reserve(work.done.size());
  for (auto& [m, c] : work.done) {
    if (c != 0) out.terms_.emplace_back(c, m);
  }
  return out;
}

Element Element::pow(int exponent) const {
  if (exponent < 0) fail(errc::invalid_argument, "negative element power");
  Element acc = one();
  Element base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

std::map<int, Element> Element::grade_decompose(const SplitKey& key) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [c, m] : terms_) buckets[m.grade(key)].emplace_back(c, m);
  std::map<int, Element> out;
  for (auto& [g, terms] : buckets) out.emplace(g, from_terms(std::move(terms)));
  return out;
}

std::pair<int, int> Element::grade_range(const SplitKey& key) const {
  if (is_zero()) fail(errc::zero_element, "grade range of zero");
  int lo = terms_[0].second.grade(key);
  int hi = lo;
  for (const auto& [c, m] : terms_) {
    int g = m.grade(key);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  return {lo, hi};
}

int Element::spread(const SplitKey& key) const {
  auto [lo, hi] = grade_range(key);
  return hi - lo;
}

}  // namespace splitring
