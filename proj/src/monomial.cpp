#include "splitring/monomial.hpp"

#include <algorithm>
#include <map>

#include "splitring/errors.hpp"

namespace splitring {

Monomial Monomial::of(const IndetId& id, int exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(id, exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [id, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(const IndetId& id) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), id,
      [](const Factor& f, const IndetId& key) { return f.first < key; });
  if (it != factors_.end() && it->first == id) return it->second;
  return 0;
}

int Monomial::max_stage() const {
  int s = 0;
  for (const auto& [id, e] : factors_) s = std::max(s, id.stage());
  return s;
}

int Monomial::grade(const SplitKey& key) const {
  int g = 0;
  for (const auto& [id, e] : factors_) {
    if (!id.is_split_kind()) continue;
    if (id.stage() != key.stage || id.payload_key() != key.prime_key) continue;
    g += (id.kind() == IndetKind::Split) ? e : -e;
  }
  return g;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second < 0; });
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = other.factors_.begin(), be = other.factors_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::times(const IndetId& id, int exponent) const {
  return times(Monomial::of(id, exponent));
}

std::optional<Monomial> Monomial::exact_quotient(const Monomial& divisor) const {
  Monomial out;
  auto a = factors_.begin(), ae = factors_.end();
  auto b = divisor.factors_.begin(), be = divisor.factors_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      return std::nullopt;  // divisor has a generator we lack
    } else {
      int e = a->second - b->second;
      if (e < 0) return std::nullopt;
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& multiple) const {
  return multiple.exact_quotient(*this).has_value();
}

Monomial Monomial::pow(int exponent) const {
  if (exponent == 0) return Monomial();
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& [id, e] : factors_) out.factors_.emplace_back(id, e * exponent);
  return out;
}

std::vector<SplitKey> Monomial::conjugate_pairs() const {
  std::map<SplitKey, std::pair<bool, bool>> seen;
  for (const auto& [id, e] : factors_) {
    if (!id.is_split_kind() || e <= 0) continue;
    SplitKey key{id.stage(), id.payload_key()};
    auto& flags = seen[key];
    (id.kind() == IndetKind::Split ? flags.first : flags.second) = true;
  }
  std::vector<SplitKey> out;
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
    if (it->second.first && it->second.second) out.push_back(it->first);
  }
  return out;
}

std::optional<IndetId> Monomial::generator_of(const SplitKey& key) const {
  for (const auto& [id, e] : factors_) {
    if (!id.is_split_kind()) continue;
    if (id.stage() == key.stage && id.payload_key() == key.prime_key) {
      return id.kind() == IndetKind::Split ? id : id.conjugate();
    }
  }
  return std::nullopt;
}

namespace {

// Splits touched by either monomial, each listed once, descending.
std::vector<SplitKey> touched_splits(const Monomial& x, const Monomial& y) {
  std::vector<SplitKey> keys;
  auto collect = [&keys](const Monomial& m) {
    for (const auto& [id, e] : m.factors()) {
      if (id.is_split_kind()) keys.push_back({id.stage(), id.payload_key()});
    }
  };
  collect(x);
  collect(y);
  std::sort(keys.begin(), keys.end(), std::greater<>());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// Exponent-wise comparison walking generators from the highest down; at the
// first generator where the exponents differ, the larger exponent wins.
std::strong_ordering lex_from_top(const Monomial& x, const Monomial& y) {
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  auto a = fx.rbegin(), ae = fx.rend();
  auto b = fy.rbegin(), be = fy.rend();
  while (a != ae || b != be) {
    if (b == be || (a != ae && b->first < a->first)) {
      // only x has this generator
      if (a->second != 0) return a->second > 0 ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
      ++a;
    } else if (a == ae || a->first < b->first) {
      if (b->second != 0) return b->second > 0 ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
      ++b;
    } else {
      if (a->second != b->second) return a->second <=> b->second;
      ++a;
      ++b;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering Monomial::compare(const Monomial& x, const Monomial& y) {
  if (int dx = x.degree(), dy = y.degree(); dx != dy) return dx <=> dy;
  for (const SplitKey& key : touched_splits(x, y)) {
    if (int gx = x.grade(key), gy = y.grade(key); gx != gy) return gx <=> gy;
  }
  return lex_from_top(x, y);
}

std::strong_ordering Monomial::compare_graded_lex(const Monomial& x,
                                                  const Monomial& y) {
  if (int dx = x.degree(), dy = y.degree(); dx != dy) return dx <=> dy;
  return lex_from_top(x, y);
}

}  // namespace splitring
