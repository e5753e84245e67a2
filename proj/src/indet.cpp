#include "splitring/indet.hpp"

#include "splitring/element.hpp"
#include "splitring/encode.hpp"
#include "splitring/errors.hpp"

namespace splitring {

IndetId IndetId::stage_var(int stage) {
  if (stage < 1) fail(errc::invalid_argument, "stage must be >= 1");
  return IndetId(IndetKind::Stage, stage, nullptr, nullptr, "", "");
}

IndetId IndetId::split_var(int stage, std::shared_ptr<const Element> prime,
                           bool conjugate) {
  if (stage < 2) fail(errc::invalid_argument, "split stage must be >= 2");
  if (!prime || prime->is_zero() || prime->is_constant()) {
    fail(errc::invalid_argument, "split payload must be nonconstant");
  }
  if (prime->leading_coefficient() != 1) {
    fail(errc::invalid_argument, "split payload must be monic");
  }
  if (prime->rank() != stage - 1) {
    fail(errc::invalid_argument, "split stage must be payload rank + 1");
  }
  std::string key = canonical_encode(*prime);
  return IndetId(conjugate ? IndetKind::SplitConj : IndetKind::Split, stage,
                 std::move(prime), nullptr, std::move(key), "");
}

IndetId IndetId::unit_seed(int stage, std::shared_ptr<const Element> a,
                           std::shared_ptr<const Element> b) {
  if (stage < 1) fail(errc::invalid_argument, "stage must be >= 1");
  if (!a || a->is_zero() || !b || b->is_zero()) {
    fail(errc::zero_argument, "unit seed payloads must be nonzero");
  }
  if (a->rank() > stage - 1 || b->rank() > stage - 1) {
    fail(errc::rank_too_high, "unit seed payload rank exceeds stage - 1");
  }
  std::string ka = canonical_encode(*a);
  std::string kb = canonical_encode(*b);
  return IndetId(IndetKind::UnitSeed, stage, std::move(a), std::move(b),
                 std::move(ka), std::move(kb));
}

const Element& IndetId::payload() const {
  if (!payload_a_) fail(errc::invalid_argument, "generator has no payload");
  return *payload_a_;
}

const Element& IndetId::payload2() const {
  if (!payload_b_) fail(errc::invalid_argument, "generator has no second payload");
  return *payload_b_;
}

std::string IndetId::text() const {
  switch (kind_) {
    case IndetKind::Stage:
      return "t" + std::to_string(stage_);
    case IndetKind::Split:
      return "s[" + std::to_string(stage_) + ";" + key_a_ + "]";
    case IndetKind::SplitConj:
      return "s'[" + std::to_string(stage_) + ";" + key_a_ + "]";
    case IndetKind::UnitSeed:
      return "u[" + std::to_string(stage_) + ";" + key_a_ + ";" + key_b_ + "]";
  }
  fail(errc::invalid_argument, "corrupt generator kind");
}

IndetId IndetId::conjugate() const {
  if (!is_split_kind()) {
    fail(errc::invalid_argument, "only split generators have conjugates");
  }
  IndetKind other = (kind_ == IndetKind::Split) ? IndetKind::SplitConj
                                                : IndetKind::Split;
  return IndetId(other, stage_, payload_a_, nullptr, key_a_, "");
}

std::strong_ordering operator<=>(const IndetId& x, const IndetId& y) {
  if (auto c = x.stage_ <=> y.stage_; c != 0) return c;
  if (auto c = static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_); c != 0)
    return c;
  if (auto c = x.key_a_ <=> y.key_a_; c != 0) return c;
  return x.key_b_ <=> y.key_b_;
}

std::optional<SplitKey> split_key_of(const IndetId& id) {
  if (!id.is_split_kind()) return std::nullopt;
  return SplitKey{id.stage(), id.payload_key()};
}

}  // namespace splitring
