#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>

namespace splitring {

class Element;

// The four kinds of adjoined generators, in canonical order. `Split` and
// `SplitConj` are the conjugate pair introduced when a temporary prime p is
// split (their product rewrites back to p). `Stage` is the one free
// polynomial variable added per stage. `UnitSeed` is the variable u adjoined
// for an eligible pair (a, b); the element a - u*b then becomes a prime that
// the final localization turns into a unit.
enum class IndetKind { Split = 0, SplitConj = 1, Stage = 2, UnitSeed = 3 };

// Identity of one adjoined generator. Self-describing: split generators carry
// the monic prime they split, unit seeds carry the pair (a, b), both as shared
// immutable elements plus their canonical text keys. Identity, ordering and
// hashing use (stage, kind, keys) only, so structurally equal generators
// created independently compare equal.
class IndetId {
 public:
  static IndetId stage_var(int stage);
  // `prime` must be monic with rank() == stage - 1.
  static IndetId split_var(int stage, std::shared_ptr<const Element> prime,
                           bool conjugate);
  // `a`, `b` nonzero with rank <= stage - 1. Eligibility beyond that is the
  // tower's business; the id records only the defining data.
  static IndetId unit_seed(int stage, std::shared_ptr<const Element> a,
                           std::shared_ptr<const Element> b);

  IndetKind kind() const { return kind_; }
  int stage() const { return stage_; }

  bool is_split_kind() const {
    return kind_ == IndetKind::Split || kind_ == IndetKind::SplitConj;
  }

  // Split/SplitConj: canonical key of the monic prime. UnitSeed: key of a.
  const std::string& payload_key() const { return key_a_; }
  // UnitSeed only: canonical key of b.
  const std::string& payload_key2() const { return key_b_; }

  const Element& payload() const;   // Split/SplitConj: prime; UnitSeed: a
  const Element& payload2() const;  // UnitSeed: b
  std::shared_ptr<const Element> payload_ptr() const { return payload_a_; }
  std::shared_ptr<const Element> payload2_ptr() const { return payload_b_; }

  // Grammar form: t3 | s[2;{...}] | s'[2;{...}] | u[1;{...};{...}]
  std::string text() const;

  // For Split/SplitConj ids, the id of the conjugate partner.
  IndetId conjugate() const;

  friend bool operator==(const IndetId& x, const IndetId& y) {
    return x.stage_ == y.stage_ && x.kind_ == y.kind_ && x.key_a_ == y.key_a_ &&
           x.key_b_ == y.key_b_;
  }
  friend std::strong_ordering operator<=>(const IndetId& x, const IndetId& y);

 private:
  IndetId(IndetKind kind, int stage, std::shared_ptr<const Element> a,
          std::shared_ptr<const Element> b, std::string ka, std::string kb)
      : kind_(kind),
        stage_(stage),
        payload_a_(std::move(a)),
        payload_b_(std::move(b)),
        key_a_(std::move(ka)),
        key_b_(std::move(kb)) {}

  IndetKind kind_;
  int stage_;
  std::shared_ptr<const Element> payload_a_;
  std::shared_ptr<const Element> payload_b_;
  std::string key_a_;
  std::string key_b_;
};

// A split is identified by its stage and the canonical key of the monic prime
// it splits.
struct SplitKey {
  int stage = 0;
  std::string prime_key;

  friend bool operator==(const SplitKey&, const SplitKey&) = default;
  friend std::strong_ordering operator<=>(const SplitKey&,
                                          const SplitKey&) = default;
};

// SplitKey of a Split/SplitConj generator; nullopt for the other kinds.
std::optional<SplitKey> split_key_of(const IndetId& id);

}  // namespace splitring
