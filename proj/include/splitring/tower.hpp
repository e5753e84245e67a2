#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "splitring/certificate.hpp"
#include "splitring/element.hpp"
#include "splitring/handle.hpp"
#include "splitring/indet.hpp"

namespace splitring {

enum class PrimeClass { Stable, UnitPrime };

// Evidence that a split candidate really is prime. Three constructive
// shapes are recognized:
//   - a stage variable t_k (times a rational),
//   - a split generator (times a rational) — always rejected by split(),
//     since generators must never be split again,
//   - a - x*b where x is a fresh polynomial-type generator whose stage
//     exceeds the ranks of a and b, both nonzero, with gcd(a, b) = 1
//     (a linear polynomial with coprime coefficients in a fresh variable
//     is prime by the Gauss argument).
class PrimeTag {
 public:
  enum class Shape { StageVariable, StableGenerator, LinearFresh };

  static PrimeTag stage_variable();
  static PrimeTag stable_generator();

  // Validates shape and coprimality before returning a tag:
  //  - `x` must be Stage or UnitSeed kind with stage(x) > rank(a), rank(b);
  //  - coprimality: accepted if a or b is a nonzero constant, or if both
  //    certificates are supplied with disjoint prime support, or if `b_cert`
  //    alone is supplied and no prime of it divides `a` (checked by exact
  //    division).
  static PrimeTag linear_fresh(const Element& a, const IndetId& x,
                               const Element& b,
                               const Certificate* a_cert = nullptr,
                               const Certificate* b_cert = nullptr);

  Shape shape() const { return shape_; }
  const Element& linear_a() const;
  const Element& linear_b() const;
  const IndetId& linear_x() const;

 private:
  explicit PrimeTag(Shape shape) : shape_(shape) {}

  Shape shape_;
  std::optional<Element> a_, b_;
  std::optional<IndetId> x_;
};

struct SplitRecord {
  SplitKey key;
  IndetId gen;
  IndetId conj;
  std::shared_ptr<const Element> rep;  // monic representative, == parse(key)
  Rational lambda;                     // leading coefficient at registration
};

struct UnitSeedRecord {
  int stage = 0;
  std::string a_key;
  std::string b_key;
  IndetId seed;
  std::string monic_key;  // canonical key of the monic form of a - u*b
};

// The adjunction registry. Append-only: generators are adjoined on demand and
// never removed, so elements built over a tower stay valid as it grows.
// Single writer: mutation is not synchronized; readers of a frozen tower are
// safe from any thread.
class Tower {
 public:
  Tower() = default;

  // --- pure lookups -------------------------------------------------------
  const SplitRecord* find_split(const std::string& prime_key) const;
  const UnitSeedRecord* find_unit_seed(int stage, const std::string& a_key,
                                       const std::string& b_key) const;
  std::vector<const SplitRecord*> splits() const;          // creation order
  std::vector<const UnitSeedRecord*> unit_seeds() const;   // creation order
  int event_count() const { return static_cast<int>(log_.size()); }

  // Stage variables need no registration.
  static Element stage_element(int stage);

  // --- adjunction ---------------------------------------------------------
  struct SplitResult {
    PrimeHandle gen;
    PrimeHandle conj;
    Rational lambda;  // p = lambda * rep, rep monic
    bool fresh;       // false when the split already existed
  };
  // Splits a certified temporary prime. Registers the monic representative at
  // stage rank(p) + 1; idempotent when that representative is already split.
  // Errors: zero_or_constant, not_certified_prime, already_stable_or_unit.
  SplitResult split(const Element& p, const PrimeTag& tag);

  struct UnitSeedResult {
    IndetId seed;
    PrimeHandle prime;  // a - u*b
    bool fresh;
  };
  // Adjoins u for the pair (a, value(b_cert)) at `stage`. Every distinct pair
  // receives its own seed variable, so a - u*b for different pairs are
  // genuinely different primes. Preconditions map to errors: zero_argument,
  // rank_too_high, temporary_divisor (a factor of b lives at a later stage
  // than stage - 1), stable_square, not_coprime. Passing `a_cert` (when a is
  // factored) turns the coprimality check into support disjointness;
  // otherwise every prime of b is division-tested against a. Idempotent per
  // (stage, a, b).
  UnitSeedResult fresh_u(int stage, const Element& a,
                         const Certificate& b_cert,
                         const Certificate* a_cert = nullptr);

  PrimeClass classify(const PrimeHandle& h) const;  // errc::unknown_handle

  // --- persistence --------------------------------------------------------
  // Event lines in creation order:
  //   SPLIT <stage> <primeKey> <lambda>
  //   FRESHU <stage> <aKey> <bKey>
  // Keys are balanced-brace groups, so lines parse unambiguously.
  void save(std::ostream& out) const;
  // Replays a save. Entries are structurally validated and trusted to have
  // passed full eligibility when first created.
  static Tower load(std::istream& in);
  void append_events(std::istream& in);  // same format, onto this tower

 private:
  struct SplitEvent { std::string prime_key; };
  struct SeedEvent { int stage; std::string a_key; std::string b_key; };
  using Event = std::variant<SplitEvent, SeedEvent>;

  SplitResult register_split(const Element& rep, const Rational& lambda);
  UnitSeedResult register_seed(int stage, const Element& a, const Element& b);

  std::map<std::string, SplitRecord> splits_;
  std::map<std::tuple<int, std::string, std::string>, UnitSeedRecord> seeds_;
  std::vector<Event> log_;
};

// Smallest stage at which u may be adjoined for (a, value(b_cert)):
// 1 + max(rank a, rank b, highest handle stage of b_cert, and, when given,
// highest handle stage of a_cert).
int min_u_stage(const Element& a, const Certificate& b_cert,
                const Certificate* a_cert = nullptr);

// Parses a handle literal: a split-generator literal or w[stage;{a};{b}].
PrimeHandle parse_handle(std::string_view src, const Tower& tower);

}  // namespace splitring
