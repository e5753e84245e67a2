#include "splitring/handle.hpp"

#include "splitring/errors.hpp"

namespace splitring {

PrimeHandle PrimeHandle::stable(const IndetId& generator) {
  if (!generator.is_split_kind()) {
    fail(errc::invalid_argument, "stable handle needs a split generator");
  }
  return PrimeHandle(Kind::Stable, generator);
}

PrimeHandle PrimeHandle::unit_prime(const IndetId& seed) {
  if (seed.kind() != IndetKind::UnitSeed) {
    fail(errc::invalid_argument, "unit-prime handle needs a unit seed");
  }
  return PrimeHandle(Kind::UnitPrime, seed);
}

Element PrimeHandle::value() const {
  if (kind_ == Kind::Stable) return Element::indet(id_);
  return id_.payload() - Element::indet(id_) * id_.payload2();
}

std::string PrimeHandle::text() const {
  if (kind_ == Kind::Stable) return id_.text();
  return "w[" + std::to_string(id_.stage()) + ";" + id_.payload_key() + ";" +
         id_.payload_key2() + "]";
}

}  // namespace splitring
