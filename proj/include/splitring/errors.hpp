#pragma once

#include <stdexcept>
#include <string>

namespace splitring {

// Failure conditions raised for violated preconditions and malformed input.
// Expected negative outcomes of decision procedures (an exact division that
// finds no quotient, a Laurent element outside the ring) are reported through
// empty optionals instead of exceptions.
enum class errc {
  zero_element,            // operation undefined at 0
  zero_divisor,            // division by 0
  zero_argument,           // an argument that must be nonzero is 0
  zero_or_constant,        // a prime candidate that is 0 or a constant
  rank_too_low,            // coefficient extraction below the element's rank
  rank_too_high,           // adjunction stage below an argument's rank
  parse_error,             // malformed text
  unknown_indeterminate,   // referenced generator was never registered
  unknown_handle,          // prime handle not present in the tower
  not_certified_prime,     // primality evidence does not match the element
  already_stable_or_unit,  // split target is already a registered prime
  temporary_divisor,       // divisor certificate uses primes of a later stage
  stable_square,           // divisor certificate has a repeated stable prime
  not_coprime,             // coprimality requirement failed
  not_subcertificate,      // cofactor extraction from a non-divisor
  certificate_required,    // operation needs a factored operand
  unsupported_shape,       // input outside the constructive fragment
  expansion_limit,         // term-count guard tripped
  invalid_argument,        // anything else structurally unusable
};

const char* errc_name(errc code) noexcept;

class ring_error : public std::runtime_error {
 public:
  ring_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace splitring
