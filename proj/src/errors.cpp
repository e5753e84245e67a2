#include "splitring/errors.hpp"

namespace splitring {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_element: return "zero-element";
    case errc::zero_divisor: return "zero-divisor";
    case errc::zero_argument: return "zero-argument";
    case errc::zero_or_constant: return "zero-or-constant";
    case errc::rank_too_low: return "rank-too-low";
    case errc::rank_too_high: return "rank-too-high";
    case errc::parse_error: return "parse-error";
    case errc::unknown_indeterminate: return "unknown-indeterminate";
    case errc::unknown_handle: return "unknown-handle";
    case errc::not_certified_prime: return "not-certified-prime";
    case errc::already_stable_or_unit: return "already-stable-or-unit";
    case errc::temporary_divisor: return "temporary-divisor";
    case errc::stable_square: return "stable-square";
    case errc::not_coprime: return "not-coprime";
    case errc::not_subcertificate: return "not-subcertificate";
    case errc::certificate_required: return "certificate-required";
    case errc::unsupported_shape: return "unsupported-shape";
    case errc::expansion_limit: return "expansion-limit";
    case errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

void fail(errc code, const std::string& what) {
  throw ring_error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace splitring
