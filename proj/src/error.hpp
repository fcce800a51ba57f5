#pragma once

#include <stdexcept>
#include <string>

namespace snr {

enum class errc {
  invalid_argument,
  arity_mismatch,
  out_of_range,
  size_cap,
  parse_error,
  wrong_entry_count,
  empty_subset,
  empty_intersection,
  enumeration_guard,
  search_guard,
  domain_mismatch,
  not_identity,
  not_unit,
  not_homomorphism,
  not_epimorphism,
  not_ideal,
  not_congruence,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace snr
