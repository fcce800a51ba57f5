#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "table.hpp"

namespace snr {

/// Subset of the carrier as a bitmask; bit x set means element x is a
/// member. k <= 64 keeps every subset in one word.
using Mask = std::uint64_t;

inline Mask mask_bit(Elem x) { return Mask{1} << x; }

inline Mask mask_full(int k) {
  return k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
}

inline bool mask_contains(Mask mask, Elem x) { return (mask >> x) & 1; }

inline int mask_count(Mask mask) { return __builtin_popcountll(mask); }

inline std::vector<Elem> mask_elements(Mask mask) {
  std::vector<Elem> out;
  for (Elem x = 0; mask != 0; ++x, mask >>= 1)
    if (mask & 1) out.push_back(x);
  return out;
}

/// Validates a nonempty subset of the carrier of s.
inline void require_subset(const FinStructure& s, Mask mask) {
  if (mask == 0) fail(errc::empty_subset, "subset must be nonempty");
  if ((mask & ~mask_full(s.carrier())) != 0)
    fail(errc::out_of_range, "subset contains elements outside the carrier");
}

}  // namespace snr
