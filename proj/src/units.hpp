#pragma once

#include <optional>
#include <span>
#include <vector>

#include "axioms.hpp"
#include "table.hpp"

namespace snr {

/// Invertible elements relative to one unity e: x is a unit when some a
/// satisfies g(a, x, e^{n-2}) = g(x, a, e^{n-2}) = e. inverse_of records
/// the least such a per unit (uniqueness is not assumed); units with
/// more than one two-sided inverse are listed in `ambiguous`.
struct UnitsReport {
  Elem unity = 0;
  std::vector<Elem> units;       ///< ascending
  std::vector<Elem> inverse_of;  ///< indexed by element; -1 outside units
  std::vector<Elem> ambiguous;   ///< units with several inverses, ascending
};

/// Least two-sided g-inverse of x relative to unity e, or absent when x
/// is not invertible. e must pass the g-identity test.
std::optional<Elem> g_inverse(const FinStructure& s, Elem e, Elem x);

/// Full report over the carrier for one unity.
UnitsReport units_set(const FinStructure& s, Elem e);

/// Five-way inverse identity for a unit x and context a_3..a_n:
///   g(x, x^-1, a) = g(x^-1, x, a) = g(a, x, x^-1) = g(a, x^-1, x)
///                 = g(a, e, e).
/// The witness records x, x^-1 and the context; pos is the first leg
/// (2..5) deviating from the first evaluation.
AxiomVerdict check_inverse_identities(const FinStructure& s, Elem e, Elem x,
                                      std::span<const Elem> context);

/// Shift identity for a context a_2..a_n and slots i < j: inserting e at
/// position i and at position j of the context yields equal values.
AxiomVerdict check_shift_identity(const FinStructure& s, Elem e, std::span<const Elem> context,
                                  int i, int j);

/// Inverse of a product of units by the reversed-inverse formula
/// g(a_n^-1, ..., a_1^-1); verified two-sided before returning.
Elem product_inverse(const FinStructure& s, Elem e, std::span<const Elem> factors);

/// Exhaustive sweeps of the three unit theorems for one unity:
/// inverse identities over every unit x every context, the shift
/// identity over every context x every slot pair, and unit-closure of
/// every n-tuple of units with the reversed-inverse formula verified.
/// Each sweep stops at its first failure; the counts are the full sweep
/// sizes.
struct UnitsTheoremSummary {
  std::size_t inverse_identity_checks = 0;  ///< |units| * k^(n-2)
  std::size_t shift_checks = 0;             ///< k^(n-1) * n(n-1)/2
  std::size_t product_checks = 0;           ///< |units|^n
  AxiomVerdict inverse_identities;
  AxiomVerdict shift;
  bool products_closed = true;
  std::string product_failure;  ///< message when products_closed is false

  bool all_hold() const {
    return inverse_identities.holds && shift.holds && products_closed;
  }
};

UnitsTheoremSummary run_units_theorems(const FinStructure& s, const UnitsReport& report);

}  // namespace snr
