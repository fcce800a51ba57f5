#pragma once

#include <optional>
#include <span>
#include <vector>

#include "axioms.hpp"
#include "mask.hpp"
#include "table.hpp"

namespace snr {

inline constexpr int max_enumeration_carrier = 20;  // 2^k subset sweep guard

/// First tuple over sub's elements whose image under op leaves sub,
/// scanning tuples in ascending order. `symbol` labels the witness.
std::optional<Witness> find_closure_escape(const OpTable& op, char symbol, Mask sub);

/// Closure criterion: sub is f-closed and g-closed on tuples drawn from
/// sub. Scans f before g, tuples over the subset's elements ascending;
/// the witness is the first escaping tuple and its image.
AxiomVerdict is_subseminearring(const FinStructure& s, Mask sub);

/// Least closed superset of seed: the fixpoint of adding f- and g-images
/// of tuples from the current set. Each round only revisits tuples that
/// touch newly added elements.
Mask sub_closure(const FinStructure& s, Mask seed);

/// All nonempty closed subsets, ascending bitmask order. Requires
/// carrier <= 20.
std::vector<Mask> enumerate_subs(const FinStructure& s);

/// Intersection of a family of closed subsets, re-verified closed (the
/// intersection theorem made executable). An empty family yields the
/// full carrier; an empty intersection is an error.
Mask intersect_closed_family(const FinStructure& s, std::span<const Mask> family);

}  // namespace snr
