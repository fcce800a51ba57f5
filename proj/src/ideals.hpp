#pragma once

#include <span>
#include <vector>

#include "axioms.hpp"
#include "mask.hpp"
#include "table.hpp"

namespace snr {

/// i-ideal criterion: sub is a subseminearring and absorbs in g's slot i,
/// i.e. g(b_1^{i-1}, x, b_{i+1}^n) stays in sub for every x in sub and
/// every context from the full carrier. Closure is scanned first; each
/// absorption sweep fixes x (ascending over sub) and ranges the context
/// in mixed-radix order.
AxiomVerdict is_i_ideal(const FinStructure& s, Mask sub, int i);

/// Full-ideal criterion in its two-condition form: f-closure on tuples
/// from sub plus absorption in every slot i = 1..n (g-closure follows).
AxiomVerdict is_ideal(const FinStructure& s, Mask sub);

/// Least superset of seed closed under (a) f on tuples inside the set
/// and (b) g with one slot in the set and the rest ranging over the
/// carrier, for every slot. The result passes is_ideal.
Mask ideal_closure(const FinStructure& s, Mask seed);

/// All nonempty subsets that are i-ideals for every requested position,
/// ascending bitmask order. An empty `positions` means every slot 1..n.
/// Requires carrier <= 20.
std::vector<Mask> enumerate_ideals(const FinStructure& s, std::span<const int> positions = {});

/// Intersection of a family of ideals, re-verified as an ideal (the
/// intersection theorem made executable). An empty family yields the
/// full carrier; an empty intersection is an error.
Mask intersect_ideals(const FinStructure& s, std::span<const Mask> family);

}  // namespace snr
