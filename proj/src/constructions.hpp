#pragma once

#include "table.hpp"

namespace snr {

/// Powerset structure on a base set of `base_size` elements: the carrier
/// is all 2^base_size subsets encoded as bitmasks, f folds bitwise union
/// over m arguments and g folds bitwise intersection over n arguments.
FinStructure gen_powerset(int base_size, int m, int n);

/// Residue structure on Z_q: f is the m-fold sum mod q, g the n-fold
/// product mod q.
FinStructure gen_modring(int q, int m, int n);

/// Pairs over Z_q with m = 2, n = 3. Pair (a, b) is encoded as q*a + b.
/// f adds componentwise; g((a1,b1),(a2,b2),(a3,b3)) =
/// (a1*a2*a3, b1*a2*a3 + b2*a3 + b3), all mod q. Left-distributive but
/// not right-distributive once q >= 2.
FinStructure gen_affine(int q);

/// Componentwise product structure on pairs (x, y), encoded k2*x + y.
/// Requires equal arities on both factors.
FinStructure direct_product(const FinStructure& s1, const FinStructure& s2);

}  // namespace snr
