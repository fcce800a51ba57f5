#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axioms.hpp"
#include "congruences.hpp"
#include "mask.hpp"
#include "table.hpp"

namespace snr {

/// Total map between two structures of equal arities. Holds non-owning
/// references; the structures must outlive the morphism.
struct Morphism {
  const FinStructure* domain = nullptr;
  const FinStructure* codomain = nullptr;
  std::vector<Elem> map;  ///< map[x] = image of x, size = domain carrier
};

struct MorphismFlags {
  bool mono = false;  ///< injective
  bool epi = false;   ///< surjective
  bool iso = false;   ///< bijective
};

/// Compatibility with both operations: the image of every f-application
/// equals f' of the images, likewise for g. f-tuples are scanned before
/// g-tuples, ascending; the witness carries the first violating domain
/// tuple with both evaluated codomain elements.
AxiomVerdict is_homomorphism(const Morphism& psi);

/// mono/epi/iso flags of a verified homomorphism.
MorphismFlags classify_morphism(const Morphism& psi);

/// phi after psi, where psi: R -> S and phi: S -> T; the composite is
/// re-verified as a homomorphism (the composition theorem).
Morphism compose(const Morphism& phi, const Morphism& psi);

/// Every homomorphism dom -> cod in lexicographic map order, truncated
/// at `limit` when given. Backtracks over partial maps psi(0), psi(1),
/// ... with operation-compatibility forward checking. Without a limit
/// the search space k2^k1 must stay within 2^24.
std::vector<Morphism> find_homomorphisms(const FinStructure& dom, const FinStructure& cod,
                                         std::optional<std::size_t> limit = std::nullopt);

/// Image subset of the codomain, re-verified closed under f' and g'
/// (the image theorem).
Mask image(const Morphism& psi);

/// Image of a domain ideal under an epimorphism, re-verified as an
/// ideal of the codomain (the ideal-image theorem). Requires psi
/// surjective and `ideal` to pass is_ideal in the domain.
Mask push_ideal(const Morphism& psi, Mask ideal);

/// Fiber partition {(a, b) : psi(a) = psi(b)} of the domain carrier,
/// re-verified as a congruence (the kernel theorem).
Partition kernel(const Morphism& psi);

}  // namespace snr
