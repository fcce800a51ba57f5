#pragma once

#include <span>
#include <utility>
#include <vector>

#include "axioms.hpp"
#include "table.hpp"

namespace snr {

inline constexpr int max_congruence_carrier = 10;  // Bell(10) = 115975 partitions

/// Partition of {0..k-1} with canonical block labels: blocks are indexed
/// by ascending least element, so class_of is a restricted growth string
/// and equal partitions compare equal.
class Partition {
public:
  /// Relabels an arbitrary element->label assignment canonically.
  static Partition from_class_of(std::span<const int> labels);

  /// Validates that the blocks are disjoint and cover {0..k-1} exactly.
  static Partition from_blocks(int k, const std::vector<std::vector<Elem>>& blocks);

  static Partition identity(int k);   ///< k singleton blocks
  static Partition universal(int k);  ///< one block

  int size() const noexcept { return static_cast<int>(class_of_.size()); }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int block_of(Elem x) const { return class_of_[x]; }
  const std::vector<int>& class_of() const noexcept { return class_of_; }
  const std::vector<std::vector<Elem>>& blocks() const noexcept { return blocks_; }
  bool same_block(Elem a, Elem b) const { return class_of_[a] == class_of_[b]; }

  /// True when every block of this partition lies inside a block of
  /// `coarser` (this is the finer relation, non-strict).
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;

private:
  Partition() = default;
  std::vector<int> class_of_;
  std::vector<std::vector<Elem>> blocks_;
};

/// Congruence criterion by single-position substitution: for each
/// operation (f then g), slot (ascending), tuple (ascending) and
/// block-mate replacement (ascending), the two results share a block.
/// Equivalent to the simultaneous-substitution definition by chaining.
/// Witness: slot, tuple, replacement, the two results (lhs/rhs) and
/// their blocks (i/j).
AxiomVerdict is_congruence(const FinStructure& s, const Partition& p);

/// Least congruence whose blocks join every seed pair: union-find over
/// the seeds, then fixpoint propagation of the substitution condition
/// through both operations.
Partition congruence_closure(const FinStructure& s,
                             std::span<const std::pair<Elem, Elem>> seed_pairs);

/// Every congruence of s, ordered coarsest-last: block count descending,
/// ties by ascending class_of. Requires carrier <= 10.
std::vector<Partition> enumerate_congruences(const FinStructure& s);

/// Factor structure on the blocks of a congruence: block indices become
/// the new elements and each table entry is computed from least
/// representatives. Well-definedness is re-verified (exhaustively for
/// k <= 6, else by 1000 seeded random representative draws), and the
/// quotient is asserted to keep every associativity/distributivity law
/// the parent satisfies.
FinStructure quotient(const FinStructure& s, const Partition& p);

}  // namespace snr
