#pragma once

#include <optional>
#include <vector>

#include "table.hpp"

namespace snr {

/// Which law a counterexample violates. One record type carries every
/// kind of witness in the toolkit; which fields are meaningful depends
/// on the law.
enum class Law {
  associativity,       ///< i, j = bracketing slots; args = the (2r-1)-tuple
  commutativity,       ///< i, j = swapped adjacent slots; args = the tuple
  distributivity,      ///< pos = slot t; args = a_1..a_m; extra = b-context
  closure,             ///< args escape the subset; lhs = the escaping image
  absorption,          ///< pos = slot i; args = assembled g-tuple; lhs = image
  compatibility,       ///< homomorphism violation; args = domain tuple
  congruence,          ///< pos = slot; args = tuple; extra = {replacement}
  inverse_identities,  ///< args = x, x^-1, context; pos = first deviating leg
  shift_identity,      ///< i, j = slot pair; args = context a_2..a_n
};

/// Minimal counterexample: the argument tuple(s), the two unequal
/// evaluated elements, and the positions involved where relevant.
/// Always the lexicographically first violation under the documented
/// scan order, so reruns and diffs reproduce it exactly.
struct Witness {
  Law law;
  char op = 'f';  ///< which operation the violation evaluates, 'f' or 'g'
  int i = 0;
  int j = 0;
  int pos = 0;
  std::vector<Elem> args;
  std::vector<Elem> extra;
  Elem lhs = 0;
  Elem rhs = 0;
};

struct AxiomVerdict {
  bool holds = true;
  std::optional<Witness> witness;

  static AxiomVerdict ok() { return {}; }
  static AxiomVerdict violated(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

/// r-ary associativity: the bracketing at position 1 agrees with the
/// bracketing at position j for j = 2..r, over all (2r-1)-tuples.
/// Pairwise (i, j) agreement follows through the 1-form, and the scan
/// order (j ascending, tuple ascending) reports the same first witness
/// as the full (i, j) sweep would. `symbol` only labels the witness.
AxiomVerdict check_associative(const OpTable& op, char symbol = 'f');

/// Invariance under every adjacent transposition of argument positions,
/// which generates invariance under all r! permutations. Witness: the
/// first violating swap (i, i+1) and tuple, swap slot ascending first.
AxiomVerdict check_commutative(const OpTable& op, char symbol = 'f');

/// g distributes over f in slot t (1-based):
///   g(b_1^{t-1}, f(a_1^m), b_{t+1}^n)
///     = f(g(b_1^{t-1}, a_1, b_{t+1}^n), ..., g(b_1^{t-1}, a_m, b_{t+1}^n)).
/// Sweeps (a_1..a_m, b-context) as one ascending tuple.
AxiomVerdict check_t_distributive(const FinStructure& s, int t);

/// Elements z with f(z^{i-1}, a, z^{m-i}) = a for every a and slot i.
std::vector<Elem> find_f_identities(const FinStructure& s);

/// Elements z with g(c_1^{i-1}, z, c_i^{n-1}) = z for every context and
/// every slot i (z annihilates g wherever it appears).
std::vector<Elem> find_g_zeros(const FinStructure& s);

/// Unities: elements e with g(e^{i-1}, a, e^{n-i}) = a for every a, i.
std::vector<Elem> find_g_identities(const FinStructure& s);

/// Convenience single-element form of find_g_identities.
bool is_g_identity(const FinStructure& s, Elem e);

/// Every axiom and classification flag for one structure, with witnesses
/// for each failed law.
struct ClassificationReport {
  AxiomVerdict f_associative;
  AxiomVerdict f_commutative;
  AxiomVerdict g_associative;
  std::vector<AxiomVerdict> distributive;  ///< index t-1 holds the slot-t verdict
  std::vector<int> t_snr;                  ///< slots t where (R,f,g) is a t-seminearring
  bool is_right_snr = false;               ///< 1 ∈ t_snr
  bool is_left_snr = false;                ///< n ∈ t_snr
  std::vector<Elem> f_identities;
  std::vector<Elem> g_zeros;
  std::vector<Elem> absorbing_zeros;       ///< f-identity in every slot and g-zero in every slot
  std::vector<Elem> g_identities;
  bool is_semiring = false;

  std::vector<int> distributive_positions() const;
};

ClassificationReport classify(const FinStructure& s);

}  // namespace snr
