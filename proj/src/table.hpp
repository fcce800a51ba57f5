#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snr {

/// Carrier elements are the canonical integers 0..k-1. Any external
/// naming lives in file comments only; the core never sees symbols.
using Elem = int;

inline constexpr int max_carrier = 64;
inline constexpr std::size_t max_table_entries = std::size_t{1} << 26;

/// Mixed-radix index of an argument tuple over {0..k-1}: args[0] is the
/// most significant digit, so Σ args[i]·k^(r-1-i). Bijective from valid
/// r-tuples onto 0..k^r-1, and index order equals lexicographic tuple
/// order (tables dump left-to-right the way the arguments read).
std::size_t encode_args(std::span<const Elem> args, int carrier);

/// Advances a tuple in mixed-radix ascending order (last coordinate
/// fastest). Returns false when the tuple wraps back to all zeros.
/// Every exhaustive sweep in the toolkit iterates with this, which is
/// what makes reported witnesses deterministic.
bool next_tuple(std::span<Elem> tuple, int carrier);

/// Dense table of one k-valued operation of arity r on {0..k-1},
/// row-major by mixed-radix argument index. Immutable after
/// construction and safe to share across concurrent readers.
class OpTable {
public:
  /// Validates arity >= 2, 1 <= carrier <= 64, k^arity <= 2^26, exact
  /// entry count, and every entry < carrier.
  OpTable(int arity, int carrier, std::vector<std::uint8_t> entries);

  int arity() const noexcept { return arity_; }
  int carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Table entry at a raw mixed-radix index. The index must be in range;
  /// closure of the result is guaranteed by construction, not re-checked.
  Elem entry(std::size_t index) const { return entries_[index]; }

  /// Applies the operation to a full argument tuple. Checks the arity and
  /// that every argument lies in the carrier.
  Elem eval(std::span<const Elem> args) const;

  /// Evaluates the inner application, splices its result into the hole
  /// between prefix and suffix, and evaluates the outer application:
  ///   op(prefix, op(inner), suffix).
  /// prefix/suffix must leave exactly one hole; inner is a full tuple.
  Elem eval_nested(std::span<const Elem> prefix, std::span<const Elem> inner,
                   std::span<const Elem> suffix) const;

  const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

  bool operator==(const OpTable&) const = default;

private:
  int arity_;
  int carrier_;
  std::vector<std::uint8_t> entries_;
};

/// A carrier size k together with one m-ary table f and one n-ary table
/// g over the same carrier. Immutable after construction.
class FinStructure {
public:
  /// Requires a nonempty name and f.carrier == g.carrier.
  FinStructure(std::string name, OpTable f, OpTable g);

  const std::string& name() const noexcept { return name_; }
  int carrier() const noexcept { return f_.carrier(); }
  int m() const noexcept { return f_.arity(); }
  int n() const noexcept { return g_.arity(); }
  const OpTable& f() const noexcept { return f_; }
  const OpTable& g() const noexcept { return g_; }

  Elem eval_f(std::span<const Elem> args) const { return f_.eval(args); }
  Elem eval_g(std::span<const Elem> args) const { return g_.eval(args); }

  /// True when carrier, arities and both tables coincide; the name is
  /// ignored. This is the comparison used for "equal after canonical
  /// relabeling" checks.
  bool same_tables(const FinStructure& other) const {
    return f_ == other.f_ && g_ == other.g_;
  }

  bool operator==(const FinStructure&) const = default;

private:
  std::string name_;
  OpTable f_;
  OpTable g_;
};

}  // namespace snr
