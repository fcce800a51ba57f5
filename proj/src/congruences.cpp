#include "congruences.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "error.hpp"

namespace snr {

Partition Partition::from_class_of(std::span<const int> labels) {
  if (labels.empty()) fail(errc::invalid_argument, "partition needs at least one element");
  Partition p;
  p.class_of_.assign(labels.size(), 0);
  std::unordered_map<int, int> relabel;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = relabel.try_emplace(labels[x], static_cast<int>(relabel.size()));
    if (inserted) p.blocks_.emplace_back();
    p.class_of_[x] = it->second;
    p.blocks_[it->second].push_back(static_cast<Elem>(x));
  }
  return p;
}

Partition Partition::from_blocks(int k, const std::vector<std::vector<Elem>>& blocks) {
  if (k < 1) fail(errc::invalid_argument, "partition needs at least one element");
  std::vector<int> labels(k, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(errc::invalid_argument, "partition block is empty");
    for (Elem x : blocks[b]) {
      if (x < 0 || x >= k)
        fail(errc::out_of_range, "partition element " + std::to_string(x) +
                                     " is outside the carrier 0.." + std::to_string(k - 1));
      if (labels[x] != -1)
        fail(errc::invalid_argument,
             "partition element " + std::to_string(x) + " appears in two blocks");
      labels[x] = static_cast<int>(b);
    }
  }
  for (Elem x = 0; x < k; ++x)
    if (labels[x] == -1)
      fail(errc::invalid_argument,
           "partition misses element " + std::to_string(x));
  return from_class_of(labels);
}

Partition Partition::identity(int k) {
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  return from_class_of(labels);
}

Partition Partition::universal(int k) {
  return from_class_of(std::vector<int>(k, 0));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) fail(errc::invalid_argument, "partitions cover different carriers");
  for (const auto& block : blocks_)
    for (Elem x : block)
      if (!coarser.same_block(block.front(), x)) return false;
  return true;
}

namespace {

void require_partition_of(const FinStructure& s, const Partition& p) {
  if (p.size() != s.carrier())
    fail(errc::invalid_argument, "partition covers " + std::to_string(p.size()) +
                                     " elements but the carrier has " +
                                     std::to_string(s.carrier()));
}

std::optional<Witness> find_congruence_escape(const OpTable& op, char symbol,
                                              const Partition& p) {
  const int r = op.arity();
  const int k = op.carrier();
  std::vector<Elem> args(r);
  for (int pos = 1; pos <= r; ++pos) {
    std::fill(args.begin(), args.end(), 0);
    do {
      const Elem orig = args[pos - 1];
      const Elem base = op.eval(args);
      for (Elem mate : p.blocks()[p.block_of(orig)]) {
        if (mate == orig) continue;
        args[pos - 1] = mate;
        const Elem other = op.eval(args);
        args[pos - 1] = orig;
        if (p.same_block(base, other)) continue;
        Witness w;
        w.law = Law::congruence;
        w.op = symbol;
        w.pos = pos;
        w.args = args;
        w.extra = {mate};
        w.lhs = base;
        w.rhs = other;
        w.i = p.block_of(base);
        w.j = p.block_of(other);
        return w;
      }
    } while (next_tuple(args, k));
  }
  return std::nullopt;
}

}  // namespace

AxiomVerdict is_congruence(const FinStructure& s, const Partition& p) {
  require_partition_of(s, p);
  if (auto w = find_congruence_escape(s.f(), 'f', p)) return AxiomVerdict::violated(std::move(*w));
  if (auto w = find_congruence_escape(s.g(), 'g', p)) return AxiomVerdict::violated(std::move(*w));
  return AxiomVerdict::ok();
}

namespace {

/// Union-find with path compression; the smaller root wins so roots stay
/// deterministic.
struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Partition congruence_closure(const FinStructure& s,
                             std::span<const std::pair<Elem, Elem>> seed_pairs) {
  const int k = s.carrier();
  DisjointSet sets(k);
  for (auto [a, b] : seed_pairs) {
    if (a < 0 || a >= k || b < 0 || b >= k)
      fail(errc::out_of_range, "seed pair element outside the carrier");
    sets.unite(a, b);
  }

  // Propagate: merged arguments force merged results, which can enable
  // further merges, so sweep both operations until a pass is quiet.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const OpTable* op : {&s.f(), &s.g()}) {
      const int r = op->arity();
      std::vector<Elem> args(r, 0);
      do {
        const Elem base = op->eval(args);
        for (int pos = 0; pos < r; ++pos) {
          const Elem orig = args[pos];
          for (Elem mate = 0; mate < k; ++mate) {
            if (mate == orig || sets.find(mate) != sets.find(orig)) continue;
            args[pos] = mate;
            const Elem other = op->eval(args);
            args[pos] = orig;
            changed |= sets.unite(base, other);
          }
        }
      } while (next_tuple(args, k));
    }
  }

  std::vector<int> labels(k);
  for (int x = 0; x < k; ++x) labels[x] = sets.find(x);
  return Partition::from_class_of(labels);
}

namespace {

/// Advances a restricted growth string (a[0] = 0, a[i] <= max(prefix)+1)
/// in lexicographic order; false once all strings are spent.
bool next_rgs(std::vector<int>& a) {
  const int k = static_cast<int>(a.size());
  std::vector<int> prefix_max(k, 0);
  for (int i = 1; i < k; ++i) prefix_max[i] = std::max(prefix_max[i - 1], a[i - 1]);
  for (int i = k - 1; i >= 1; --i) {
    if (a[i] <= prefix_max[i]) {
      ++a[i];
      std::fill(a.begin() + i + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Partition> enumerate_congruences(const FinStructure& s) {
  const int k = s.carrier();
  if (k > max_congruence_carrier)
    fail(errc::enumeration_guard,
         "congruence enumeration needs carrier <= " + std::to_string(max_congruence_carrier) +
             ", got " + std::to_string(k));
  std::vector<Partition> out;
  std::vector<int> rgs(k, 0);
  do {
    Partition p = Partition::from_class_of(rgs);
    if (is_congruence(s, p).holds) out.push_back(std::move(p));
  } while (next_rgs(rgs));
  // Coarsest-last; the lexicographic stream already orders ties by
  // class_of, so a stable sort on block count suffices.
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.block_count() > b.block_count();
  });
  return out;
}

namespace {

OpTable quotient_table(const OpTable& op, const Partition& p) {
  const int r = op.arity();
  const int kq = p.block_count();
  std::vector<std::uint8_t> entries;
  std::vector<Elem> block_tuple(r, 0), args(r);
  do {
    for (int i = 0; i < r; ++i) args[i] = p.blocks()[block_tuple[i]].front();
    entries.push_back(static_cast<std::uint8_t>(p.block_of(op.eval(args))));
  } while (next_tuple(block_tuple, kq));
  return OpTable(r, kq, std::move(entries));
}

/// Well-definedness: every argument tuple is a representative choice for
/// its block tuple, so its image block must match the table entry.
void verify_well_defined(const OpTable& op, const OpTable& qop, const Partition& p,
                         std::mt19937& rng) {
  const int r = op.arity();
  const int k = op.carrier();
  const int kq = p.block_count();
  auto check = [&](std::span<const Elem> args) {
    std::vector<Elem> block_tuple(r);
    for (int i = 0; i < r; ++i) block_tuple[i] = p.block_of(args[i]);
    if (qop.entry(encode_args(block_tuple, kq)) != p.block_of(op.eval(args)))
      fail(errc::internal, "quotient table is not well-defined despite a congruence verdict");
  };
  if (k <= 6) {
    std::vector<Elem> args(r, 0);
    do check(args);
    while (next_tuple(args, k));
  } else {
    std::vector<Elem> args(r);
    for (int draw = 0; draw < 1000; ++draw) {
      // rng() % k rather than a distribution keeps the draw sequence
      // identical across standard libraries
      for (int i = 0; i < r; ++i) args[i] = static_cast<Elem>(rng() % k);
      check(args);
    }
  }
}

}  // namespace

FinStructure quotient(const FinStructure& s, const Partition& p) {
  require_partition_of(s, p);
  if (auto v = is_congruence(s, p); !v.holds)
    fail(errc::not_congruence, "partition is not a congruence, so the factor tables would be "
                               "ill-defined");

  OpTable fq = quotient_table(s.f(), p);
  OpTable gq = quotient_table(s.g(), p);
  std::mt19937 rng(0x5EED);
  verify_well_defined(s.f(), fq, p, rng);
  verify_well_defined(s.g(), gq, p, rng);
  FinStructure q(s.name() + "_quot", std::move(fq), std::move(gq));

  // The factor structure keeps every law the parent satisfies.
  if (check_associative(s.f()).holds && !check_associative(q.f(), 'f').holds)
    fail(errc::internal, "quotient lost f-associativity");
  if (check_associative(s.g()).holds && !check_associative(q.g(), 'g').holds)
    fail(errc::internal, "quotient lost g-associativity");
  for (int t = 1; t <= s.n(); ++t)
    if (check_t_distributive(s, t).holds && !check_t_distributive(q, t).holds)
      fail(errc::internal, "quotient lost distributivity at slot " + std::to_string(t));
  return q;
}

}  // namespace snr
