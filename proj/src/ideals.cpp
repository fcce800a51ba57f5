#include "ideals.hpp"

#include <optional>
#include <string>

#include "error.hpp"
#include "substructures.hpp"

namespace snr {

namespace {

void require_position(const FinStructure& s, int i) {
  if (i < 1 || i > s.n())
    fail(errc::out_of_range,
         "ideal position must lie in 1.." + std::to_string(s.n()) + ", got " + std::to_string(i));
}

/// First absorption failure at slot i: x ascending over sub, context
/// tuple over the full carrier in mixed-radix order. The witness holds
/// the assembled g-tuple.
std::optional<Witness> find_absorption_escape(const FinStructure& s, Mask sub, int i) {
  const int n = s.n();
  const int k = s.carrier();
  std::vector<Elem> args(n);
  for (Elem x : mask_elements(sub)) {
    args.assign(n, 0);
    args[i - 1] = x;
    do {
      Elem image = s.eval_g(args);
      if (!mask_contains(sub, image)) {
        Witness w;
        w.law = Law::absorption;
        w.op = 'g';
        w.pos = i;
        w.args = args;
        w.lhs = image;
        return w;
      }
      // advance the n-1 context digits around the fixed slot
      int p = n - 1;
      while (p >= 0) {
        if (p == i - 1) {
          --p;
          continue;
        }
        if (args[p] + 1 < k) {
          ++args[p];
          break;
        }
        args[p--] = 0;
      }
      if (p < 0) break;
    } while (true);
  }
  return std::nullopt;
}

}  // namespace

AxiomVerdict is_i_ideal(const FinStructure& s, Mask sub, int i) {
  require_position(s, i);
  if (auto closed = is_subseminearring(s, sub); !closed.holds) return closed;
  if (auto w = find_absorption_escape(s, sub, i)) return AxiomVerdict::violated(std::move(*w));
  return AxiomVerdict::ok();
}

AxiomVerdict is_ideal(const FinStructure& s, Mask sub) {
  require_subset(s, sub);
  if (auto w = find_closure_escape(s.f(), 'f', sub)) return AxiomVerdict::violated(std::move(*w));
  for (int i = 1; i <= s.n(); ++i)
    if (auto w = find_absorption_escape(s, sub, i)) return AxiomVerdict::violated(std::move(*w));
  return AxiomVerdict::ok();
}

namespace {

/// f-images of tuples inside `current` that touch `fresh`; g-images with
/// the fixed slot ranging over `fresh` and the context over the carrier.
Mask ideal_round(const FinStructure& s, Mask current, Mask fresh) {
  Mask added = 0;

  const auto elems = mask_elements(current);
  const int m = s.m();
  std::vector<Elem> idx(m, 0), fargs(m);
  do {
    bool touches_fresh = false;
    for (int i = 0; i < m; ++i) {
      fargs[i] = elems[idx[i]];
      touches_fresh |= mask_contains(fresh, fargs[i]);
    }
    if (!touches_fresh) continue;
    Elem image = s.eval_f(fargs);
    if (!mask_contains(current, image)) added |= mask_bit(image);
  } while (next_tuple(idx, static_cast<int>(elems.size())));

  const int n = s.n();
  const int k = s.carrier();
  std::vector<Elem> context(n - 1, 0), gargs(n);
  for (int slot = 1; slot <= n; ++slot) {
    for (Elem x : mask_elements(fresh)) {
      std::fill(context.begin(), context.end(), 0);
      do {
        for (int i = 0, c = 0; i < n; ++i) gargs[i] = (i == slot - 1) ? x : context[c++];
        Elem image = s.eval_g(gargs);
        if (!mask_contains(current, image)) added |= mask_bit(image);
      } while (next_tuple(context, k));
    }
  }
  return added;
}

}  // namespace

Mask ideal_closure(const FinStructure& s, Mask seed) {
  require_subset(s, seed);
  Mask current = seed;
  Mask fresh = seed;
  while (fresh != 0) {
    Mask added = ideal_round(s, current, fresh) & ~current;
    current |= added;
    fresh = added;
  }
  return current;
}

std::vector<Mask> enumerate_ideals(const FinStructure& s, std::span<const int> positions) {
  const int k = s.carrier();
  if (k > max_enumeration_carrier)
    fail(errc::enumeration_guard,
         "ideal enumeration needs carrier <= " + std::to_string(max_enumeration_carrier) +
             ", got " + std::to_string(k));
  std::vector<int> slots(positions.begin(), positions.end());
  if (slots.empty())
    for (int i = 1; i <= s.n(); ++i) slots.push_back(i);
  for (int i : slots) require_position(s, i);

  std::vector<Mask> out;
  const Mask full = mask_full(k);
  for (Mask sub = 1; sub <= full; ++sub) {
    if (!is_subseminearring(s, sub).holds) continue;
    bool all = true;
    for (int i : slots)
      if (find_absorption_escape(s, sub, i)) {
        all = false;
        break;
      }
    if (all) out.push_back(sub);
  }
  return out;
}

Mask intersect_ideals(const FinStructure& s, std::span<const Mask> family) {
  Mask meet = mask_full(s.carrier());
  for (Mask member : family) {
    if (auto v = is_ideal(s, member); !v.holds)
      fail(errc::not_ideal, "family member is not an ideal");
    meet &= member;
  }
  if (meet == 0) fail(errc::empty_intersection, "the ideals in the family share no element");
  if (auto v = is_ideal(s, meet); !v.holds)
    fail(errc::internal, "intersection of ideals failed to verify as an ideal");
  return meet;
}

}  // namespace snr
