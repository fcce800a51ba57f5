#include "substructures.hpp"

#include "error.hpp"

namespace snr {

std::optional<Witness> find_closure_escape(const OpTable& op, char symbol, Mask sub) {
  const auto elems = mask_elements(sub);  // sorted, so index order is value order
  const int r = op.arity();
  std::vector<Elem> idx(r, 0), args(r);
  do {
    for (int i = 0; i < r; ++i) args[i] = elems[idx[i]];
    Elem image = op.eval(args);
    if (!mask_contains(sub, image)) {
      Witness w;
      w.law = Law::closure;
      w.op = symbol;
      w.args = args;
      w.lhs = image;
      return w;
    }
  } while (next_tuple(idx, static_cast<int>(elems.size())));
  return std::nullopt;
}

AxiomVerdict is_subseminearring(const FinStructure& s, Mask sub) {
  require_subset(s, sub);
  if (auto w = find_closure_escape(s.f(), 'f', sub)) return AxiomVerdict::violated(std::move(*w));
  if (auto w = find_closure_escape(s.g(), 'g', sub)) return AxiomVerdict::violated(std::move(*w));
  return AxiomVerdict::ok();
}

namespace {

/// Adds to `current` the images of all op-tuples over it that involve at
/// least one element of `fresh` (tuples over old elements alone were
/// closed off in earlier rounds). Returns the newly reached elements.
Mask grow(const OpTable& op, Mask current, Mask fresh) {
  const int r = op.arity();
  const auto elems = mask_elements(current);
  std::vector<Elem> idx(r, 0), args(r);
  Mask added = 0;
  do {
    bool touches_fresh = false;
    for (int i = 0; i < r; ++i) {
      args[i] = elems[idx[i]];
      touches_fresh |= mask_contains(fresh, args[i]);
    }
    if (!touches_fresh) continue;
    Elem image = op.eval(args);
    if (!mask_contains(current, image)) added |= mask_bit(image);
  } while (next_tuple(idx, static_cast<int>(elems.size())));
  return added;
}

}  // namespace

Mask sub_closure(const FinStructure& s, Mask seed) {
  require_subset(s, seed);
  Mask current = seed;
  Mask fresh = seed;  // first round must scan every tuple
  while (fresh != 0) {
    Mask added = grow(s.f(), current, fresh) | grow(s.g(), current, fresh);
    added &= ~current;
    current |= added;
    fresh = added;
  }
  return current;
}

std::vector<Mask> enumerate_subs(const FinStructure& s) {
  const int k = s.carrier();
  if (k > max_enumeration_carrier)
    fail(errc::enumeration_guard,
         "subset enumeration needs carrier <= " + std::to_string(max_enumeration_carrier) +
             ", got " + std::to_string(k));
  std::vector<Mask> out;
  const Mask full = mask_full(k);
  for (Mask sub = 1; sub <= full; ++sub)
    if (is_subseminearring(s, sub).holds) out.push_back(sub);
  return out;
}

Mask intersect_closed_family(const FinStructure& s, std::span<const Mask> family) {
  Mask meet = mask_full(s.carrier());
  for (Mask member : family) {
    if (auto v = is_subseminearring(s, member); !v.holds)
      fail(errc::invalid_argument, "family member is not closed under f and g");
    meet &= member;
  }
  if (meet == 0)
    fail(errc::empty_intersection, "the subseminearrings in the family share no element");
  if (auto v = is_subseminearring(s, meet); !v.holds)
    fail(errc::internal, "intersection of closed subsets failed to verify closed");
  return meet;
}

}  // namespace snr
