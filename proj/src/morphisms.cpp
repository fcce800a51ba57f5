#include "morphisms.hpp"

#include <string>

#include "error.hpp"
#include "ideals.hpp"
#include "substructures.hpp"

namespace snr {

namespace {

void require_shape(const Morphism& psi) {
  if (psi.domain == nullptr || psi.codomain == nullptr)
    fail(errc::invalid_argument, "morphism is missing its domain or codomain");
  const FinStructure& dom = *psi.domain;
  const FinStructure& cod = *psi.codomain;
  if (dom.m() != cod.m() || dom.n() != cod.n())
    fail(errc::arity_mismatch, "domain is (" + std::to_string(dom.m()) + "," +
                                   std::to_string(dom.n()) + ")-ary but codomain is (" +
                                   std::to_string(cod.m()) + "," + std::to_string(cod.n()) + ")");
  if (static_cast<int>(psi.map.size()) != dom.carrier())
    fail(errc::invalid_argument, "map assigns " + std::to_string(psi.map.size()) +
                                     " elements but the domain carrier has " +
                                     std::to_string(dom.carrier()));
  for (Elem y : psi.map)
    if (y < 0 || y >= cod.carrier())
      fail(errc::out_of_range, "map image " + std::to_string(y) + " is outside the codomain");
}

std::optional<Witness> find_compatibility_escape(const OpTable& dom_op, const OpTable& cod_op,
                                                 char symbol, std::span<const Elem> map) {
  const int r = dom_op.arity();
  std::vector<Elem> args(r, 0), mapped(r);
  do {
    for (int i = 0; i < r; ++i) mapped[i] = map[args[i]];
    const Elem lhs = map[dom_op.eval(args)];
    const Elem rhs = cod_op.eval(mapped);
    if (lhs != rhs) {
      Witness w;
      w.law = Law::compatibility;
      w.op = symbol;
      w.args = args;
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }
  } while (next_tuple(args, dom_op.carrier()));
  return std::nullopt;
}

void require_homomorphism(const Morphism& psi) {
  if (auto v = is_homomorphism(psi); !v.holds)
    fail(errc::not_homomorphism, "the map is not a homomorphism");
}

bool is_surjective(const Morphism& psi) {
  Mask hit = 0;
  for (Elem y : psi.map) hit |= mask_bit(y);
  return hit == mask_full(psi.codomain->carrier());
}

}  // namespace

AxiomVerdict is_homomorphism(const Morphism& psi) {
  require_shape(psi);
  if (auto w = find_compatibility_escape(psi.domain->f(), psi.codomain->f(), 'f', psi.map))
    return AxiomVerdict::violated(std::move(*w));
  if (auto w = find_compatibility_escape(psi.domain->g(), psi.codomain->g(), 'g', psi.map))
    return AxiomVerdict::violated(std::move(*w));
  return AxiomVerdict::ok();
}

MorphismFlags classify_morphism(const Morphism& psi) {
  require_homomorphism(psi);
  Mask hit = 0;
  bool mono = true;
  for (Elem y : psi.map) {
    if (mask_contains(hit, y)) mono = false;
    hit |= mask_bit(y);
  }
  MorphismFlags flags;
  flags.mono = mono;
  flags.epi = hit == mask_full(psi.codomain->carrier());
  flags.iso = flags.mono && flags.epi;
  return flags;
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
  require_homomorphism(phi);
  require_homomorphism(psi);
  if (!psi.codomain->same_tables(*phi.domain))
    fail(errc::domain_mismatch, "codomain of the inner map differs from domain of the outer map");
  Morphism out;
  out.domain = psi.domain;
  out.codomain = phi.codomain;
  out.map.reserve(psi.map.size());
  for (Elem y : psi.map) out.map.push_back(phi.map[y]);
  if (auto v = is_homomorphism(out); !v.holds)
    fail(errc::internal, "composite of two homomorphisms failed to verify");
  return out;
}

namespace {

/// Checks every operation tuple that became decidable once psi(0..d) is
/// assigned: all arguments and the result lie in 0..d, and the tuple
/// involves d (as argument or result) so earlier depths already covered
/// the rest.
bool consistent_at(const FinStructure& dom, const FinStructure& cod,
                   std::span<const Elem> partial, int d) {
  for (const OpTable* ops : {&dom.f(), &dom.g()}) {
    const OpTable& dom_op = *ops;
    const OpTable& cod_op = (ops == &dom.f()) ? cod.f() : cod.g();
    const int r = dom_op.arity();
    std::vector<Elem> args(r, 0), mapped(r);
    do {
      const Elem result = dom_op.eval(args);
      if (result > d) continue;
      bool involves_new = result == d;
      for (int i = 0; i < r && !involves_new; ++i) involves_new = args[i] == d;
      if (!involves_new) continue;
      for (int i = 0; i < r; ++i) mapped[i] = partial[args[i]];
      if (cod_op.eval(mapped) != partial[result]) return false;
    } while (next_tuple(args, d + 1));
  }
  return true;
}

}  // namespace

std::vector<Morphism> find_homomorphisms(const FinStructure& dom, const FinStructure& cod,
                                         std::optional<std::size_t> limit) {
  if (dom.m() != cod.m() || dom.n() != cod.n())
    fail(errc::arity_mismatch, "structures have different operation arities");
  const int k1 = dom.carrier();
  const int k2 = cod.carrier();
  if (!limit) {
    std::size_t space = 1;
    bool too_big = false;
    for (int i = 0; i < k1 && !too_big; ++i) {
      space *= static_cast<std::size_t>(k2);
      too_big = space > (std::size_t{1} << 24);
    }
    if (too_big)
      fail(errc::search_guard,
           "map space " + std::to_string(k2) + "^" + std::to_string(k1) +
               " exceeds 2^24; pass a limit to search anyway");
  }

  std::vector<Morphism> found;
  if (limit && *limit == 0) return found;
  std::vector<Elem> partial(k1, -1);
  int d = 0;
  while (d >= 0) {
    if (++partial[d] >= k2) {
      partial[d] = -1;
      --d;
      continue;
    }
    if (!consistent_at(dom, cod, partial, d)) continue;
    if (d + 1 < k1) {
      ++d;
      continue;
    }
    found.push_back({&dom, &cod, partial});
    if (limit && found.size() >= *limit) break;
  }
  return found;
}

Mask image(const Morphism& psi) {
  require_homomorphism(psi);
  Mask img = 0;
  for (Elem y : psi.map) img |= mask_bit(y);
  if (auto v = is_subseminearring(*psi.codomain, img); !v.holds)
    fail(errc::internal, "homomorphic image failed to verify as a subseminearring");
  return img;
}

Mask push_ideal(const Morphism& psi, Mask ideal) {
  require_homomorphism(psi);
  if (!is_surjective(psi))
    fail(errc::not_epimorphism, "pushing an ideal forward needs a surjective homomorphism");
  if (auto v = is_ideal(*psi.domain, ideal); !v.holds)
    fail(errc::not_ideal, "the subset is not an ideal of the domain");
  Mask out = 0;
  for (Elem x : mask_elements(ideal)) out |= mask_bit(psi.map[x]);
  if (auto v = is_ideal(*psi.codomain, out); !v.holds)
    fail(errc::internal, "pushed ideal failed to verify as an ideal of the codomain");
  return out;
}

Partition kernel(const Morphism& psi) {
  require_homomorphism(psi);
  Partition p = Partition::from_class_of(psi.map);
  if (auto v = is_congruence(*psi.domain, p); !v.holds)
    fail(errc::internal, "kernel failed to verify as a congruence");
  return p;
}

}  // namespace snr
