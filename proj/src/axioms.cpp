#include "axioms.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace snr {

AxiomVerdict check_associative(const OpTable& op, char symbol) {
  const int r = op.arity();
  const int k = op.carrier();
  // 1-form vs j-form; a failing pair (i, j) with i > 1 would contradict
  // the 1-forms agreeing, so the first witness of this scan equals the
  // first witness of the full (i, j) sweep.
  for (int j = 2; j <= r; ++j) {
    std::vector<Elem> a(static_cast<std::size_t>(2 * r - 1), 0);
    const std::span<const Elem> all(a);
    do {
      const Elem one_form = op.eval_nested({}, all.subspan(0, r), all.subspan(r));
      const Elem j_form = op.eval_nested(all.subspan(0, j - 1), all.subspan(j - 1, r),
                                         all.subspan(j - 1 + r));
      if (one_form != j_form) {
        Witness w{.law = Law::associativity, .op = symbol, .i = 1, .j = j,
                  .args = a, .lhs = one_form, .rhs = j_form};
        return AxiomVerdict::violated(std::move(w));
      }
    } while (next_tuple(a, k));
  }
  return AxiomVerdict::ok();
}

AxiomVerdict check_commutative(const OpTable& op, char symbol) {
  const int r = op.arity();
  const int k = op.carrier();
  // Adjacent transpositions generate the symmetric group; the full
  // permutation sweep lives in tests as an oracle.
  for (int p = 1; p < r; ++p) {
    std::vector<Elem> a(static_cast<std::size_t>(r), 0);
    do {
      std::vector<Elem> swapped = a;
      std::swap(swapped[p - 1], swapped[p]);
      const Elem lhs = op.eval(a);
      const Elem rhs = op.eval(swapped);
      if (lhs != rhs) {
        Witness w{.law = Law::commutativity, .op = symbol, .i = p, .j = p + 1,
                  .args = a, .lhs = lhs, .rhs = rhs};
        return AxiomVerdict::violated(std::move(w));
      }
    } while (next_tuple(a, k));
  }
  return AxiomVerdict::ok();
}

AxiomVerdict check_t_distributive(const FinStructure& s, int t) {
  const int m = s.m();
  const int n = s.n();
  const int k = s.carrier();
  if (t < 1 || t > n)
    fail(errc::out_of_range,
         "distributive slot " + std::to_string(t) + " outside 1.." + std::to_string(n));

  std::vector<Elem> tuple(static_cast<std::size_t>(m + n - 1), 0);
  std::vector<Elem> gargs(static_cast<std::size_t>(n));
  std::vector<Elem> fargs(static_cast<std::size_t>(m));
  do {
    const std::span<const Elem> a(tuple.data(), static_cast<std::size_t>(m));
    const std::span<const Elem> b(tuple.data() + m, static_cast<std::size_t>(n - 1));

    // g(b_1^{t-1}, f(a_1^m), b_{t+1}^n)
    std::copy(b.begin(), b.begin() + (t - 1), gargs.begin());
    gargs[t - 1] = s.eval_f(a);
    std::copy(b.begin() + (t - 1), b.end(), gargs.begin() + t);
    const Elem lhs = s.eval_g(gargs);

    // f(g(b_1^{t-1}, a_1, b_{t+1}^n), ..., g(..., a_m, ...))
    for (int i = 0; i < m; ++i) {
      gargs[t - 1] = a[i];
      fargs[i] = s.eval_g(gargs);
    }
    const Elem rhs = s.eval_f(fargs);

    if (lhs != rhs) {
      Witness w{.law = Law::distributivity, .op = 'g', .pos = t,
                .args = std::vector<Elem>(a.begin(), a.end()),
                .extra = std::vector<Elem>(b.begin(), b.end()),
                .lhs = lhs, .rhs = rhs};
      return AxiomVerdict::violated(std::move(w));
    }
  } while (next_tuple(tuple, k));
  return AxiomVerdict::ok();
}

namespace {

// z placed in every slot of op, constant elsewhere: op(z^{i-1}, a, z^{r-i}) = a.
bool neutral_in_every_slot(const OpTable& op, Elem z) {
  const int r = op.arity();
  std::vector<Elem> args(static_cast<std::size_t>(r), z);
  for (int i = 1; i <= r; ++i) {
    for (Elem a = 0; a < op.carrier(); ++a) {
      args[i - 1] = a;
      if (op.eval(args) != a) return false;
      args[i - 1] = z;
    }
  }
  return true;
}

// z absorbing in every slot: op(c_1^{i-1}, z, c_i^{r-1}) = z for all contexts.
bool absorbing_in_every_slot(const OpTable& op, Elem z) {
  const int r = op.arity();
  const int k = op.carrier();
  std::vector<Elem> args(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    std::vector<Elem> context(static_cast<std::size_t>(r - 1), 0);
    do {
      std::copy(context.begin(), context.begin() + (i - 1), args.begin());
      args[i - 1] = z;
      std::copy(context.begin() + (i - 1), context.end(), args.begin() + i);
      if (op.eval(args) != z) return false;
    } while (next_tuple(context, k));
  }
  return true;
}

}  // namespace

std::vector<Elem> find_f_identities(const FinStructure& s) {
  std::vector<Elem> out;
  for (Elem z = 0; z < s.carrier(); ++z)
    if (neutral_in_every_slot(s.f(), z)) out.push_back(z);
  return out;
}

std::vector<Elem> find_g_zeros(const FinStructure& s) {
  std::vector<Elem> out;
  for (Elem z = 0; z < s.carrier(); ++z)
    if (absorbing_in_every_slot(s.g(), z)) out.push_back(z);
  return out;
}

std::vector<Elem> find_g_identities(const FinStructure& s) {
  std::vector<Elem> out;
  for (Elem e = 0; e < s.carrier(); ++e)
    if (neutral_in_every_slot(s.g(), e)) out.push_back(e);
  return out;
}

bool is_g_identity(const FinStructure& s, Elem e) {
  if (e < 0 || e >= s.carrier()) return false;
  return neutral_in_every_slot(s.g(), e);
}

std::vector<int> ClassificationReport::distributive_positions() const {
  std::vector<int> out;
  for (int t = 1; t <= static_cast<int>(distributive.size()); ++t)
    if (distributive[t - 1].holds) out.push_back(t);
  return out;
}

namespace {

// The semiring zero condition is weaker on the f side than an absorbing
// zero: only f(a, z^{m-1}) = a is required.
bool has_semiring_zero(const FinStructure& s, const std::vector<Elem>& g_zeros) {
  for (Elem z : g_zeros) {
    std::vector<Elem> args(static_cast<std::size_t>(s.m()), z);
    bool neutral = true;
    for (Elem a = 0; a < s.carrier() && neutral; ++a) {
      args[0] = a;
      neutral = s.eval_f(args) == a;
    }
    if (neutral) return true;
  }
  return false;
}

}  // namespace

ClassificationReport classify(const FinStructure& s) {
  ClassificationReport rep;
  rep.f_associative = check_associative(s.f(), 'f');
  rep.f_commutative = check_commutative(s.f(), 'f');
  rep.g_associative = check_associative(s.g(), 'g');

  const int n = s.n();
  rep.distributive.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) rep.distributive.push_back(check_t_distributive(s, t));

  const bool semigroups = rep.f_associative.holds && rep.g_associative.holds;
  for (int t = 1; t <= n; ++t)
    if (semigroups && rep.distributive[t - 1].holds) rep.t_snr.push_back(t);
  rep.is_right_snr = std::ranges::count(rep.t_snr, 1) > 0;
  rep.is_left_snr = std::ranges::count(rep.t_snr, n) > 0;

  rep.f_identities = find_f_identities(s);
  rep.g_zeros = find_g_zeros(s);
  rep.g_identities = find_g_identities(s);
  std::ranges::set_intersection(rep.f_identities, rep.g_zeros,
                                std::back_inserter(rep.absorbing_zeros));

  const bool fully_distributive =
      static_cast<int>(rep.distributive_positions().size()) == n;
  rep.is_semiring = rep.f_commutative.holds && semigroups && fully_distributive &&
                    has_semiring_zero(s, rep.g_zeros);
  return rep;
}

}  // namespace snr
