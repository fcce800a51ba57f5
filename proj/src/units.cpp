#include "units.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace snr {

namespace {

void require_unity(const FinStructure& s, Elem e) {
  if (e < 0 || e >= s.carrier())
    fail(errc::out_of_range, "unity " + std::to_string(e) + " is outside the carrier");
  if (!is_g_identity(s, e))
    fail(errc::not_identity, std::to_string(e) + " is not a g-identity");
}

/// g(a, b, e^{n-2})
Elem pad_eval(const FinStructure& s, Elem a, Elem b, Elem e) {
  std::vector<Elem> args(s.n(), e);
  args[0] = a;
  args[1] = b;
  return s.eval_g(args);
}

bool two_sided_inverse(const FinStructure& s, Elem e, Elem x, Elem a) {
  return pad_eval(s, a, x, e) == e && pad_eval(s, x, a, e) == e;
}

}  // namespace

std::optional<Elem> g_inverse(const FinStructure& s, Elem e, Elem x) {
  require_unity(s, e);
  if (x < 0 || x >= s.carrier())
    fail(errc::out_of_range, "element " + std::to_string(x) + " is outside the carrier");
  for (Elem a = 0; a < s.carrier(); ++a)
    if (two_sided_inverse(s, e, x, a)) return a;
  return std::nullopt;
}

UnitsReport units_set(const FinStructure& s, Elem e) {
  require_unity(s, e);
  UnitsReport report;
  report.unity = e;
  report.inverse_of.assign(s.carrier(), -1);
  for (Elem x = 0; x < s.carrier(); ++x) {
    int count = 0;
    for (Elem a = 0; a < s.carrier(); ++a)
      if (two_sided_inverse(s, e, x, a)) {
        if (count == 0) report.inverse_of[x] = a;
        ++count;
      }
    if (count > 0) report.units.push_back(x);
    if (count > 1) report.ambiguous.push_back(x);
  }
  return report;
}

AxiomVerdict check_inverse_identities(const FinStructure& s, Elem e, Elem x,
                                      std::span<const Elem> context) {
  auto inv = g_inverse(s, e, x);  // validates e and x
  if (!inv) fail(errc::not_unit, std::to_string(x) + " is not invertible for unity " +
                                     std::to_string(e));
  const int n = s.n();
  if (static_cast<int>(context.size()) != n - 2)
    fail(errc::arity_mismatch, "context needs " + std::to_string(n - 2) + " elements, got " +
                                   std::to_string(context.size()));

  auto lead_pair = [&](Elem a, Elem b) {
    std::vector<Elem> args{a, b};
    args.insert(args.end(), context.begin(), context.end());
    return s.eval_g(args);
  };
  auto trail_pair = [&](Elem a, Elem b) {
    std::vector<Elem> args(context.begin(), context.end());
    args.push_back(a);
    args.push_back(b);
    return s.eval_g(args);
  };
  const Elem legs[5] = {lead_pair(x, *inv), lead_pair(*inv, x), trail_pair(x, *inv),
                        trail_pair(*inv, x), trail_pair(e, e)};
  for (int leg = 1; leg < 5; ++leg) {
    if (legs[leg] == legs[0]) continue;
    Witness w;
    w.law = Law::inverse_identities;
    w.op = 'g';
    w.pos = leg + 1;
    w.args = {x, *inv};
    w.extra.assign(context.begin(), context.end());
    w.lhs = legs[0];
    w.rhs = legs[leg];
    return AxiomVerdict::violated(std::move(w));
  }
  return AxiomVerdict::ok();
}

AxiomVerdict check_shift_identity(const FinStructure& s, Elem e, std::span<const Elem> context,
                                  int i, int j) {
  require_unity(s, e);
  const int n = s.n();
  if (static_cast<int>(context.size()) != n - 1)
    fail(errc::arity_mismatch, "context needs " + std::to_string(n - 1) + " elements, got " +
                                   std::to_string(context.size()));
  if (i < 1 || j <= i || j > n)
    fail(errc::out_of_range, "need slot positions 1 <= i < j <= " + std::to_string(n));
  for (Elem a : context)
    if (a < 0 || a >= s.carrier())
      fail(errc::out_of_range, "context element outside the carrier");

  auto insert_at = [&](int pos) {
    std::vector<Elem> args(context.begin(), context.begin() + (pos - 1));
    args.push_back(e);
    args.insert(args.end(), context.begin() + (pos - 1), context.end());
    return s.eval_g(args);
  };
  Elem lhs = insert_at(i);
  Elem rhs = insert_at(j);
  if (lhs == rhs) return AxiomVerdict::ok();
  Witness w;
  w.law = Law::shift_identity;
  w.op = 'g';
  w.i = i;
  w.j = j;
  w.args.assign(context.begin(), context.end());
  w.lhs = lhs;
  w.rhs = rhs;
  return AxiomVerdict::violated(std::move(w));
}

Elem product_inverse(const FinStructure& s, Elem e, std::span<const Elem> factors) {
  require_unity(s, e);
  const int n = s.n();
  if (static_cast<int>(factors.size()) != n)
    fail(errc::arity_mismatch,
         "needs " + std::to_string(n) + " factors, got " + std::to_string(factors.size()));
  std::vector<Elem> reversed_inverses(n);
  for (int i = 0; i < n; ++i) {
    auto inv = g_inverse(s, e, factors[i]);
    if (!inv)
      fail(errc::not_unit,
           "factor " + std::to_string(factors[i]) + " is not invertible for unity " +
               std::to_string(e));
    reversed_inverses[n - 1 - i] = *inv;
  }
  Elem product = s.eval_g(factors);
  Elem candidate = s.eval_g(reversed_inverses);
  if (!two_sided_inverse(s, e, product, candidate))
    fail(errc::internal,
         "reversed-inverse product failed to invert g(a_1..a_n); the structure does not satisfy "
         "the unit-closure theorem's hypotheses");
  return candidate;
}

UnitsTheoremSummary run_units_theorems(const FinStructure& s, const UnitsReport& report) {
  const int n = s.n();
  const int k = s.carrier();
  const Elem e = report.unity;
  UnitsTheoremSummary summary;

  std::size_t contexts_small = 1;  // k^(n-2)
  for (int i = 0; i < n - 2; ++i) contexts_small *= static_cast<std::size_t>(k);
  summary.inverse_identity_checks = report.units.size() * contexts_small;
  for (Elem x : report.units) {
    std::vector<Elem> context(n - 2, 0);
    bool done = false;
    do {
      if (auto v = check_inverse_identities(s, e, x, context); !v.holds) {
        summary.inverse_identities = v;
        done = true;
        break;
      }
    } while (next_tuple(context, k));
    if (done) break;
  }

  summary.shift_checks = contexts_small * static_cast<std::size_t>(k) *
                         (static_cast<std::size_t>(n) * (n - 1) / 2);
  {
    std::vector<Elem> context(n - 1, 0);
    bool done = false;
    do {
      for (int i = 1; i <= n && !done; ++i)
        for (int j = i + 1; j <= n && !done; ++j)
          if (auto v = check_shift_identity(s, e, context, i, j); !v.holds) {
            summary.shift = v;
            done = true;
          }
    } while (!done && next_tuple(context, k));
  }

  summary.product_checks = 1;
  for (int i = 0; i < n; ++i) summary.product_checks *= report.units.size();
  {
    const int u = static_cast<int>(report.units.size());
    if (u > 0) {
      std::vector<Elem> idx(n, 0), factors(n);
      do {
        for (int i = 0; i < n; ++i) factors[i] = report.units[idx[i]];
        Elem product = s.eval_g(factors);
        if (report.inverse_of[product] < 0) {
          std::string tuple = "(";
          for (int i = 0; i < n; ++i) tuple += (i ? "," : "") + std::to_string(factors[i]);
          summary.products_closed = false;
          summary.product_failure = "g" + tuple + ")=" + std::to_string(product) +
                                    " is not a unit";
          break;
        }
        try {
          product_inverse(s, e, factors);
        } catch (const Error& err) {
          summary.products_closed = false;
          summary.product_failure = err.what();
          break;
        }
      } while (next_tuple(idx, u));
    }
  }
  return summary;
}

}  // namespace snr
