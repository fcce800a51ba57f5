#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "axioms.hpp"
#include "constructions.hpp"
#include "doctest.h"
#include "error.hpp"
#include "table.hpp"

using namespace snr;

namespace {

// --- independent oracles -------------------------------------------------

// op(a_1..a_{i-1}, op(a_i..a_{i+r-1}), a_{i+r}..) built by hand.
Elem oracle_bracket(const OpTable& op, const std::vector<Elem>& all, int i) {
  const int r = op.arity();
  std::vector<Elem> inner(all.begin() + (i - 1), all.begin() + (i - 1) + r);
  std::vector<Elem> outer(all.begin(), all.begin() + (i - 1));
  outer.push_back(op.eval(inner));
  outer.insert(outer.end(), all.begin() + (i - 1) + r, all.end());
  return op.eval(outer);
}

struct AssocOracleWitness {
  int i, j;
  std::vector<Elem> args;
};

// Full pairwise sweep: every bracketing pair (i, j), i < j, every tuple.
std::optional<AssocOracleWitness> assoc_oracle(const OpTable& op) {
  const int r = op.arity();
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      std::vector<Elem> all(static_cast<std::size_t>(2 * r - 1), 0);
      do {
        if (oracle_bracket(op, all, i) != oracle_bracket(op, all, j))
          return AssocOracleWitness{i, j, all};
      } while (next_tuple(all, op.carrier()));
    }
  return std::nullopt;
}

// Invariance under all r! argument permutations.
bool comm_oracle(const OpTable& op) {
  const int r = op.arity();
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Elem> args(static_cast<std::size_t>(r), 0), permuted(r);
    do {
      for (int i = 0; i < r; ++i) permuted[i] = args[perm[i]];
      if (op.eval(args) != op.eval(permuted)) return false;
    } while (next_tuple(args, op.carrier()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

struct DistOracleWitness {
  std::vector<Elem> a, context;
  Elem lhs, rhs;
};

// Literal transcription of slot-t distributivity with hand-built tuples.
std::optional<DistOracleWitness> dist_oracle(const FinStructure& s, int t) {
  const int m = s.m();
  const int n = s.n();
  std::vector<Elem> a(static_cast<std::size_t>(m), 0);
  do {
    std::vector<Elem> context(static_cast<std::size_t>(n - 1), 0);
    do {
      auto g_with = [&](Elem hole) {
        std::vector<Elem> gargs(context.begin(), context.begin() + (t - 1));
        gargs.push_back(hole);
        gargs.insert(gargs.end(), context.begin() + (t - 1), context.end());
        return s.eval_g(gargs);
      };
      const Elem lhs = g_with(s.eval_f(a));
      std::vector<Elem> fargs;
      for (Elem ai : a) fargs.push_back(g_with(ai));
      const Elem rhs = s.eval_f(fargs);
      if (lhs != rhs) return DistOracleWitness{a, context, lhs, rhs};
    } while (next_tuple(context, s.carrier()));
  } while (next_tuple(a, s.carrier()));
  return std::nullopt;
}

// Every k=2 table of the given arity, lexicographic by entry vector.
std::vector<OpTable> all_binary_tables(int arity) {
  const std::size_t size = std::size_t{1} << arity;
  std::vector<OpTable> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << size); ++bits) {
    std::vector<std::uint8_t> entries(size);
    for (std::size_t i = 0; i < size; ++i) entries[i] = (bits >> i) & 1;
    out.emplace_back(arity, 2, std::move(entries));
  }
  return out;
}

OpTable nand_table() { return OpTable(2, 2, {1, 1, 1, 0}); }

}  // namespace

TEST_CASE("associativity check agrees with the full pairwise oracle on every "
          "2-element table of arity 2 and 3") {
  for (int arity : {2, 3}) {
    for (const OpTable& op : all_binary_tables(arity)) {
      const AxiomVerdict verdict = check_associative(op);
      const auto oracle = assoc_oracle(op);
      REQUIRE(verdict.holds == !oracle.has_value());
      if (oracle) {
        // identical first witness: pair and tuple
        CHECK(verdict.witness->i == oracle->i);
        CHECK(verdict.witness->j == oracle->j);
        CHECK(verdict.witness->args == oracle->args);
      }
    }
  }
}

TEST_CASE("commutativity check agrees with the all-permutations oracle") {
  for (int arity : {2, 3}) {
    for (const OpTable& op : all_binary_tables(arity)) {
      CHECK(check_commutative(op).holds == comm_oracle(op));
    }
  }
}

TEST_CASE("NAND fails associativity with the first tuple (0,0,1)") {
  const AxiomVerdict verdict = check_associative(nand_table(), 'f');
  REQUIRE_FALSE(verdict.holds);
  const Witness& w = *verdict.witness;
  CHECK(w.law == Law::associativity);
  CHECK(w.op == 'f');
  CHECK(w.i == 1);
  CHECK(w.j == 2);
  CHECK(w.args == std::vector<Elem>{0, 0, 1});
  CHECK(w.lhs == 0);  // f(f(0,0),1) = f(1,1) = 0
  CHECK(w.rhs == 1);  // f(0,f(0,1)) = f(0,1) = 1
}

TEST_CASE("max fails 1-slot distributivity over plus mod 3") {
  // f = + mod 3, g = max: max(a+b, c) vs max(a,c) + max(b,c)
  OpTable plus3(2, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  OpTable max3(2, 3, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  FinStructure s("plusmax", plus3, max3);
  const AxiomVerdict verdict = check_t_distributive(s, 1);
  const auto oracle = dist_oracle(s, 1);
  REQUIRE_FALSE(verdict.holds);
  REQUIRE(oracle.has_value());
  CHECK(verdict.witness->args == oracle->a);
  CHECK(verdict.witness->extra == oracle->context);
  CHECK(verdict.witness->lhs == oracle->lhs);
  CHECK(verdict.witness->rhs == oracle->rhs);
}

TEST_CASE("distributivity check agrees with the hand-built oracle across the corpus") {
  const FinStructure corpus[] = {gen_powerset(1, 2, 2), gen_powerset(2, 2, 3),
                                 gen_modring(3, 2, 2), gen_modring(4, 2, 2),
                                 gen_modring(5, 2, 3), gen_affine(2), gen_affine(3)};
  for (const FinStructure& s : corpus) {
    for (int t = 1; t <= s.n(); ++t) {
      const AxiomVerdict verdict = check_t_distributive(s, t);
      const auto oracle = dist_oracle(s, t);
      REQUIRE(verdict.holds == !oracle.has_value());
      if (oracle) {
        CHECK(verdict.witness->pos == t);
        CHECK(verdict.witness->args == oracle->a);
        CHECK(verdict.witness->extra == oracle->context);
        CHECK(verdict.witness->lhs == oracle->lhs);
        CHECK(verdict.witness->rhs == oracle->rhs);
      }
    }
  }
}

TEST_CASE("distributive slot index is validated") {
  FinStructure s = gen_modring(3, 2, 2);
  CHECK_THROWS_AS(check_t_distributive(s, 0), Error);
  CHECK_THROWS_AS(check_t_distributive(s, 3), Error);
}

TEST_CASE("identity and zero finders on modular structures") {
  // m = 3: z is an f-identity iff 2z = 0 mod 4, so {0, 2}
  FinStructure z4 = gen_modring(4, 3, 2);
  CHECK(find_f_identities(z4) == std::vector<Elem>{0, 2});
  CHECK(find_g_zeros(z4) == std::vector<Elem>{0});

  // n = 3: e is a unity iff e^2 = 1 mod 5, so {1, 4}
  FinStructure z5 = gen_modring(5, 2, 3);
  CHECK(find_g_identities(z5) == std::vector<Elem>{1, 4});
  CHECK(is_g_identity(z5, 4));
  CHECK_FALSE(is_g_identity(z5, 2));
  CHECK_FALSE(is_g_identity(z5, -1));
  CHECK_FALSE(is_g_identity(z5, 5));
}

TEST_CASE("classify on gen_affine(3) matches the worked example") {
  const FinStructure s = gen_affine(3);
  const ClassificationReport rep = classify(s);
  CHECK(rep.f_associative.holds);
  CHECK(rep.f_commutative.holds);
  CHECK(rep.g_associative.holds);
  CHECK(rep.distributive_positions() == std::vector<int>{3});
  CHECK(rep.t_snr == std::vector<int>{3});
  CHECK_FALSE(rep.is_right_snr);
  CHECK(rep.is_left_snr);
  CHECK(rep.f_identities == std::vector<Elem>{0});
  CHECK(rep.g_zeros.empty());
  CHECK(rep.absorbing_zeros.empty());
  CHECK(rep.g_identities == std::vector<Elem>{3});  // enc(1,0)
  CHECK_FALSE(rep.is_semiring);

  // frozen first counterexample of slot 1: a = (0,0), context b_2 = 0,
  // b_3 = enc(0,1); g(f(0,0),0,1) = 1 but f(g(0,0,1), g(0,0,1)) = 2
  const Witness& w = *rep.distributive[0].witness;
  CHECK(w.pos == 1);
  CHECK(w.args == std::vector<Elem>{0, 0});
  CHECK(w.extra == std::vector<Elem>{0, 1});
  CHECK(w.lhs == 1);
  CHECK(w.rhs == 2);
}

TEST_CASE("classify on gen_powerset(2,2,3) reports a semiring") {
  const ClassificationReport rep = classify(gen_powerset(2, 2, 3));
  CHECK(rep.t_snr == std::vector<int>{1, 2, 3});
  CHECK(rep.is_right_snr);
  CHECK(rep.is_left_snr);
  CHECK(rep.is_semiring);
  CHECK(rep.absorbing_zeros == std::vector<Elem>{0});
  CHECK(rep.g_identities == std::vector<Elem>{3});  // the full base set
}

TEST_CASE("classify on modular rings reports semirings with zero {0} and unity {1}") {
  for (int q : {2, 3, 5, 6}) {
    const ClassificationReport rep = classify(gen_modring(q, 2, 2));
    CHECK(rep.is_semiring);
    CHECK(rep.absorbing_zeros == std::vector<Elem>{0});
    CHECK(rep.g_identities == std::vector<Elem>{1 % q});
  }
}
