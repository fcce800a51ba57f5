#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "table.hpp"

using namespace snr;

namespace {

OpTable or_table() { return OpTable(2, 2, {0, 1, 1, 1}); }
OpTable and_table() { return OpTable(2, 2, {0, 0, 0, 1}); }

}  // namespace

TEST_CASE("encode_args is the mixed-radix index with args[0] most significant") {
  std::vector<Elem> args{1, 0};
  CHECK(encode_args(args, 2) == 2);
  args = {0, 1};
  CHECK(encode_args(args, 2) == 1);
  args = {2, 1, 0};
  CHECK(encode_args(args, 3) == 2 * 9 + 1 * 3);

  // oracle: position of the tuple in the ascending odometer stream
  std::vector<Elem> tuple(3, 0);
  std::size_t position = 0;
  do {
    CHECK(encode_args(tuple, 4) == position);
    ++position;
  } while (next_tuple(tuple, 4));
  CHECK(position == 64);
}

TEST_CASE("encode_args validates argument range") {
  std::vector<Elem> args{0, 2};
  CHECK_THROWS_AS(encode_args(args, 2), Error);
  args = {-1, 0};
  CHECK_THROWS_AS(encode_args(args, 2), Error);
}

TEST_CASE("next_tuple wraps exactly once per full cycle") {
  std::vector<Elem> tuple{1, 1};
  CHECK_FALSE(next_tuple(tuple, 2));
  CHECK(tuple == std::vector<Elem>{0, 0});
  CHECK(next_tuple(tuple, 2));
  CHECK(tuple == std::vector<Elem>{0, 1});

  // empty tuple: a single visit, then wrap
  std::vector<Elem> empty;
  CHECK_FALSE(next_tuple(empty, 5));
}

TEST_CASE("OpTable validates shape") {
  CHECK_THROWS_AS(OpTable(1, 2, {0, 1}), Error);            // arity < 2
  CHECK_THROWS_AS(OpTable(2, 0, {}), Error);                // empty carrier
  CHECK_THROWS_AS(OpTable(2, 65, {}), Error);               // carrier cap
  CHECK_THROWS_AS(OpTable(2, 2, {0, 1, 1}), Error);         // wrong entry count
  CHECK_THROWS_AS(OpTable(2, 2, {0, 1, 1, 2}), Error);      // entry out of range
  CHECK_THROWS_AS(OpTable(14, 4, std::vector<std::uint8_t>{}), Error);  // 4^14 > 2^26
  CHECK_NOTHROW(OpTable(2, 1, {0}));
}

TEST_CASE("eval reads the table at the encoded index") {
  OpTable op = or_table();
  std::vector<Elem> args{0, 0};
  CHECK(op.eval(args) == 0);
  args = {0, 1};
  CHECK(op.eval(args) == 1);
  args = {1, 0};
  CHECK(op.eval(args) == 1);
  args = {1};
  CHECK_THROWS_AS(op.eval(args), Error);  // arity mismatch
}

TEST_CASE("eval_nested splices the inner application into the hole") {
  OpTable op = or_table();
  // op(op(0,1), 0) = op(1, 0) = 1
  std::vector<Elem> inner{0, 1}, suffix{0};
  CHECK(op.eval_nested({}, inner, suffix) == 1);
  // op(0, op(0,0)) = 0
  std::vector<Elem> prefix{0}, inner2{0, 0};
  CHECK(op.eval_nested(prefix, inner2, {}) == 0);
  // prefix + hole + suffix must match the arity
  CHECK_THROWS_AS(op.eval_nested(prefix, inner2, suffix), Error);
}

TEST_CASE("FinStructure wires tables with matching carriers") {
  FinStructure b2("b2", or_table(), and_table());
  CHECK(b2.carrier() == 2);
  CHECK(b2.m() == 2);
  CHECK(b2.n() == 2);
  std::vector<Elem> args{1, 1};
  CHECK(b2.eval_f(args) == 1);
  CHECK(b2.eval_g(args) == 1);

  CHECK_THROWS_AS(FinStructure("", or_table(), and_table()), Error);
  OpTable z3(2, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK_THROWS_AS(FinStructure("mixed", or_table(), z3), Error);
}

TEST_CASE("same_tables ignores the name") {
  FinStructure a("first", or_table(), and_table());
  FinStructure b("second", or_table(), and_table());
  CHECK(a.same_tables(b));
  CHECK(a != b);
  FinStructure c("first", and_table(), and_table());
  CHECK_FALSE(a.same_tables(c));
}
