#include <vector>

#include "constructions.hpp"
#include "doctest.h"
#include "error.hpp"
#include "table.hpp"

using namespace snr;

TEST_CASE("gen_powerset(1,2,2) is the two-element OR/AND structure") {
  const FinStructure b2 = gen_powerset(1, 2, 2);
  CHECK(b2.carrier() == 2);
  CHECK(b2.f().entries() == std::vector<std::uint8_t>{0, 1, 1, 1});
  CHECK(b2.g().entries() == std::vector<std::uint8_t>{0, 0, 0, 1});
  CHECK(b2.name() == "powerset_1_2_2");
}

TEST_CASE("gen_powerset computes unions and intersections of encoded subsets") {
  const FinStructure s = gen_powerset(3, 2, 3);
  CHECK(s.carrier() == 8);
  std::vector<Elem> fargs{0b101, 0b010};
  CHECK(s.eval_f(fargs) == 0b111);
  std::vector<Elem> gargs{0b110, 0b011, 0b010};
  CHECK(s.eval_g(gargs) == 0b010);
  CHECK_THROWS_AS(gen_powerset(7, 2, 2), Error);   // 128 > 64
  CHECK_THROWS_AS(gen_powerset(-1, 2, 2), Error);
  CHECK_THROWS_AS(gen_powerset(2, 1, 2), Error);   // arity
}

TEST_CASE("gen_modring matches modular arithmetic") {
  const FinStructure z4 = gen_modring(4, 2, 2);
  CHECK(z4.f().entries() ==
        std::vector<std::uint8_t>{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
  CHECK(z4.g().entries() ==
        std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1});

  // ternary sum / product oracle over every tuple
  const FinStructure z5 = gen_modring(5, 3, 3);
  std::vector<Elem> args(3, 0);
  do {
    CHECK(z5.eval_f(args) == (args[0] + args[1] + args[2]) % 5);
    CHECK(z5.eval_g(args) == (args[0] * args[1] * args[2]) % 5);
  } while (next_tuple(args, 5));

  CHECK(gen_modring(1, 2, 2).carrier() == 1);
  CHECK_THROWS_AS(gen_modring(0, 2, 2), Error);
  CHECK_THROWS_AS(gen_modring(65, 2, 2), Error);
  CHECK_THROWS_AS(gen_modring(4, 14, 2), Error);  // 4^14 > 2^26 entries
}

TEST_CASE("gen_affine matches the pair formula") {
  const FinStructure s = gen_affine(3);
  CHECK(s.carrier() == 9);
  CHECK(s.m() == 2);
  CHECK(s.n() == 3);
  const int q = 3;
  auto enc = [&](int a, int b) { return q * a + b; };

  std::vector<Elem> fargs(2, 0);
  do {
    const int a = (fargs[0] / q + fargs[1] / q) % q;
    const int b = (fargs[0] % q + fargs[1] % q) % q;
    CHECK(s.eval_f(fargs) == enc(a, b));
  } while (next_tuple(fargs, 9));

  std::vector<Elem> gargs(3, 0);
  do {
    const int a1 = gargs[0] / q, b1 = gargs[0] % q;
    const int a2 = gargs[1] / q, b2 = gargs[1] % q;
    const int a3 = gargs[2] / q, b3 = gargs[2] % q;
    CHECK(s.eval_g(gargs) == enc((a1 * a2 * a3) % q, (b1 * a2 * a3 + b2 * a3 + b3) % q));
  } while (next_tuple(gargs, 9));

  CHECK_THROWS_AS(gen_affine(1), Error);
  CHECK_THROWS_AS(gen_affine(9), Error);  // 81 > 64
  CHECK(gen_affine(8).carrier() == 64);
}

TEST_CASE("direct_product works componentwise under the pair encoding") {
  const FinStructure z2 = gen_modring(2, 2, 2);
  const FinStructure z3 = gen_modring(3, 2, 2);
  const FinStructure p = direct_product(z2, z3);
  CHECK(p.carrier() == 6);
  CHECK(p.name() == "modring_2_2_2_x_modring_3_2_2");

  auto enc = [](int x, int y) { return 3 * x + y; };
  std::vector<Elem> args(2, 0);
  do {
    const int x = ((args[0] / 3) + (args[1] / 3)) % 2;
    const int y = ((args[0] % 3) + (args[1] % 3)) % 3;
    CHECK(p.eval_f(args) == enc(x, y));
    const int gx = ((args[0] / 3) * (args[1] / 3)) % 2;
    const int gy = ((args[0] % 3) * (args[1] % 3)) % 3;
    CHECK(p.eval_g(args) == enc(gx, gy));
  } while (next_tuple(args, 6));

  CHECK_THROWS_AS(direct_product(z2, gen_modring(2, 2, 3)), Error);  // arity mismatch
  CHECK_THROWS_AS(direct_product(gen_modring(8, 2, 2), gen_modring(9, 2, 2)), Error);
}
