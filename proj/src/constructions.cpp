#include "constructions.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "error.hpp"

namespace snr {

namespace {

// Fills a dense table by sweeping all argument tuples in index order.
OpTable build_table(int arity, int carrier,
                    const std::function<Elem(std::span<const Elem>)>& rule) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= static_cast<std::size_t>(carrier);
    if (size > max_table_entries) fail(errc::size_cap, "generated table exceeds the size cap");
  }
  std::vector<std::uint8_t> entries;
  entries.reserve(size);
  std::vector<Elem> args(static_cast<std::size_t>(arity), 0);
  do {
    entries.push_back(static_cast<std::uint8_t>(rule(args)));
  } while (next_tuple(args, carrier));
  return OpTable(arity, carrier, std::move(entries));
}

void check_arity(int r, const char* which) {
  if (r < 2) fail(errc::invalid_argument, std::string(which) + " arity must be at least 2");
}

}  // namespace

FinStructure gen_powerset(int base_size, int m, int n) {
  if (base_size < 0) fail(errc::invalid_argument, "base size must be nonnegative");
  if (base_size > 6) fail(errc::size_cap, "powerset carrier 2^" + std::to_string(base_size) +
                                              " exceeds the carrier cap");
  check_arity(m, "f");
  check_arity(n, "g");
  const int k = 1 << base_size;
  auto f = build_table(m, k, [](std::span<const Elem> args) {
    Elem acc = 0;
    for (Elem a : args) acc |= a;
    return acc;
  });
  auto g = build_table(n, k, [k](std::span<const Elem> args) {
    Elem acc = k - 1;
    for (Elem a : args) acc &= a;
    return acc;
  });
  const std::string name = "powerset_" + std::to_string(base_size) + "_" + std::to_string(m) +
                           "_" + std::to_string(n);
  return FinStructure(name, std::move(f), std::move(g));
}

FinStructure gen_modring(int q, int m, int n) {
  if (q < 1) fail(errc::invalid_argument, "modulus must be at least 1");
  if (q > max_carrier) fail(errc::size_cap, "modulus exceeds the carrier cap");
  check_arity(m, "f");
  check_arity(n, "g");
  auto f = build_table(m, q, [q](std::span<const Elem> args) {
    int acc = 0;
    for (Elem a : args) acc = (acc + a) % q;
    return acc;
  });
  auto g = build_table(n, q, [q](std::span<const Elem> args) {
    int acc = 1 % q;
    for (Elem a : args) acc = (acc * a) % q;
    return acc;
  });
  const std::string name =
      "modring_" + std::to_string(q) + "_" + std::to_string(m) + "_" + std::to_string(n);
  return FinStructure(name, std::move(f), std::move(g));
}

FinStructure gen_affine(int q) {
  if (q < 2) fail(errc::invalid_argument, "modulus must be at least 2");
  if (q * q > max_carrier) fail(errc::size_cap, "carrier q^2 exceeds the carrier cap");
  const int k = q * q;
  auto first = [q](Elem x) { return x / q; };
  auto second = [q](Elem x) { return x % q; };
  auto f = build_table(2, k, [&](std::span<const Elem> args) {
    const int a = (first(args[0]) + first(args[1])) % q;
    const int b = (second(args[0]) + second(args[1])) % q;
    return q * a + b;
  });
  auto g = build_table(3, k, [&](std::span<const Elem> args) {
    const int a1 = first(args[0]), b1 = second(args[0]);
    const int a2 = first(args[1]), b2 = second(args[1]);
    const int a3 = first(args[2]), b3 = second(args[2]);
    const int a = (a1 * a2 * a3) % q;
    const int b = (b1 * a2 * a3 + b2 * a3 + b3) % q;
    return q * a + b;
  });
  return FinStructure("affine_" + std::to_string(q), std::move(f), std::move(g));
}

FinStructure direct_product(const FinStructure& s1, const FinStructure& s2) {
  if (s1.m() != s2.m() || s1.n() != s2.n())
    fail(errc::arity_mismatch, "direct product requires equal arities on both factors");
  const int k1 = s1.carrier();
  const int k2 = s2.carrier();
  if (k1 * k2 > max_carrier) fail(errc::size_cap, "product carrier exceeds the carrier cap");
  const int k = k1 * k2;

  auto componentwise = [&](const OpTable& op1, const OpTable& op2, int arity) {
    return build_table(arity, k, [&](std::span<const Elem> args) {
      std::vector<Elem> left(args.size()), right(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) {
        left[i] = args[i] / k2;
        right[i] = args[i] % k2;
      }
      return k2 * op1.eval(left) + op2.eval(right);
    });
  };
  auto f = componentwise(s1.f(), s2.f(), s1.m());
  auto g = componentwise(s1.g(), s2.g(), s1.n());
  return FinStructure(s1.name() + "_x_" + s2.name(), std::move(f), std::move(g));
}

}  // namespace snr
