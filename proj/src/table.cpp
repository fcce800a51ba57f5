#include "table.hpp"

#include <string>

#include "error.hpp"

namespace snr {

std::size_t encode_args(std::span<const Elem> args, int carrier) {
  if (args.empty()) fail(errc::invalid_argument, "encode_args: empty argument tuple");
  std::size_t index = 0;
  for (Elem a : args) {
    if (a < 0 || a >= carrier)
      fail(errc::out_of_range, "encode_args: argument " + std::to_string(a) +
                                   " outside carrier 0.." + std::to_string(carrier - 1));
    index = index * static_cast<std::size_t>(carrier) + static_cast<std::size_t>(a);
  }
  return index;
}

bool next_tuple(std::span<Elem> tuple, int carrier) {
  for (auto i = static_cast<std::ptrdiff_t>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < carrier) return true;
    tuple[i] = 0;
  }
  return false;
}

namespace {

std::size_t checked_table_size(int arity, int carrier) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= static_cast<std::size_t>(carrier);
    if (size > max_table_entries)
      fail(errc::size_cap, "operation table would exceed " +
                               std::to_string(max_table_entries) + " entries");
  }
  return size;
}

}  // namespace

OpTable::OpTable(int arity, int carrier, std::vector<std::uint8_t> entries)
    : arity_(arity), carrier_(carrier), entries_(std::move(entries)) {
  if (arity_ < 2) fail(errc::invalid_argument, "operation arity must be at least 2");
  if (carrier_ < 1) fail(errc::invalid_argument, "carrier size must be at least 1");
  if (carrier_ > max_carrier)
    fail(errc::size_cap, "carrier size " + std::to_string(carrier_) + " exceeds the cap of " +
                             std::to_string(max_carrier));
  const std::size_t expected = checked_table_size(arity_, carrier_);
  if (entries_.size() != expected)
    fail(errc::wrong_entry_count, "expected " + std::to_string(expected) +
                                      " table entries, got " + std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= carrier_)
      fail(errc::out_of_range, "table entry " + std::to_string(int(entries_[i])) +
                                   " at index " + std::to_string(i) + " is outside carrier 0.." +
                                   std::to_string(carrier_ - 1));
  }
}

Elem OpTable::eval(std::span<const Elem> args) const {
  if (static_cast<int>(args.size()) != arity_)
    fail(errc::arity_mismatch, "eval: expected " + std::to_string(arity_) + " arguments, got " +
                                   std::to_string(args.size()));
  return entries_[encode_args(args, carrier_)];
}

Elem OpTable::eval_nested(std::span<const Elem> prefix, std::span<const Elem> inner,
                          std::span<const Elem> suffix) const {
  if (static_cast<int>(prefix.size() + 1 + suffix.size()) != arity_)
    fail(errc::arity_mismatch, "eval_nested: prefix and suffix must leave exactly one hole");
  const Elem spliced = eval(inner);
  std::vector<Elem> outer;
  outer.reserve(static_cast<std::size_t>(arity_));
  outer.insert(outer.end(), prefix.begin(), prefix.end());
  outer.push_back(spliced);
  outer.insert(outer.end(), suffix.begin(), suffix.end());
  return eval(outer);
}

FinStructure::FinStructure(std::string name, OpTable f, OpTable g)
    : name_(std::move(name)), f_(std::move(f)), g_(std::move(g)) {
  if (name_.empty()) fail(errc::invalid_argument, "structure name must be nonempty");
  if (f_.carrier() != g_.carrier())
    fail(errc::invalid_argument, "f and g must share one carrier, got " +
                                     std::to_string(f_.carrier()) + " and " +
                                     std::to_string(g_.carrier()));
}

}  // namespace snr
