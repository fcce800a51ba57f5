// Command-line front end. Talks to the library exclusively through the
// public C API; all algebra lives behind include/snr/snr.h.
//
// Exit codes: 0 = property holds / computation succeeded, 1 = a checked
// property is violated (witness printed), 2 = input or usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "snr/snr.h"

#include "CLI11.hpp"

namespace {

struct StructureDeleter {
  void operator()(snr_structure* s) const { snr_structure_free(s); }
};
struct ReportDeleter {
  void operator()(snr_report* r) const { snr_report_free(r); }
};
struct UnitsDeleter {
  void operator()(snr_units* u) const { snr_units_free(u); }
};
struct PartitionDeleter {
  void operator()(snr_partition* p) const { snr_partition_free(p); }
};
struct PartitionListDeleter {
  void operator()(snr_partition_list* l) const { snr_partition_list_free(l); }
};
struct MorphismListDeleter {
  void operator()(snr_morphism_list* l) const { snr_morphism_list_free(l); }
};

using structure_ptr = std::unique_ptr<snr_structure, StructureDeleter>;
using report_ptr = std::unique_ptr<snr_report, ReportDeleter>;
using units_ptr = std::unique_ptr<snr_units, UnitsDeleter>;
using partition_ptr = std::unique_ptr<snr_partition, PartitionDeleter>;
using partition_list_ptr = std::unique_ptr<snr_partition_list, PartitionListDeleter>;
using morphism_list_ptr = std::unique_ptr<snr_morphism_list, MorphismListDeleter>;

/// Owned C string from the library.
std::string take_string(char* str) {
  std::string out = str != nullptr ? str : "";
  snr_string_free(str);
  return out;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int library_error() { return usage_error(snr_last_error()); }

structure_ptr load_structure(const std::string& path, int& rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    rc = usage_error("cannot read '" + path + "'");
    return nullptr;
  }
  std::ostringstream text;
  text << in.rdbuf();
  snr_structure* s = nullptr;
  if (snr_structure_parse(text.str().c_str(), &s) != SNR_OK) {
    rc = usage_error(path + ": " + snr_last_error());
    return nullptr;
  }
  return structure_ptr(s);
}

std::string mask_to_braces(uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 64; ++x) {
    if (((mask >> x) & 1) == 0) continue;
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

bool parse_int_strict(const std::string& text, int& value) {
  try {
    std::size_t used = 0;
    value = std::stoi(text, &used);
    return used == text.size();
  } catch (...) {
    return false;
  }
}

/// Seed literal: groups separated by '|', elements by ',', e.g. "0,2|5".
bool parse_groups(const std::string& text, std::vector<std::vector<int>>& groups) {
  groups.clear();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    std::string chunk =
        text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    std::vector<int> group;
    std::size_t from = 0;
    while (from <= chunk.size()) {
      std::size_t comma = chunk.find(',', from);
      std::string piece =
          chunk.substr(from, comma == std::string::npos ? std::string::npos : comma - from);
      int value;
      if (!parse_int_strict(piece, value)) return false;
      group.push_back(value);
      if (comma == std::string::npos) break;
      from = comma + 1;
    }
    groups.push_back(std::move(group));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return !groups.empty();
}

int emit_structure(const snr_structure* s, const std::string& out_path) {
  char* text = nullptr;
  if (snr_structure_serialize(s, &text) != SNR_OK) return library_error();
  std::string body = take_string(text);
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return usage_error("cannot write '" + out_path + "'");
  out << body;
  return 0;
}

int run_verify(const std::string& file) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  snr_report* report = nullptr;
  if (snr_classify(s.get(), &report) != SNR_OK) return library_error();
  report_ptr guard(report);
  char* text = nullptr;
  if (snr_report_text(report, &text) != SNR_OK) return library_error();
  std::cout << take_string(text);
  return snr_report_is_seminearring(report) ? 0 : 1;
}

int run_classify(const std::string& file, bool as_json) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  snr_report* report = nullptr;
  if (snr_classify(s.get(), &report) != SNR_OK) return library_error();
  report_ptr guard(report);
  char* text = nullptr;
  snr_status st = as_json ? snr_report_json(report, &text) : snr_report_text(report, &text);
  if (st != SNR_OK) return library_error();
  std::cout << take_string(text);
  return 0;
}

int run_subs(const std::string& file) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  uint64_t* subs = nullptr;
  size_t count = 0;
  if (snr_enumerate_subs(s.get(), &subs, &count) != SNR_OK) return library_error();
  for (size_t i = 0; i < count; ++i) std::cout << mask_to_braces(subs[i]) << "\n";
  snr_buffer_free(subs);
  return 0;
}

int run_ideals(const std::string& file, int position) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  uint64_t* ideals = nullptr;
  size_t count = 0;
  snr_status st = position > 0
                      ? snr_enumerate_ideals(s.get(), &position, 1, &ideals, &count)
                      : snr_enumerate_ideals(s.get(), nullptr, 0, &ideals, &count);
  if (st != SNR_OK) return library_error();
  for (size_t i = 0; i < count; ++i) std::cout << mask_to_braces(ideals[i]) << "\n";
  snr_buffer_free(ideals);
  return 0;
}

int run_units(const std::string& file, int unity, bool unity_given) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  if (!unity_given) {
    int* elems = nullptr;
    size_t count = 0;
    if (snr_unities(s.get(), &elems, &count) != SNR_OK) return library_error();
    if (count == 0) {
      snr_buffer_free(elems);
      return usage_error("structure has no unity; nothing to report");
    }
    unity = elems[0];
    snr_buffer_free(elems);
  }
  snr_units* units = nullptr;
  if (snr_units_compute(s.get(), unity, &units) != SNR_OK) return library_error();
  units_ptr guard(units);
  char* text = nullptr;
  if (snr_units_text(units, &text) != SNR_OK) return library_error();
  std::cout << take_string(text);
  return snr_units_all_hold(units) ? 0 : 1;
}

int run_homs(const std::string& file1, const std::string& file2, uint64_t limit) {
  int rc = 0;
  structure_ptr dom = load_structure(file1, rc);
  if (!dom) return rc;
  structure_ptr cod = load_structure(file2, rc);
  if (!cod) return rc;
  snr_morphism_list* list = nullptr;
  if (snr_find_homomorphisms(dom.get(), cod.get(), limit, &list) != SNR_OK)
    return library_error();
  morphism_list_ptr guard(list);
  const size_t count = snr_morphism_list_size(list);
  for (size_t i = 0; i < count; ++i) {
    int* map = nullptr;
    size_t len = 0;
    if (snr_morphism_list_map(list, i, &map, &len) != SNR_OK) return library_error();
    int mono = 0, epi = 0, iso = 0;
    if (snr_morphism_list_flags(list, i, &mono, &epi, &iso) != SNR_OK) {
      snr_buffer_free(map);
      return library_error();
    }
    std::string line;
    for (size_t x = 0; x < len; ++x) {
      if (x > 0) line += ' ';
      line += std::to_string(x) + "->" + std::to_string(map[x]);
    }
    snr_buffer_free(map);
    std::string flags;
    if (mono != 0) flags += "mono";
    if (epi != 0) flags += flags.empty() ? "epi" : ",epi";
    if (iso != 0) flags += flags.empty() ? "iso" : ",iso";
    std::cout << line << " [" << flags << "]\n";
  }
  return 0;
}

int run_congruences(const std::string& file) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  snr_partition_list* list = nullptr;
  if (snr_enumerate_congruences(s.get(), &list) != SNR_OK) return library_error();
  partition_list_ptr guard(list);
  const size_t count = snr_partition_list_size(list);
  for (size_t i = 0; i < count; ++i) {
    char* text = nullptr;
    if (snr_partition_list_format(list, i, &text) != SNR_OK) return library_error();
    std::cout << take_string(text) << "\n";
  }
  return 0;
}

int run_quotient(const std::string& file, const std::string& blocks) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  snr_partition* p = nullptr;
  if (snr_partition_parse(blocks.c_str(), snr_structure_carrier(s.get()), &p) != SNR_OK)
    return library_error();
  partition_ptr guard(p);
  int holds = 0;
  char* witness = nullptr;
  if (snr_is_congruence(s.get(), p, &holds, &witness) != SNR_OK) return library_error();
  if (holds == 0) {
    std::cout << "congruence: no\n  witness: " << take_string(witness) << "\n";
    return 1;
  }
  snr_structure* q = nullptr;
  if (snr_quotient(s.get(), p, &q) != SNR_OK) return library_error();
  structure_ptr qguard(q);
  return emit_structure(q, "");
}

int run_closure(const std::string& file, const std::string& seed, const std::string& kind) {
  int rc = 0;
  structure_ptr s = load_structure(file, rc);
  if (!s) return rc;
  std::vector<std::vector<int>> groups;
  if (!parse_groups(seed, groups)) return usage_error("malformed seed '" + seed + "'");

  if (kind == "congruence") {
    std::vector<int> pairs;
    for (const auto& group : groups)
      for (size_t i = 0; i + 1 < group.size(); ++i) {
        pairs.push_back(group[i]);
        pairs.push_back(group[i + 1]);
      }
    snr_partition* p = nullptr;
    if (snr_congruence_closure(s.get(), pairs.data(), pairs.size() / 2, &p) != SNR_OK)
      return library_error();
    partition_ptr guard(p);
    char* text = nullptr;
    if (snr_partition_format(p, &text) != SNR_OK) return library_error();
    std::cout << take_string(text) << "\n";
    return 0;
  }

  uint64_t mask = 0;
  for (const auto& group : groups)
    for (int x : group) {
      if (x < 0 || x >= 64) return usage_error("seed element " + std::to_string(x) +
                                               " is outside 0..63");
      mask |= uint64_t{1} << x;
    }
  uint64_t closed = 0;
  snr_status st = kind == "sub" ? snr_sub_closure(s.get(), mask, &closed)
                                : snr_ideal_closure(s.get(), mask, &closed);
  if (st != SNR_OK) return library_error();
  std::cout << mask_to_braces(closed) << "\n";
  return 0;
}

int run_gen(const std::vector<std::string>& args, const std::string& out_path) {
  if (args.empty()) return usage_error("gen needs a kind: powerset, modring, affine or product");
  const std::string& kind = args.front();
  auto int_arg = [&](size_t index, int& value) {
    if (index >= args.size() || !parse_int_strict(args[index], value)) {
      usage_error("gen " + kind + ": argument " + std::to_string(index) +
                  " must be an integer");
      return false;
    }
    return true;
  };

  snr_structure* s = nullptr;
  if (kind == "powerset") {
    int base = 0, m = 0, n = 0;
    if (args.size() != 4) return usage_error("usage: gen powerset BASE M N");
    if (!int_arg(1, base) || !int_arg(2, m) || !int_arg(3, n)) return 2;
    if (snr_gen_powerset(base, m, n, &s) != SNR_OK) return library_error();
  } else if (kind == "modring") {
    int q = 0, m = 0, n = 0;
    if (args.size() != 4) return usage_error("usage: gen modring Q M N");
    if (!int_arg(1, q) || !int_arg(2, m) || !int_arg(3, n)) return 2;
    if (snr_gen_modring(q, m, n, &s) != SNR_OK) return library_error();
  } else if (kind == "affine") {
    int q = 0;
    if (args.size() != 2) return usage_error("usage: gen affine Q");
    if (!int_arg(1, q)) return 2;
    if (snr_gen_affine(q, &s) != SNR_OK) return library_error();
  } else if (kind == "product") {
    if (args.size() != 3) return usage_error("usage: gen product FILE1 FILE2");
    int rc = 0;
    structure_ptr a = load_structure(args[1], rc);
    if (!a) return rc;
    structure_ptr b = load_structure(args[2], rc);
    if (!b) return rc;
    if (snr_gen_product(a.get(), b.get(), &s) != SNR_OK) return library_error();
  } else {
    return usage_error("unknown generator '" + kind + "'");
  }
  structure_ptr guard(s);
  return emit_structure(s, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite (m,n)-seminearring toolkit: axiom checking, classification,\n"
               "subalgebras, ideals, units, homomorphisms, congruences and quotients\n"
               "over dense operation tables."};
  app.require_subcommand(1);
  int rc = 0;

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Check the seminearring axioms of a structure");
  verify->add_option("file", verify_file, "structure file")->required();
  verify->callback([&] { rc = run_verify(verify_file); });

  std::string classify_file;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify", "Full axiom and element classification");
  classify->add_option("file", classify_file, "structure file")->required();
  classify->add_flag("--json", classify_json, "emit the report as JSON");
  classify->callback([&] { rc = run_classify(classify_file, classify_json); });

  std::string subs_file;
  auto* subs = app.add_subcommand("subs", "Enumerate subseminearrings");
  subs->add_option("file", subs_file, "structure file")->required();
  subs->callback([&] { rc = run_subs(subs_file); });

  std::string ideals_file;
  int ideals_position = 0;
  auto* ideals = app.add_subcommand("ideals", "Enumerate (m,n)-ideals");
  ideals->add_option("file", ideals_file, "structure file")->required();
  ideals->add_option("--position", ideals_position,
                     "restrict to i-ideals of this g slot (default: every slot)");
  ideals->callback([&] { rc = run_ideals(ideals_file, ideals_position); });

  std::string units_file;
  int units_unity = 0;
  auto* units = app.add_subcommand("units", "Units report and unit-theorem sweeps");
  units->add_option("file", units_file, "structure file")->required();
  auto* unity_opt = units->add_option("--unity", units_unity,
                                      "which unity to use (default: the least one)");
  units->callback([&] { rc = run_units(units_file, units_unity, unity_opt->count() > 0); });

  std::string homs_file1, homs_file2;
  uint64_t homs_limit = 0;
  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms between two structures");
  homs->add_option("file1", homs_file1, "domain structure file")->required();
  homs->add_option("file2", homs_file2, "codomain structure file")->required();
  homs->add_option("--limit", homs_limit, "stop after this many homomorphisms");
  homs->callback([&] { rc = run_homs(homs_file1, homs_file2, homs_limit); });

  std::string congruences_file;
  auto* congruences = app.add_subcommand("congruences", "Enumerate congruences");
  congruences->add_option("file", congruences_file, "structure file")->required();
  congruences->callback([&] { rc = run_congruences(congruences_file); });

  std::string quotient_file, quotient_blocks;
  auto* quotient = app.add_subcommand("quotient", "Factor structure by a congruence");
  quotient->add_option("file", quotient_file, "structure file")->required();
  quotient->add_option("--partition", quotient_blocks, "partition literal, e.g. 0,2|1,3")
      ->required();
  quotient->callback([&] { rc = run_quotient(quotient_file, quotient_blocks); });

  std::string closure_file, closure_seed, closure_kind;
  auto* closure = app.add_subcommand("closure", "Close a seed under a structure notion");
  closure->add_option("file", closure_file, "structure file")->required();
  closure->add_option("--seed", closure_seed, "seed literal, e.g. 2 or 0,2|5,7")->required();
  closure->add_option("--kind", closure_kind, "sub, ideal or congruence")
      ->required()
      ->check(CLI::IsMember({"sub", "ideal", "congruence"}));
  closure->callback([&] { rc = run_closure(closure_file, closure_seed, closure_kind); });

  std::vector<std::string> gen_args;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a structure from a family");
  gen->add_option("args", gen_args, "KIND ARGS...: powerset BASE M N | modring Q M N | "
                                    "affine Q | product FILE1 FILE2");
  gen->add_option("-o,--output", gen_out, "write the structure file here instead of stdout");
  gen->callback([&] { rc = run_gen(gen_args, gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
