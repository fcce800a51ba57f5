#include "snr/snr.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axioms.hpp"
#include "congruences.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "mask.hpp"
#include "morphisms.hpp"
#include "substructures.hpp"
#include "table.hpp"
#include "units.hpp"

struct snr_structure {
  snr::FinStructure value;
};

struct snr_report {
  std::string text;
  std::string json;
  bool is_seminearring = false;
};

struct snr_units {
  snr::UnitsReport report;
  snr::UnitsTheoremSummary summary;
};

struct snr_partition {
  snr::Partition value;
};

struct snr_partition_list {
  std::vector<snr::Partition> items;
};

struct snr_morphism_list {
  snr::FinStructure dom;
  snr::FinStructure cod;
  std::vector<std::vector<snr::Elem>> maps;
  std::vector<snr::MorphismFlags> flags;
};

namespace {

thread_local std::string g_last_error;

snr_status to_status(snr::errc code) {
  using snr::errc;
  switch (code) {
    case errc::invalid_argument: return SNR_ERR_INVALID_ARGUMENT;
    case errc::arity_mismatch: return SNR_ERR_ARITY_MISMATCH;
    case errc::out_of_range: return SNR_ERR_OUT_OF_RANGE;
    case errc::size_cap: return SNR_ERR_SIZE_CAP;
    case errc::parse_error: return SNR_ERR_PARSE;
    case errc::wrong_entry_count: return SNR_ERR_WRONG_ENTRY_COUNT;
    case errc::empty_subset: return SNR_ERR_EMPTY_SUBSET;
    case errc::empty_intersection: return SNR_ERR_EMPTY_INTERSECTION;
    case errc::enumeration_guard: return SNR_ERR_ENUMERATION_GUARD;
    case errc::search_guard: return SNR_ERR_SEARCH_GUARD;
    case errc::domain_mismatch: return SNR_ERR_DOMAIN_MISMATCH;
    case errc::not_identity: return SNR_ERR_NOT_IDENTITY;
    case errc::not_unit: return SNR_ERR_NOT_UNIT;
    case errc::not_homomorphism: return SNR_ERR_NOT_HOMOMORPHISM;
    case errc::not_epimorphism: return SNR_ERR_NOT_EPIMORPHISM;
    case errc::not_ideal: return SNR_ERR_NOT_IDEAL;
    case errc::not_congruence: return SNR_ERR_NOT_CONGRUENCE;
    case errc::internal: return SNR_ERR_INTERNAL;
  }
  return SNR_ERR_INTERNAL;
}

template <typename Fn>
snr_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return SNR_OK;
  } catch (const snr::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SNR_ERR_INTERNAL;
  }
}

snr_status fail_null(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return SNR_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit_verdict(const snr::AxiomVerdict& verdict, int* holds, char** witness) {
  if (holds != nullptr) *holds = verdict.holds ? 1 : 0;
  if (witness != nullptr)
    *witness = verdict.holds ? nullptr : dup_string(snr::format_witness(*verdict.witness));
}

template <typename T>
T* dup_buffer(const std::vector<T>& values) {
  T* out = static_cast<T*>(std::malloc(sizeof(T) * (values.empty() ? 1 : values.size())));
  if (out != nullptr && !values.empty())
    std::memcpy(out, values.data(), sizeof(T) * values.size());
  return out;
}

std::vector<snr::Elem> copy_map(const int* map, size_t len) {
  if (map == nullptr && len > 0) snr::fail(snr::errc::invalid_argument, "map must not be NULL");
  return std::vector<snr::Elem>(map, map + len);
}

std::vector<snr::Mask> copy_family(const uint64_t* family, size_t count) {
  if (family == nullptr && count > 0)
    snr::fail(snr::errc::invalid_argument, "family must not be NULL");
  return std::vector<snr::Mask>(family, family + count);
}

const snr::OpTable& pick_op(const snr_structure* s, char op) {
  if (op != 'f' && op != 'g') snr::fail(snr::errc::invalid_argument, "op must be 'f' or 'g'");
  return op == 'f' ? s->value.f() : s->value.g();
}

}  // namespace

extern "C" {

const char* snr_last_error(void) { return g_last_error.c_str(); }

void snr_string_free(char* str) { std::free(str); }
void snr_buffer_free(void* buffer) { std::free(buffer); }

/* ---- structures ---- */

snr_status snr_structure_parse(const char* text, snr_structure** out) {
  if (text == nullptr) return fail_null("text");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::parse_structure(text)}; });
}

snr_status snr_structure_serialize(const snr_structure* s, char** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = dup_string(snr::serialize_structure(s->value)); });
}

snr_status snr_structure_name(const snr_structure* s, char** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = dup_string(s->value.name()); });
}

int snr_structure_carrier(const snr_structure* s) { return s ? s->value.carrier() : -1; }
int snr_structure_m(const snr_structure* s) { return s ? s->value.m() : -1; }
int snr_structure_n(const snr_structure* s) { return s ? s->value.n() : -1; }

snr_status snr_eval_f(const snr_structure* s, const int* args, size_t nargs, int* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = s->value.eval_f(copy_map(args, nargs)); });
}

snr_status snr_eval_g(const snr_structure* s, const int* args, size_t nargs, int* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = s->value.eval_g(copy_map(args, nargs)); });
}

int snr_structure_same_tables(const snr_structure* a, const snr_structure* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value.same_tables(b->value) ? 1 : 0;
}

void snr_structure_free(snr_structure* s) { delete s; }

/* ---- generators ---- */

snr_status snr_gen_powerset(int base_size, int m, int n, snr_structure** out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::gen_powerset(base_size, m, n)}; });
}

snr_status snr_gen_modring(int q, int m, int n, snr_structure** out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::gen_modring(q, m, n)}; });
}

snr_status snr_gen_affine(int q, snr_structure** out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::gen_affine(q)}; });
}

snr_status snr_gen_product(const snr_structure* a, const snr_structure* b, snr_structure** out) {
  if (a == nullptr || b == nullptr) return fail_null("factor structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::direct_product(a->value, b->value)}; });
}

/* ---- axiom checks and classification ---- */

snr_status snr_check_associative(const snr_structure* s, char op, int* holds, char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::check_associative(pick_op(s, op), op), holds, witness); });
}

snr_status snr_check_commutative(const snr_structure* s, char op, int* holds, char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::check_commutative(pick_op(s, op), op), holds, witness); });
}

snr_status snr_check_distributive(const snr_structure* s, int t, int* holds, char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::check_t_distributive(s->value, t), holds, witness); });
}

snr_status snr_unities(const snr_structure* s, int** elems, size_t* count) {
  if (s == nullptr) return fail_null("structure");
  if (elems == nullptr || count == nullptr) return fail_null("out");
  return guarded([&] {
    auto found = snr::find_g_identities(s->value);
    *elems = dup_buffer(found);
    *count = found.size();
  });
}

snr_status snr_classify(const snr_structure* s, snr_report** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    snr::ClassificationReport report = snr::classify(s->value);
    auto* handle = new snr_report;
    handle->text = snr::render_classification(s->value, report);
    handle->json = snr::classification_json(s->value, report).dump(2) + "\n";
    handle->is_seminearring = !report.t_snr.empty();
    *out = handle;
  });
}

snr_status snr_report_text(const snr_report* report, char** out) {
  if (report == nullptr) return fail_null("report");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = dup_string(report->text); });
}

snr_status snr_report_json(const snr_report* report, char** out) {
  if (report == nullptr) return fail_null("report");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = dup_string(report->json); });
}

int snr_report_is_seminearring(const snr_report* report) {
  return report != nullptr && report->is_seminearring ? 1 : 0;
}

void snr_report_free(snr_report* report) { delete report; }

/* ---- subalgebras ---- */

snr_status snr_is_subseminearring(const snr_structure* s, uint64_t sub, int* holds,
                                  char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::is_subseminearring(s->value, sub), holds, witness); });
}

snr_status snr_sub_closure(const snr_structure* s, uint64_t seed, uint64_t* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = snr::sub_closure(s->value, seed); });
}

snr_status snr_enumerate_subs(const snr_structure* s, uint64_t** subs, size_t* count) {
  if (s == nullptr) return fail_null("structure");
  if (subs == nullptr || count == nullptr) return fail_null("out");
  return guarded([&] {
    auto found = snr::enumerate_subs(s->value);
    *subs = dup_buffer(found);
    *count = found.size();
  });
}

snr_status snr_intersect_subs(const snr_structure* s, const uint64_t* family, size_t count,
                              uint64_t* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = snr::intersect_closed_family(s->value, copy_family(family, count)); });
}

/* ---- ideals ---- */

snr_status snr_is_ideal(const snr_structure* s, uint64_t sub, int* holds, char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::is_ideal(s->value, sub), holds, witness); });
}

snr_status snr_is_i_ideal(const snr_structure* s, uint64_t sub, int position, int* holds,
                          char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::is_i_ideal(s->value, sub, position), holds, witness); });
}

snr_status snr_ideal_closure(const snr_structure* s, uint64_t seed, uint64_t* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = snr::ideal_closure(s->value, seed); });
}

snr_status snr_enumerate_ideals(const snr_structure* s, const int* positions,
                                size_t position_count, uint64_t** ideals, size_t* count) {
  if (s == nullptr) return fail_null("structure");
  if (ideals == nullptr || count == nullptr) return fail_null("out");
  return guarded([&] {
    std::vector<int> slots;
    if (positions != nullptr) slots.assign(positions, positions + position_count);
    auto found = snr::enumerate_ideals(s->value, slots);
    *ideals = dup_buffer(found);
    *count = found.size();
  });
}

snr_status snr_intersect_ideals(const snr_structure* s, const uint64_t* family, size_t count,
                                uint64_t* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = snr::intersect_ideals(s->value, copy_family(family, count)); });
}

/* ---- units ---- */

snr_status snr_g_inverse(const snr_structure* s, int e, int x, int* out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = snr::g_inverse(s->value, e, x).value_or(-1); });
}

snr_status snr_units_compute(const snr_structure* s, int e, snr_units** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    auto* handle = new snr_units;
    try {
      handle->report = snr::units_set(s->value, e);
      handle->summary = snr::run_units_theorems(s->value, handle->report);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

snr_status snr_units_text(const snr_units* units, char** out) {
  if (units == nullptr) return fail_null("units");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = dup_string(snr::render_units(units->report) +
                      snr::render_units_theorems(units->summary));
  });
}

int snr_units_all_hold(const snr_units* units) {
  return units != nullptr && units->summary.all_hold() ? 1 : 0;
}

snr_status snr_units_members(const snr_units* units, int** elems, size_t* count) {
  if (units == nullptr) return fail_null("units");
  if (elems == nullptr || count == nullptr) return fail_null("out");
  return guarded([&] {
    *elems = dup_buffer(units->report.units);
    *count = units->report.units.size();
  });
}

int snr_units_inverse(const snr_units* units, int x) {
  if (units == nullptr || x < 0 || x >= static_cast<int>(units->report.inverse_of.size()))
    return -1;
  return units->report.inverse_of[x];
}

void snr_units_free(snr_units* units) { delete units; }

/* ---- homomorphisms ---- */

snr_status snr_is_homomorphism(const snr_structure* dom, const snr_structure* cod,
                               const int* map, size_t len, int* holds, char** witness) {
  if (dom == nullptr || cod == nullptr) return fail_null("structure");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] {
    auto elems = copy_map(map, len);
    snr::Morphism psi{&dom->value, &cod->value, std::move(elems)};
    emit_verdict(snr::is_homomorphism(psi), holds, witness);
  });
}

snr_status snr_find_homomorphisms(const snr_structure* dom, const snr_structure* cod,
                                  uint64_t limit, snr_morphism_list** out) {
  if (dom == nullptr || cod == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    std::optional<std::size_t> bound;
    if (limit != 0) bound = static_cast<std::size_t>(limit);
    auto found = snr::find_homomorphisms(dom->value, cod->value, bound);
    auto* handle = new snr_morphism_list{dom->value, cod->value, {}, {}};
    for (const snr::Morphism& psi : found) {
      handle->maps.push_back(psi.map);
      handle->flags.push_back(snr::classify_morphism(psi));
    }
    *out = handle;
  });
}

size_t snr_morphism_list_size(const snr_morphism_list* list) {
  return list != nullptr ? list->maps.size() : 0;
}

snr_status snr_morphism_list_map(const snr_morphism_list* list, size_t index, int** map,
                                 size_t* len) {
  if (list == nullptr) return fail_null("list");
  if (map == nullptr || len == nullptr) return fail_null("out");
  return guarded([&] {
    if (index >= list->maps.size())
      snr::fail(snr::errc::out_of_range, "morphism index out of range");
    *map = dup_buffer(list->maps[index]);
    *len = list->maps[index].size();
  });
}

snr_status snr_morphism_list_flags(const snr_morphism_list* list, size_t index, int* mono,
                                   int* epi, int* iso) {
  if (list == nullptr) return fail_null("list");
  return guarded([&] {
    if (index >= list->flags.size())
      snr::fail(snr::errc::out_of_range, "morphism index out of range");
    const snr::MorphismFlags& flags = list->flags[index];
    if (mono != nullptr) *mono = flags.mono ? 1 : 0;
    if (epi != nullptr) *epi = flags.epi ? 1 : 0;
    if (iso != nullptr) *iso = flags.iso ? 1 : 0;
  });
}

void snr_morphism_list_free(snr_morphism_list* list) { delete list; }

snr_status snr_compose(const snr_structure* source, const snr_structure* middle,
                       const snr_structure* target, const int* phi, size_t phi_len,
                       const int* psi, size_t psi_len, int** out_map, size_t* out_len) {
  if (source == nullptr || middle == nullptr || target == nullptr) return fail_null("structure");
  if (out_map == nullptr || out_len == nullptr) return fail_null("out");
  return guarded([&] {
    snr::Morphism outer{&middle->value, &target->value, copy_map(phi, phi_len)};
    snr::Morphism inner{&source->value, &middle->value, copy_map(psi, psi_len)};
    snr::Morphism composite = snr::compose(outer, inner);
    *out_map = dup_buffer(composite.map);
    *out_len = composite.map.size();
  });
}

snr_status snr_image(const snr_structure* dom, const snr_structure* cod, const int* map,
                     size_t len, uint64_t* out) {
  if (dom == nullptr || cod == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    snr::Morphism psi{&dom->value, &cod->value, copy_map(map, len)};
    *out = snr::image(psi);
  });
}

snr_status snr_push_ideal(const snr_structure* dom, const snr_structure* cod, const int* map,
                          size_t len, uint64_t ideal, uint64_t* out) {
  if (dom == nullptr || cod == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    snr::Morphism psi{&dom->value, &cod->value, copy_map(map, len)};
    *out = snr::push_ideal(psi, ideal);
  });
}

snr_status snr_kernel(const snr_structure* dom, const snr_structure* cod, const int* map,
                      size_t len, snr_partition** out) {
  if (dom == nullptr || cod == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    snr::Morphism psi{&dom->value, &cod->value, copy_map(map, len)};
    *out = new snr_partition{snr::kernel(psi)};
  });
}

/* ---- partitions and congruences ---- */

snr_status snr_partition_parse(const char* text, int carrier, snr_partition** out) {
  if (text == nullptr) return fail_null("text");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_partition{snr::parse_partition(text, carrier)}; });
}

snr_status snr_partition_format(const snr_partition* p, char** out) {
  if (p == nullptr) return fail_null("partition");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = dup_string(snr::format_partition(p->value)); });
}

int snr_partition_block_count(const snr_partition* p) {
  return p != nullptr ? p->value.block_count() : -1;
}

int snr_partition_block_of(const snr_partition* p, int x) {
  if (p == nullptr || x < 0 || x >= p->value.size()) return -1;
  return p->value.block_of(x);
}

void snr_partition_free(snr_partition* p) { delete p; }

snr_status snr_is_congruence(const snr_structure* s, const snr_partition* p, int* holds,
                             char** witness) {
  if (s == nullptr) return fail_null("structure");
  if (p == nullptr) return fail_null("partition");
  if (holds == nullptr) return fail_null("holds");
  return guarded([&] { emit_verdict(snr::is_congruence(s->value, p->value), holds, witness); });
}

snr_status snr_congruence_closure(const snr_structure* s, const int* pairs, size_t pair_count,
                                  snr_partition** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  if (pairs == nullptr && pair_count > 0) return fail_null("pairs");
  return guarded([&] {
    std::vector<std::pair<snr::Elem, snr::Elem>> seed;
    seed.reserve(pair_count);
    for (size_t i = 0; i < pair_count; ++i)
      seed.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new snr_partition{snr::congruence_closure(s->value, seed)};
  });
}

snr_status snr_enumerate_congruences(const snr_structure* s, snr_partition_list** out) {
  if (s == nullptr) return fail_null("structure");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = new snr_partition_list{snr::enumerate_congruences(s->value)};
  });
}

size_t snr_partition_list_size(const snr_partition_list* list) {
  return list != nullptr ? list->items.size() : 0;
}

snr_status snr_partition_list_get(const snr_partition_list* list, size_t index,
                                  snr_partition** out) {
  if (list == nullptr) return fail_null("list");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    if (index >= list->items.size())
      snr::fail(snr::errc::out_of_range, "partition index out of range");
    *out = new snr_partition{list->items[index]};
  });
}

snr_status snr_partition_list_format(const snr_partition_list* list, size_t index, char** out) {
  if (list == nullptr) return fail_null("list");
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    if (index >= list->items.size())
      snr::fail(snr::errc::out_of_range, "partition index out of range");
    *out = dup_string(snr::format_partition(list->items[index]));
  });
}

void snr_partition_list_free(snr_partition_list* list) { delete list; }

snr_status snr_quotient(const snr_structure* s, const snr_partition* p, snr_structure** out) {
  if (s == nullptr) return fail_null("structure");
  if (p == nullptr) return fail_null("partition");
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = new snr_structure{snr::quotient(s->value, p->value)}; });
}

}  // extern "C"
