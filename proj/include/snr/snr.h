/* C interface to the seminearring toolkit.
 *
 * Conventions:
 *  - Every function that can fail returns snr_status; SNR_OK is 0. On
 *    failure snr_last_error() returns a message for the calling thread.
 *  - Handles are opaque; free them with the matching *_free function.
 *  - Strings and arrays returned through out-parameters are owned by the
 *    caller: release strings with snr_string_free and numeric buffers
 *    with snr_buffer_free.
 *  - Subsets of the carrier travel as uint64_t bitmasks (bit x set means
 *    element x is in the subset); carriers are capped at 64 elements.
 *  - Property checks report through (holds, witness): *holds is 1 or 0,
 *    and when a check fails *witness (if requested) receives a one-line
 *    counterexample description, otherwise NULL.
 */
#ifndef SNR_H_
#define SNR_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum snr_status {
  SNR_OK = 0,
  SNR_ERR_INVALID_ARGUMENT = 1,
  SNR_ERR_ARITY_MISMATCH = 2,
  SNR_ERR_OUT_OF_RANGE = 3,
  SNR_ERR_SIZE_CAP = 4,
  SNR_ERR_PARSE = 5,
  SNR_ERR_WRONG_ENTRY_COUNT = 6,
  SNR_ERR_EMPTY_SUBSET = 7,
  SNR_ERR_EMPTY_INTERSECTION = 8,
  SNR_ERR_ENUMERATION_GUARD = 9,
  SNR_ERR_SEARCH_GUARD = 10,
  SNR_ERR_DOMAIN_MISMATCH = 11,
  SNR_ERR_NOT_IDENTITY = 12,
  SNR_ERR_NOT_UNIT = 13,
  SNR_ERR_NOT_HOMOMORPHISM = 14,
  SNR_ERR_NOT_EPIMORPHISM = 15,
  SNR_ERR_NOT_IDEAL = 16,
  SNR_ERR_NOT_CONGRUENCE = 17,
  SNR_ERR_INTERNAL = 18
} snr_status;

typedef struct snr_structure snr_structure;
typedef struct snr_report snr_report;
typedef struct snr_units snr_units;
typedef struct snr_partition snr_partition;
typedef struct snr_partition_list snr_partition_list;
typedef struct snr_morphism_list snr_morphism_list;

/* Message describing the calling thread's most recent failure; empty
 * string when the last call succeeded. The pointer stays valid until the
 * thread's next snr_* call. */
const char* snr_last_error(void);

void snr_string_free(char* str);
void snr_buffer_free(void* buffer);

/* ---- structures ---- */

/* Parses the structure file format (see README). */
snr_status snr_structure_parse(const char* text, snr_structure** out);

/* Canonical text form; parse(serialize(s)) reproduces s bit-exactly. */
snr_status snr_structure_serialize(const snr_structure* s, char** out);

snr_status snr_structure_name(const snr_structure* s, char** out);

/* Carrier size / operation arities; -1 on a NULL handle. */
int snr_structure_carrier(const snr_structure* s);
int snr_structure_m(const snr_structure* s);
int snr_structure_n(const snr_structure* s);

/* Applies f (m arguments) or g (n arguments). */
snr_status snr_eval_f(const snr_structure* s, const int* args, size_t nargs, int* out);
snr_status snr_eval_g(const snr_structure* s, const int* args, size_t nargs, int* out);

/* 1 when both structures have identical carrier, arities and tables
 * (names ignored); 0 otherwise or on NULL. */
int snr_structure_same_tables(const snr_structure* a, const snr_structure* b);

void snr_structure_free(snr_structure* s);

/* ---- generators ---- */

/* Subsets of a base_size-element set under m-ary union / n-ary
 * intersection; carrier 2^base_size, base_size <= 6. */
snr_status snr_gen_powerset(int base_size, int m, int n, snr_structure** out);

/* Z_q under m-ary sum / n-ary product mod q, 1 <= q <= 64. */
snr_status snr_gen_modring(int q, int m, int n, snr_structure** out);

/* Pairs over Z_q (carrier q^2, m=2, n=3); left- but not
 * right-distributive for q >= 2. */
snr_status snr_gen_affine(int q, snr_structure** out);

/* Componentwise direct product; arities must match and the carrier
 * product must stay <= 64. */
snr_status snr_gen_product(const snr_structure* a, const snr_structure* b, snr_structure** out);

/* ---- axiom checks and classification ---- */

/* op is 'f' or 'g'. */
snr_status snr_check_associative(const snr_structure* s, char op, int* holds, char** witness);
snr_status snr_check_commutative(const snr_structure* s, char op, int* holds, char** witness);

/* g distributes over f in slot t, 1 <= t <= n. */
snr_status snr_check_distributive(const snr_structure* s, int t, int* holds, char** witness);

/* Ascending list of unities (g-identities). */
snr_status snr_unities(const snr_structure* s, int** elems, size_t* count);

snr_status snr_classify(const snr_structure* s, snr_report** out);
snr_status snr_report_text(const snr_report* report, char** out);
snr_status snr_report_json(const snr_report* report, char** out);

/* 1 when the structure is a t-seminearring for at least one slot t. */
int snr_report_is_seminearring(const snr_report* report);

void snr_report_free(snr_report* report);

/* ---- subalgebras ---- */

snr_status snr_is_subseminearring(const snr_structure* s, uint64_t sub, int* holds,
                                  char** witness);
snr_status snr_sub_closure(const snr_structure* s, uint64_t seed, uint64_t* out);

/* All nonempty closed subsets, ascending bitmask order; carrier <= 20. */
snr_status snr_enumerate_subs(const snr_structure* s, uint64_t** subs, size_t* count);

snr_status snr_intersect_subs(const snr_structure* s, const uint64_t* family, size_t count,
                              uint64_t* out);

/* ---- ideals ---- */

snr_status snr_is_ideal(const snr_structure* s, uint64_t sub, int* holds, char** witness);
snr_status snr_is_i_ideal(const snr_structure* s, uint64_t sub, int position, int* holds,
                          char** witness);
snr_status snr_ideal_closure(const snr_structure* s, uint64_t seed, uint64_t* out);

/* Subsets that are i-ideals for every listed position; positions NULL
 * (or count 0) means every slot 1..n. */
snr_status snr_enumerate_ideals(const snr_structure* s, const int* positions,
                                size_t position_count, uint64_t** ideals, size_t* count);

snr_status snr_intersect_ideals(const snr_structure* s, const uint64_t* family, size_t count,
                                uint64_t* out);

/* ---- units ---- */

/* Least two-sided inverse of x for unity e, or -1 when x is not
 * invertible. */
snr_status snr_g_inverse(const snr_structure* s, int e, int x, int* out);

/* Units report plus the three unit-theorem sweeps for unity e. */
snr_status snr_units_compute(const snr_structure* s, int e, snr_units** out);

/* Report and sweep summaries as display text. */
snr_status snr_units_text(const snr_units* units, char** out);

/* 1 when the inverse-identities, shift and product-closure sweeps all
 * passed. */
int snr_units_all_hold(const snr_units* units);

snr_status snr_units_members(const snr_units* units, int** elems, size_t* count);

/* Recorded inverse of x, or -1 when x is not a unit. */
int snr_units_inverse(const snr_units* units, int x);

void snr_units_free(snr_units* units);

/* ---- homomorphisms ----
 *
 * A map between structures of equal arities is passed as an array of
 * `len` codomain elements, where map[x] is the image of domain element
 * x and len equals the domain carrier. */

snr_status snr_is_homomorphism(const snr_structure* dom, const snr_structure* cod,
                               const int* map, size_t len, int* holds, char** witness);

/* All homomorphisms in lexicographic map order. limit 0 means
 * unlimited, in which case the k2^k1 search space must stay within
 * 2^24. */
snr_status snr_find_homomorphisms(const snr_structure* dom, const snr_structure* cod,
                                  uint64_t limit, snr_morphism_list** out);

size_t snr_morphism_list_size(const snr_morphism_list* list);
snr_status snr_morphism_list_map(const snr_morphism_list* list, size_t index, int** map,
                                 size_t* len);
snr_status snr_morphism_list_flags(const snr_morphism_list* list, size_t index, int* mono,
                                   int* epi, int* iso);
void snr_morphism_list_free(snr_morphism_list* list);

/* Composite of phi (middle -> target) after psi (source -> middle),
 * verified to be a homomorphism. */
snr_status snr_compose(const snr_structure* source, const snr_structure* middle,
                       const snr_structure* target, const int* phi, size_t phi_len,
                       const int* psi, size_t psi_len, int** out_map, size_t* out_len);

/* Image subset, verified closed in the codomain. */
snr_status snr_image(const snr_structure* dom, const snr_structure* cod, const int* map,
                     size_t len, uint64_t* out);

/* Image of a domain ideal under a surjective homomorphism, verified to
 * be an ideal of the codomain. */
snr_status snr_push_ideal(const snr_structure* dom, const snr_structure* cod, const int* map,
                          size_t len, uint64_t ideal, uint64_t* out);

/* Fiber partition of the domain, verified to be a congruence. */
snr_status snr_kernel(const snr_structure* dom, const snr_structure* cod, const int* map,
                      size_t len, snr_partition** out);

/* ---- partitions and congruences ---- */

/* Literal syntax: blocks separated by '|', elements by ',', e.g.
 * "0,2|1,3"; every element 0..carrier-1 exactly once. */
snr_status snr_partition_parse(const char* text, int carrier, snr_partition** out);

snr_status snr_partition_format(const snr_partition* p, char** out);
int snr_partition_block_count(const snr_partition* p);

/* Block index of element x, or -1 on bad input. */
int snr_partition_block_of(const snr_partition* p, int x);

void snr_partition_free(snr_partition* p);

snr_status snr_is_congruence(const snr_structure* s, const snr_partition* p, int* holds,
                             char** witness);

/* Least congruence joining each (pairs[2i], pairs[2i+1]). */
snr_status snr_congruence_closure(const snr_structure* s, const int* pairs, size_t pair_count,
                                  snr_partition** out);

/* Every congruence, coarsest-last; carrier <= 10. */
snr_status snr_enumerate_congruences(const snr_structure* s, snr_partition_list** out);

size_t snr_partition_list_size(const snr_partition_list* list);
snr_status snr_partition_list_get(const snr_partition_list* list, size_t index,
                                  snr_partition** out);
snr_status snr_partition_list_format(const snr_partition_list* list, size_t index, char** out);
void snr_partition_list_free(snr_partition_list* list);

/* Factor structure on the blocks of a congruence. */
snr_status snr_quotient(const snr_structure* s, const snr_partition* p, snr_structure** out);

#ifdef __cplusplus
}
#endif

#endif /* SNR_H_ */
