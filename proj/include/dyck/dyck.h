/*
 * dyck: Dyck word validation, prime-fragment factorization, peak/valley
 * extraction and reconstruction, modified-grid transforms, Cantor pairing
 * codes, and exhaustive enumeration.
 *
 * Conventions:
 *   - Every fallible function returns a dyck_status; DYCK_OK is 0.
 *   - Opaque handles (dyck_word, dyck_enum) are released with their
 *     dedicated *_free functions.
 *   - Arrays and strings returned through out-parameters are owned by the
 *     caller and released with dyck_free(). Out-parameters are left
 *     untouched on failure.
 */

#ifndef DYCK_DYCK_H
#define DYCK_DYCK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DYCK_BUILD)
#define DYCK_API __declspec(dllexport)
#else
#define DYCK_API __declspec(dllimport)
#endif
#else
#define DYCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dyck_status {
  DYCK_OK = 0,
  DYCK_ERR_INVALID_SYMBOL = 1,
  DYCK_ERR_PREFIX_UNDERFLOW = 2,
  DYCK_ERR_UNBALANCED = 3,
  DYCK_ERR_NOT_A_PATH = 4,
  DYCK_ERR_EMPTY_WORD = 5,
  DYCK_ERR_INVALID_ADJACENCY = 6,
  DYCK_ERR_INVALID_POINT_SET = 7,
  DYCK_ERR_PARITY = 8,
  DYCK_ERR_OVERFLOW = 9,
  DYCK_ERR_BOUND_EXCEEDED = 10,
  DYCK_ERR_INVALID_ARGUMENT = 11,
  DYCK_ERR_NOMEM = 12
} dyck_status;

/* Grid node. For the standard grid x is the step index and y the level;
 * for the modified grid x holds the condensed coordinate (x - y) / 2. */
typedef struct dyck_point {
  int64_t x;
  int64_t y;
} dyck_point;

/* One peak with its full adjacent ascent and descent. The peak is given
 * in the coordinates of the word the fragment was cut from. */
typedef struct dyck_fragment {
  int64_t ascent_len;
  int64_t descent_len;
  dyck_point peak;
} dyck_fragment;

typedef struct dyck_word dyck_word; /* opaque: a validated Dyck word */
typedef struct dyck_enum dyck_enum; /* opaque: enumeration cursor */

DYCK_API const char* dyck_version(void);

/* Short stable name for a status code, e.g. "prefix underflow". */
DYCK_API const char* dyck_status_str(dyck_status status);

/* Releases any array or string returned by this library. NULL is a no-op. */
DYCK_API void dyck_free(void* buffer);

/* ---- words ---------------------------------------------------------- */

/* Parses text over the two-character alphabet {up, down}. On failure
 * *error_pos (when non-NULL) receives the earliest offending position,
 * or -1 when the error has no position (unbalanced word). */
DYCK_API dyck_status dyck_word_parse(const char* text, char up, char down,
                                     dyck_word** out, int64_t* error_pos);

DYCK_API void dyck_word_free(dyck_word* word);

DYCK_API int64_t dyck_word_semilength(const dyck_word* word);

/* Renders the word over the given alphabet as a NUL-terminated string. */
DYCK_API dyck_status dyck_word_text(const dyck_word* word, char up, char down,
                                    char** out);

/* Levels y_0..y_2n visited along the word; *count = 2n + 1. */
DYCK_API dyck_status dyck_word_levels(const dyck_word* word, int64_t** levels,
                                      size_t* count);

DYCK_API dyck_status dyck_word_peaks(const dyck_word* word,
                                     dyck_point** points, size_t* count);

/* Interior valleys in path order; when include_terminal is nonzero and
 * the word is nonempty, the end point (2n, 0) is appended. */
DYCK_API dyck_status dyck_word_valleys(const dyck_word* word,
                                       int include_terminal,
                                       dyck_point** points, size_t* count);

/* *prime = 1 iff the word is up^n down^n. DYCK_ERR_EMPTY_WORD for n = 0. */
DYCK_API dyck_status dyck_word_is_prime(const dyck_word* word, int* prime);

/* ASCII drawing, one row per level from the top down, each row ending in
 * '\n'; the empty word renders as "". */
DYCK_API dyck_status dyck_word_render_ascii(const dyck_word* word, char** out);

/* ---- factorization -------------------------------------------------- */

/* Decomposition into prime fragments; the concatenation of the fragments
 * reproduces the word. The empty word yields an empty list. */
DYCK_API dyck_status dyck_word_factorize(const dyck_word* word,
                                         dyck_fragment** fragments,
                                         size_t* count);

/* Inverse of dyck_word_factorize. DYCK_ERR_NOT_A_PATH when the running
 * level dips below zero or does not end at zero. */
DYCK_API dyck_status dyck_word_from_fragments(const dyck_fragment* fragments,
                                              size_t count, dyck_word** out);

/* ---- peak / valley reconstruction ----------------------------------- */

/* Checks every peak-set rule. *valid is 1 or 0; *report (when non-NULL
 * requested) receives "valid" or one line per violation. Always returns
 * DYCK_OK for well-formed arguments. */
DYCK_API dyck_status dyck_validate_peak_set(const dyck_point* points,
                                            size_t count, int* valid,
                                            char** report);

/* Same, for a canonical valley set (terminal point included, origin
 * excluded; adjacency is checked against the implicit origin). */
DYCK_API dyck_status dyck_validate_valley_set(const dyck_point* points,
                                              size_t count, int* valid,
                                              char** report);

/* Derives all valleys (terminal included) from a valid peak set. */
DYCK_API dyck_status dyck_valleys_from_peaks(const dyck_point* peaks,
                                             size_t count,
                                             dyck_point** valleys,
                                             size_t* out_count);

/* Derives all peaks from a valid canonical valley set. */
DYCK_API dyck_status dyck_peaks_from_valleys(const dyck_point* valleys,
                                             size_t count, dyck_point** peaks,
                                             size_t* out_count);

/* The unique word with this peak set. The whole set is validated before
 * any step is emitted; DYCK_ERR_INVALID_POINT_SET on failure. */
DYCK_API dyck_status dyck_word_from_peaks(const dyck_point* peaks,
                                          size_t count, dyck_word** out);

/* The unique word with this canonical valley set. */
DYCK_API dyck_status dyck_word_from_valleys(const dyck_point* valleys,
                                            size_t count, dyck_word** out);

/* ---- modified grid and integer codes -------------------------------- */

/* ((x - y)/2, y). DYCK_ERR_PARITY when x - y is odd. */
DYCK_API dyck_status dyck_point_to_modified(dyck_point p, dyck_point* out);

/* (2*x + y, y); exact inverse of dyck_point_to_modified. */
DYCK_API dyck_status dyck_point_from_modified(dyck_point m, dyck_point* out);

DYCK_API dyck_status dyck_word_peaks_modified(const dyck_word* word,
                                              dyck_point** points,
                                              size_t* count);

/* (k1 + k2)(k1 + k2 + 1)/2 + k2. DYCK_ERR_OVERFLOW past 64 bits. */
DYCK_API dyck_status dyck_cantor_pair(uint64_t k1, uint64_t k2, uint64_t* out);

/* Unique (k1, k2) with dyck_cantor_pair(k1, k2) == z; exact over the full
 * 64-bit range. */
DYCK_API dyck_status dyck_cantor_unpair(uint64_t z, uint64_t* k1,
                                        uint64_t* k2);

/* Cantor code of each modified peak (xm paired with y), in path order. */
DYCK_API dyck_status dyck_word_encode_peaks(const dyck_word* word,
                                            uint64_t** codes, size_t* count);

/* ---- enumeration ----------------------------------------------------- */

/* Cursor over every Dyck word of the given semilength, each exactly once,
 * in lexicographic order of the u/d rendering ('d' < 'u').
 * DYCK_ERR_BOUND_EXCEEDED for semilength > 16. */
DYCK_API dyck_status dyck_enum_create(int64_t semilength, dyck_enum** out);

/* Returns 1 and stores the next word, or 0 once exhausted. */
DYCK_API int dyck_enum_next(dyck_enum* cursor, dyck_word** out);

DYCK_API void dyck_enum_free(dyck_enum* cursor);

/* n-th Catalan number as a decimal string, exact at any size. */
DYCK_API dyck_status dyck_catalan_decimal(int64_t n, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DYCK_DYCK_H */
