/* C interface of the qmwords library: exact quasi-metric distances on finite
 * and eventually periodic words, the poset of formal balls, constructive
 * Yoneda limits and chain lubs, way-below verdicts, property suites, and a
 * brute-force finite-poset oracle.
 *
 * Conventions: functions returning a pointer yield NULL on failure and
 * functions returning int yield -1; the thread-local qmw_last_error state
 * then carries the error code, name and message.  Strings returned as
 * `char*` are heap-allocated and released with qmw_free_string.
 */
#ifndef QMWORDS_H
#define QMWORDS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  QMW_OK = 0,
  QMW_ERR_PARSE = 1,
  QMW_ERR_ALPHABET_MISMATCH = 2,
  QMW_ERR_INDEX_OUT_OF_RANGE = 3,
  QMW_ERR_NOT_LEFT_K_CAUCHY = 4,
  QMW_ERR_MALFORMED_PRESENTATION = 5,
  QMW_ERR_NOT_ASCENDING = 6,
  QMW_ERR_TOO_LARGE = 7,
  QMW_ERR_PRECONDITION_VIOLATED = 8,
  QMW_ERR_ORDER_AXIOM = 9,
  QMW_ERR_INVALID_ARGUMENT = 10,
  QMW_ERR_INTERNAL = 11
};

typedef struct qmw_alphabet qmw_alphabet;
typedef struct qmw_word qmw_word;
typedef struct qmw_ball qmw_ball;
typedef struct qmw_chain qmw_chain;
typedef struct qmw_sequence qmw_sequence;

const char* qmw_version(void);

int qmw_last_error(void);
const char* qmw_last_error_name(void);
const char* qmw_last_error_message(void);
/* -1 when the last error carries no input position. */
long qmw_last_error_position(void);

void qmw_free_string(char* s);

/* ----- alphabets and words ----- */

qmw_alphabet* qmw_alphabet_new(const char* symbols);
void qmw_alphabet_free(qmw_alphabet* a);

/* Word literals: "eps", "abc", "ab(cd)^w".  Parsing canonicalizes. */
qmw_word* qmw_word_parse(const qmw_alphabet* a, const char* text);
void qmw_word_free(qmw_word* w);
char* qmw_word_format(const qmw_word* w);

int qmw_word_is_infinite(const qmw_word* w);
/* Length, or -1 for infinite words. */
long long qmw_word_length(const qmw_word* w);
/* Symbol at index i as an unsigned char value. */
int qmw_word_symbol_at(const qmw_word* w, uint64_t i);
qmw_word* qmw_word_take(const qmw_word* w, uint64_t n);
qmw_word* qmw_word_canonicalize(const qmw_word* w);
int qmw_word_equals(const qmw_word* x, const qmw_word* y);
int qmw_word_is_prefix(const qmw_word* x, const qmw_word* y);
qmw_word* qmw_word_lcp(const qmw_word* x, const qmw_word* y);

/* ----- distances ----- */

/* metric is one of: baire, dw, d0, qb, sym-dw, sym-d0, sym-qb.
 * The result is a reduced fraction such as "0", "1", "3/8". */
char* qmw_dist(const char* metric, const qmw_word* x, const qmw_word* y);

/* "2^-k" when the fraction is an exact negative power of two, else NULL
 * with no error raised. */
char* qmw_ratio_pow2_form(const char* ratio);

/* ----- formal balls, chains, sequences ----- */

/* Ball literal: "(word, p/q)". */
qmw_ball* qmw_ball_parse(const qmw_alphabet* a, const char* literal);
void qmw_ball_free(qmw_ball* b);
char* qmw_ball_format(const qmw_ball* b);
char* qmw_ball_center(const qmw_ball* b);
char* qmw_ball_radius(const qmw_ball* b);
int qmw_ball_leq(const char* metric, const qmw_ball* b1, const qmw_ball* b2);

/* Chain literals: "finite: (w1,r1) (w2,r2) ...",
 * "param: target=<word> lengths=<sched> radii=<s>+<c>*2^-n",
 * "param: center=<word> radii=<s>+<c>*2^-n". */
qmw_chain* qmw_chain_parse(const qmw_alphabet* a, const char* literal);
void qmw_chain_free(qmw_chain* c);
char* qmw_chain_format(const qmw_chain* c);
qmw_ball* qmw_chain_element(const qmw_chain* c, uint64_t n);
/* metric must be qb or baire. */
qmw_ball* qmw_chain_lub(const char* metric, const qmw_chain* c);
qmw_chain* qmw_approximation_chain(const qmw_ball* b);

/* Sequence literals: "explicit: w1 w2 ... [!]" (! marks the last word as
 * repeated forever) or "prefixes: target=<word> lengths=<sched>". */
qmw_sequence* qmw_sequence_parse(const qmw_alphabet* a, const char* literal);
void qmw_sequence_free(qmw_sequence* s);
char* qmw_sequence_format(const qmw_sequence* s);
int qmw_is_left_k_cauchy(const qmw_sequence* s);
qmw_word* qmw_yoneda_limit(const qmw_sequence* s);
/* Number of probes at which inf_n sup_{m>=n} q_b(x_m, y) differs from
 * q_b(candidate, y); 0 means the candidate satisfies the limit law. */
int qmw_verify_yoneda_limit(const qmw_sequence* s, const qmw_word* candidate,
                            const qmw_word* const* probes, size_t n_probes);

/* ----- way-below verdicts ----- */

enum { QMW_WB_UNKNOWN = 0, QMW_WB_CERTIFIED = 1, QMW_WB_REFUTED = 2 };

/* detail_out (optional) receives the pattern id or the refutation values. */
int qmw_way_below_refute(const char* metric, const qmw_ball* b1, const qmw_ball* b2,
                         char** detail_out);
int qmw_way_below_sufficient_qb(const qmw_ball* b1, const qmw_ball* b2, char** detail_out);

enum { QMW_WITNESS_FOUND = 0, QMW_NO_WITNESS = 1, QMW_NOT_ABOVE_B2 = 2 };

int qmw_way_below_witness_check(const qmw_ball* b1, const qmw_ball* b2, const qmw_chain* chain,
                                uint64_t* index_out);

/* ----- check suites ----- */

typedef struct {
  const char* alphabet; /* NULL -> "ab" */
  int max_len;          /* < 0 -> 4 */
  const char* periodic; /* comma-separated word literals; NULL -> default */
  const char* radii;    /* comma-separated fractions; NULL -> default */
  uint64_t seed;
  const char* metric;   /* axioms-suite filter; NULL -> all four */
} qmw_check_config;

/* suite is one of: axioms, t1, remarks, balls, yoneda, theorem.
 * report_out receives the text (or JSON) report; pass_out is 1 when the
 * suite found no violations. */
int qmw_run_check(const char* suite, const qmw_check_config* cfg, int as_json, char** report_out,
                  int* pass_out);

/* ----- finite poset oracle ----- */

/* Validates the poset text and, within the enumeration bound, reports dcpo,
 * continuity and the way-below relation.  Returns QMW_OK with *valid_out = 0
 * when the input parses but violates an order axiom; parse errors are
 * reported as QMW_ERR_PARSE. */
int qmw_oracle_poset_text(const char* text, int as_json, char** report_out, int* valid_out);

int qmw_oracle_ball_grid(const char* metric, const char* alphabet, const char* words_csv,
                         const char* radii_csv, int as_json, char** report_out, int* valid_out);

#ifdef __cplusplus
}
#endif

#endif /* QMWORDS_H */
