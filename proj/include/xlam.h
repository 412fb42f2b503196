/* xlam -- cross-lingual argument mining toolkit
 *
 * C API over the core library. All functions return a status code; on
 * failure xlam_last_error() describes the problem (thread-local). Objects
 * are opaque handles released with their matching _free function. Strings
 * produced by the library (out char** parameters) are released with
 * xlam_string_free. Out parameters may be NULL when the caller does not
 * want that result, unless noted otherwise.
 */
#ifndef XLAM_H_
#define XLAM_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(XLAM_BUILD)
#define XLAM_API __declspec(dllexport)
#else
#define XLAM_API __declspec(dllimport)
#endif
#else
#define XLAM_API __attribute__((visibility("default")))
#endif

typedef enum xlam_status {
  XLAM_OK = 0,
  XLAM_ERR_PARSE = 1,       /* malformed input file */
  XLAM_ERR_VALIDATION = 2,  /* well-formed input violating an invariant */
  XLAM_ERR_LOOKUP = 3,      /* unknown word or document id */
  XLAM_ERR_IO = 4,          /* filesystem failure */
  XLAM_ERR_INVALID_ARG = 5, /* null handle or out-of-range argument */
  XLAM_ERR_INTERNAL = 6
} xlam_status;

typedef struct xlam_corpus xlam_corpus;         /* labeled corpus + label space */
typedef struct xlam_tokens xlam_tokens;         /* unlabeled tokenized text */
typedef struct xlam_alignment xlam_alignment;   /* per-sentence word alignments */
typedef struct xlam_embeddings xlam_embeddings; /* word -> vector table */
typedef struct xlam_model xlam_model;           /* trained tagger */

XLAM_API const char *xlam_version(void);
/* Message for the most recent failure on this thread; never NULL. */
XLAM_API const char *xlam_last_error(void);
XLAM_API void xlam_string_free(char *s);

/* --- corpus ------------------------------------------------------------ */

/* types_csv: comma-separated component types, NULL for the default
 * MajorClaim,Claim,Premise. repair != 0 rewrites dangling I- labels to B-;
 * repaired (optional) receives the number rewritten. */
XLAM_API xlam_status xlam_corpus_parse_file(const char *path, const char *types_csv, int repair,
                                            xlam_corpus **out, long *repaired);
XLAM_API xlam_status xlam_corpus_parse_string(const char *text, const char *types_csv, int repair,
                                              xlam_corpus **out, long *repaired);
XLAM_API xlam_status xlam_corpus_write_file(const xlam_corpus *corpus, const char *path);
XLAM_API xlam_status xlam_corpus_to_string(const xlam_corpus *corpus, char **out);
XLAM_API void xlam_corpus_free(xlam_corpus *corpus);

XLAM_API long xlam_corpus_num_documents(const xlam_corpus *corpus);
XLAM_API long xlam_corpus_num_sentences(const xlam_corpus *corpus);
XLAM_API long xlam_corpus_num_tokens(const xlam_corpus *corpus);

XLAM_API xlam_status xlam_corpus_stats_text(const xlam_corpus *corpus, char **out);
XLAM_API xlam_status xlam_corpus_stats_json(const xlam_corpus *corpus, char **out);

/* Document-level split. test_ids (may be NULL when n_test_ids is 0) pins
 * documents into the test part; dev_fraction of the remainder becomes dev
 * after a seeded shuffle. Every out corpus is required. */
XLAM_API xlam_status xlam_corpus_split(const xlam_corpus *corpus, double dev_fraction,
                                       const char *const *test_ids, long n_test_ids,
                                       unsigned long long seed, xlam_corpus **train,
                                       xlam_corpus **dev, xlam_corpus **test);

/* --- tokens ------------------------------------------------------------ */

XLAM_API xlam_status xlam_tokens_read_file(const char *path, xlam_tokens **out);
XLAM_API xlam_status xlam_tokens_of_corpus(const xlam_corpus *corpus, xlam_tokens **out);
XLAM_API xlam_status xlam_tokens_write_file(const xlam_tokens *tokens, const char *path);
XLAM_API long xlam_tokens_num_sentences(const xlam_tokens *tokens);
XLAM_API void xlam_tokens_free(xlam_tokens *tokens);

/* --- alignments --------------------------------------------------------- */

/* Pharaoh "i-j" lines, one per sentence pair; sentence lengths are taken
 * from the source corpus and target tokens. swap != 0 reads "j-i".
 * duplicates (optional) receives the number of repeated links dropped. */
XLAM_API xlam_status xlam_alignment_parse_file(const char *path, const xlam_corpus *source,
                                               const xlam_tokens *target, int swap,
                                               xlam_alignment **out, long *duplicates);
XLAM_API xlam_status xlam_alignment_write_file(const xlam_alignment *alignment, const char *path);
XLAM_API long xlam_alignment_num_sentences(const xlam_alignment *alignment);
XLAM_API void xlam_alignment_free(xlam_alignment *alignment);

/* --- projection --------------------------------------------------------- */

XLAM_API xlam_status xlam_project(const xlam_corpus *source, const xlam_tokens *target,
                                  const xlam_alignment *alignment, xlam_corpus **projected,
                                  char **report_text, char **report_json);

/* --- baseline ----------------------------------------------------------- */

/* Estimates the per-sentence component distribution on train and labels
 * test from seeded draws. last_token_o != 0 forces final tokens to O. */
XLAM_API xlam_status xlam_baseline(const xlam_corpus *train, const xlam_corpus *test,
                                   int last_token_o, unsigned long long seed,
                                   xlam_corpus **labeled, char **distribution_text);

/* --- embeddings --------------------------------------------------------- */

XLAM_API xlam_status xlam_embeddings_load_file(const char *path, xlam_embeddings **out,
                                               long *duplicates);
XLAM_API xlam_status xlam_embeddings_write_file(const xlam_embeddings *table, const char *path);
XLAM_API int xlam_embeddings_dim(const xlam_embeddings *table);
XLAM_API long xlam_embeddings_size(const xlam_embeddings *table);
XLAM_API void xlam_embeddings_free(xlam_embeddings *table);

XLAM_API xlam_status xlam_cosine(const xlam_embeddings *table, const char *a, const char *b,
                                 double *out);
/* One "word<TAB>similarity" line per neighbor; a final "cross_language=N"
 * line appears when the query word carries a language tag. */
XLAM_API xlam_status xlam_neighbors_text(const xlam_embeddings *table, const char *word, int k,
                                         char **out);

/* Per pair, a seeded shuffle of the concatenated tokens (BIVCD input). */
XLAM_API xlam_status xlam_bivcd_prep(const xlam_tokens *source, const xlam_tokens *target,
                                     unsigned long long seed, xlam_tokens **merged);

/* --- tagger ------------------------------------------------------------- */

typedef struct xlam_train_options {
  int window;                 /* context radius, default 1 */
  int use_char;               /* character n-gram features, default 1 */
  const int *char_orders;     /* NULL -> {2,3} */
  int n_char_orders;
  int char_buckets;           /* default 4096 */
  int epochs;                 /* default 50 */
  int patience;               /* default 10 */
  unsigned long long seed;    /* default 1 */
  int bio_bans;               /* constrain decoding to valid BIO, default 1 */
  const char *log_path;       /* NULL -> no training log */
} xlam_train_options;

XLAM_API void xlam_train_options_init(xlam_train_options *options);

/* dev may be NULL (disables early stopping). */
XLAM_API xlam_status xlam_train(const xlam_corpus *train, const xlam_corpus *dev,
                                const xlam_embeddings *table, const xlam_train_options *options,
                                xlam_model **out);

XLAM_API xlam_status xlam_model_save_file(const xlam_model *model, const char *path);
XLAM_API xlam_status xlam_model_load_file(const char *path, xlam_model **out);
XLAM_API xlam_status xlam_model_text(const xlam_model *model, char **out);
XLAM_API void xlam_model_free(xlam_model *model);

XLAM_API xlam_status xlam_predict_tokens(const xlam_model *model, const xlam_embeddings *table,
                                         const xlam_tokens *tokens, xlam_corpus **out);
XLAM_API xlam_status xlam_predict_corpus(const xlam_model *model, const xlam_embeddings *table,
                                         const xlam_corpus *corpus, xlam_corpus **out);

/* --- evaluation ---------------------------------------------------------- */

/* full_label_set != 0 scores every label in the space instead of the union
 * of labels present in gold or pred. */
XLAM_API xlam_status xlam_evaluate(const xlam_corpus *gold, const xlam_corpus *pred,
                                   int full_label_set, char **report_text, char **report_json);
/* Fraction of identically labeled tokens. */
XLAM_API xlam_status xlam_agreement(const xlam_corpus *a, const xlam_corpus *b, double *out);

/* --- synthetic data ------------------------------------------------------ */

typedef struct xlam_synth_options {
  int documents;             /* default 20 */
  int sentences_per_doc;     /* default 10 */
  int min_len;               /* default 5 */
  int max_len;               /* default 12 */
  const double *type_probs;  /* NULL -> {0.25, 0.35, 0.5}; one per type */
  int n_type_probs;
  long vocab_size;           /* default 200 */
  int swaps;                 /* default 1 */
  double noise;              /* default 0.0 */
  int emb_dim;               /* default 16 */
  unsigned long long seed;   /* default 1 */
  const char *types_csv;     /* NULL -> MajorClaim,Claim,Premise */
} xlam_synth_options;

XLAM_API void xlam_synth_options_init(xlam_synth_options *options);

XLAM_API xlam_status xlam_synth(const xlam_synth_options *options, xlam_corpus **source,
                                xlam_tokens **target, xlam_alignment **alignment,
                                xlam_corpus **gold_target, xlam_embeddings **table);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XLAM_H_ */
