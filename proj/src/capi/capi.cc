// xlam -- cross-lingual argument mining toolkit
//
// C API: thin handle wrappers over the core, mapping exceptions to status
// codes and keeping the failure message in thread-local storage.
#include "xlam.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/alignment.h"
#include "core/baseline.h"
#include "core/conll.h"
#include "core/corpus.h"
#include "core/embeddings.h"
#include "core/error.h"
#include "core/eval.h"
#include "core/label.h"
#include "core/projection.h"
#include "core/synth.h"
#include "core/tagger.h"

struct xlam_corpus {
  xlam::Corpus corpus;  // carries its label space
};

struct xlam_tokens {
  xlam::TokenCorpus tokens;
};

struct xlam_alignment {
  xlam::BitextAlignment alignment;
};

struct xlam_embeddings {
  xlam::EmbeddingTable table;
};

struct xlam_model {
  xlam::TaggerModel model;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string &msg) { g_last_error = msg; }

template <typename F>
xlam_status wrap(F &&body) noexcept {
  try {
    return body();
  } catch (const xlam::ParseError &err) {
    set_error(err.what());
    return XLAM_ERR_PARSE;
  } catch (const xlam::ValidationError &err) {
    set_error(err.what());
    return XLAM_ERR_VALIDATION;
  } catch (const xlam::LookupError &err) {
    set_error(err.what());
    return XLAM_ERR_LOOKUP;
  } catch (const xlam::IoError &err) {
    set_error(err.what());
    return XLAM_ERR_IO;
  } catch (const std::exception &err) {
    set_error(err.what());
    return XLAM_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return XLAM_ERR_INTERNAL;
  }
}

xlam_status invalid_arg(const char *msg) {
  set_error(msg);
  return XLAM_ERR_INVALID_ARG;
}

char *c_copy(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

xlam::LabelSpace space_from_csv(const char *types_csv) {
  if (types_csv == nullptr) {
    return xlam::LabelSpace::essay_types();
  }
  std::vector<std::string> types;
  std::string text(types_csv);
  size_t begin = 0;
  while (true) {
    size_t comma = text.find(',', begin);
    types.push_back(text.substr(begin, comma == std::string::npos ? comma : comma - begin));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return xlam::LabelSpace(types);
}

void require_same_space(const xlam_corpus *a, const xlam_corpus *b) {
  if (!(a->corpus.label_space == b->corpus.label_space)) {
    throw xlam::ValidationError("corpora use different label inventories");
  }
}

}  // namespace

extern "C" {

const char *xlam_version(void) { return "0.1.0"; }

const char *xlam_last_error(void) { return g_last_error.c_str(); }

void xlam_string_free(char *s) { std::free(s); }

/* --- corpus ------------------------------------------------------------ */

xlam_status xlam_corpus_parse_file(const char *path, const char *types_csv, int repair,
                                   xlam_corpus **out, long *repaired) {
  if (path == nullptr || out == nullptr) return invalid_arg("path and out are required");
  return wrap([&]() {
    xlam::LabelSpace space = space_from_csv(types_csv);
    xlam::ParseResult parsed =
        xlam::parse_conll_file(path, space, xlam::ParseOptions{repair != 0});
    if (repaired != nullptr) *repaired = parsed.repaired_labels;
    *out = new xlam_corpus{std::move(parsed.corpus)};
    return XLAM_OK;
  });
}

xlam_status xlam_corpus_parse_string(const char *text, const char *types_csv, int repair,
                                     xlam_corpus **out, long *repaired) {
  if (text == nullptr || out == nullptr) return invalid_arg("text and out are required");
  return wrap([&]() {
    xlam::LabelSpace space = space_from_csv(types_csv);
    xlam::ParseResult parsed =
        xlam::parse_conll_string(text, space, xlam::ParseOptions{repair != 0});
    if (repaired != nullptr) *repaired = parsed.repaired_labels;
    *out = new xlam_corpus{std::move(parsed.corpus)};
    return XLAM_OK;
  });
}

xlam_status xlam_corpus_write_file(const xlam_corpus *corpus, const char *path) {
  if (corpus == nullptr || path == nullptr) return invalid_arg("corpus and path are required");
  return wrap([&]() {
    xlam::write_conll_file(corpus->corpus, path);
    return XLAM_OK;
  });
}

xlam_status xlam_corpus_to_string(const xlam_corpus *corpus, char **out) {
  if (corpus == nullptr || out == nullptr) return invalid_arg("corpus and out are required");
  return wrap([&]() {
    *out = c_copy(xlam::write_conll_string(corpus->corpus));
    return XLAM_OK;
  });
}

void xlam_corpus_free(xlam_corpus *corpus) { delete corpus; }

long xlam_corpus_num_documents(const xlam_corpus *corpus) {
  return corpus == nullptr ? -1 : static_cast<long>(corpus->corpus.documents.size());
}

long xlam_corpus_num_sentences(const xlam_corpus *corpus) {
  return corpus == nullptr ? -1 : corpus->corpus.num_sentences();
}

long xlam_corpus_num_tokens(const xlam_corpus *corpus) {
  return corpus == nullptr ? -1 : corpus->corpus.num_tokens();
}

xlam_status xlam_corpus_stats_text(const xlam_corpus *corpus, char **out) {
  if (corpus == nullptr || out == nullptr) return invalid_arg("corpus and out are required");
  return wrap([&]() {
    *out = c_copy(xlam::stats_text(xlam::corpus_stats(corpus->corpus), corpus->corpus.label_space));
    return XLAM_OK;
  });
}

xlam_status xlam_corpus_stats_json(const xlam_corpus *corpus, char **out) {
  if (corpus == nullptr || out == nullptr) return invalid_arg("corpus and out are required");
  return wrap([&]() {
    *out = c_copy(xlam::stats_json(xlam::corpus_stats(corpus->corpus), corpus->corpus.label_space));
    return XLAM_OK;
  });
}

xlam_status xlam_corpus_split(const xlam_corpus *corpus, double dev_fraction,
                              const char *const *test_ids, long n_test_ids,
                              unsigned long long seed, xlam_corpus **train, xlam_corpus **dev,
                              xlam_corpus **test) {
  if (corpus == nullptr || train == nullptr || dev == nullptr || test == nullptr) {
    return invalid_arg("corpus and all three out corpora are required");
  }
  if (n_test_ids > 0 && test_ids == nullptr) {
    return invalid_arg("test_ids is null but n_test_ids is positive");
  }
  return wrap([&]() {
    std::vector<std::string> ids;
    for (long i = 0; i < n_test_ids; ++i) {
      if (test_ids[i] == nullptr) {
        throw xlam::ValidationError("test_ids contains a null entry");
      }
      ids.emplace_back(test_ids[i]);
    }
    xlam::SplitResult split = xlam::split_corpus(corpus->corpus, ids, dev_fraction, seed);
    *train = new xlam_corpus{std::move(split.train)};
    *dev = new xlam_corpus{std::move(split.dev)};
    *test = new xlam_corpus{std::move(split.test)};
    return XLAM_OK;
  });
}

/* --- tokens ------------------------------------------------------------ */

xlam_status xlam_tokens_read_file(const char *path, xlam_tokens **out) {
  if (path == nullptr || out == nullptr) return invalid_arg("path and out are required");
  return wrap([&]() {
    *out = new xlam_tokens{xlam::read_tokens_file(path)};
    return XLAM_OK;
  });
}

xlam_status xlam_tokens_of_corpus(const xlam_corpus *corpus, xlam_tokens **out) {
  if (corpus == nullptr || out == nullptr) return invalid_arg("corpus and out are required");
  return wrap([&]() {
    *out = new xlam_tokens{xlam::tokens_of(corpus->corpus)};
    return XLAM_OK;
  });
}

xlam_status xlam_tokens_write_file(const xlam_tokens *tokens, const char *path) {
  if (tokens == nullptr || path == nullptr) return invalid_arg("tokens and path are required");
  return wrap([&]() {
    xlam::write_tokens_file(tokens->tokens, path);
    return XLAM_OK;
  });
}

long xlam_tokens_num_sentences(const xlam_tokens *tokens) {
  return tokens == nullptr ? -1 : tokens->tokens.num_sentences();
}

void xlam_tokens_free(xlam_tokens *tokens) { delete tokens; }

/* --- alignments --------------------------------------------------------- */

xlam_status xlam_alignment_parse_file(const char *path, const xlam_corpus *source,
                                      const xlam_tokens *target, int swap, xlam_alignment **out,
                                      long *duplicates) {
  if (path == nullptr || source == nullptr || target == nullptr || out == nullptr) {
    return invalid_arg("path, source, target, and out are required");
  }
  return wrap([&]() {
    xlam::PharaohResult parsed =
        xlam::parse_pharaoh_file(path, xlam::sentence_lengths(source->corpus),
                                 target->tokens.sentence_lengths(), xlam::PharaohOptions{swap != 0});
    if (duplicates != nullptr) *duplicates = parsed.duplicate_links;
    *out = new xlam_alignment{std::move(parsed.alignment)};
    return XLAM_OK;
  });
}

xlam_status xlam_alignment_write_file(const xlam_alignment *alignment, const char *path) {
  if (alignment == nullptr || path == nullptr) {
    return invalid_arg("alignment and path are required");
  }
  return wrap([&]() {
    xlam::write_pharaoh_file(alignment->alignment, path);
    return XLAM_OK;
  });
}

long xlam_alignment_num_sentences(const xlam_alignment *alignment) {
  return alignment == nullptr ? -1 : alignment->alignment.num_sentences();
}

void xlam_alignment_free(xlam_alignment *alignment) { delete alignment; }

/* --- projection --------------------------------------------------------- */

xlam_status xlam_project(const xlam_corpus *source, const xlam_tokens *target,
                         const xlam_alignment *alignment, xlam_corpus **projected,
                         char **report_text, char **report_json) {
  if (source == nullptr || target == nullptr || alignment == nullptr || projected == nullptr) {
    return invalid_arg("source, target, alignment, and projected are required");
  }
  return wrap([&]() {
    auto [corpus, report] =
        xlam::project_corpus(source->corpus, target->tokens, alignment->alignment);
    if (report_text != nullptr) {
      *report_text = c_copy(xlam::report_text(report, source->corpus.label_space));
    }
    if (report_json != nullptr) {
      *report_json = c_copy(xlam::report_json(report, source->corpus.label_space));
    }
    *projected = new xlam_corpus{std::move(corpus)};
    return XLAM_OK;
  });
}

/* --- baseline ----------------------------------------------------------- */

xlam_status xlam_baseline(const xlam_corpus *train, const xlam_corpus *test, int last_token_o,
                          unsigned long long seed, xlam_corpus **labeled,
                          char **distribution_text) {
  if (train == nullptr || test == nullptr || labeled == nullptr) {
    return invalid_arg("train, test, and labeled are required");
  }
  return wrap([&]() {
    require_same_space(train, test);
    xlam::ComponentDistribution dist =
        xlam::estimate_distribution(train->corpus, train->corpus.label_space);
    dist.last_token_o = last_token_o != 0;
    xlam::Corpus sampled =
        xlam::sample_baseline_labels(test->corpus, dist, test->corpus.label_space, seed);
    if (distribution_text != nullptr) {
      *distribution_text = c_copy(xlam::distribution_text(dist, train->corpus.label_space));
    }
    *labeled = new xlam_corpus{std::move(sampled)};
    return XLAM_OK;
  });
}

/* --- embeddings --------------------------------------------------------- */

xlam_status xlam_embeddings_load_file(const char *path, xlam_embeddings **out, long *duplicates) {
  if (path == nullptr || out == nullptr) return invalid_arg("path and out are required");
  return wrap([&]() {
    xlam::LoadResult loaded = xlam::load_embeddings_file(path);
    if (duplicates != nullptr) *duplicates = loaded.duplicate_words;
    *out = new xlam_embeddings{std::move(loaded.table)};
    return XLAM_OK;
  });
}

xlam_status xlam_embeddings_write_file(const xlam_embeddings *table, const char *path) {
  if (table == nullptr || path == nullptr) return invalid_arg("table and path are required");
  return wrap([&]() {
    xlam::write_embeddings_file(table->table, path);
    return XLAM_OK;
  });
}

int xlam_embeddings_dim(const xlam_embeddings *table) {
  return table == nullptr ? -1 : table->table.dim();
}

long xlam_embeddings_size(const xlam_embeddings *table) {
  return table == nullptr ? -1 : table->table.size();
}

void xlam_embeddings_free(xlam_embeddings *table) { delete table; }

xlam_status xlam_cosine(const xlam_embeddings *table, const char *a, const char *b, double *out) {
  if (table == nullptr || a == nullptr || b == nullptr || out == nullptr) {
    return invalid_arg("table, both words, and out are required");
  }
  return wrap([&]() {
    *out = xlam::cosine(table->table, a, b);
    return XLAM_OK;
  });
}

xlam_status xlam_neighbors_text(const xlam_embeddings *table, const char *word, int k,
                                char **out) {
  if (table == nullptr || word == nullptr || out == nullptr) {
    return invalid_arg("table, word, and out are required");
  }
  return wrap([&]() {
    xlam::NeighborResult result = xlam::top_k_neighbors(table->table, word, k);
    std::ostringstream text;
    char buf[64];
    for (const xlam::Neighbor &n : result.neighbors) {
      std::snprintf(buf, sizeof(buf), "%.6f", n.similarity);
      text << n.word << '\t' << buf << '\n';
    }
    if (result.cross_language >= 0) {
      text << "cross_language=" << result.cross_language << '\n';
    }
    *out = c_copy(text.str());
    return XLAM_OK;
  });
}

xlam_status xlam_bivcd_prep(const xlam_tokens *source, const xlam_tokens *target,
                            unsigned long long seed, xlam_tokens **merged) {
  if (source == nullptr || target == nullptr || merged == nullptr) {
    return invalid_arg("source, target, and merged are required");
  }
  return wrap([&]() {
    xlam::TokenCorpus out;
    out.sentences = xlam::bivcd_shuffle_merge(source->tokens.sentences, target->tokens.sentences,
                                              seed);
    out.docs.push_back(
        xlam::TokenCorpus::Doc{"bivcd", 0, static_cast<long>(out.sentences.size())});
    *merged = new xlam_tokens{std::move(out)};
    return XLAM_OK;
  });
}

/* --- tagger ------------------------------------------------------------- */

void xlam_train_options_init(xlam_train_options *options) {
  if (options == nullptr) return;
  options->window = 1;
  options->use_char = 1;
  options->char_orders = nullptr;
  options->n_char_orders = 0;
  options->char_buckets = 4096;
  options->epochs = 50;
  options->patience = 10;
  options->seed = 1;
  options->bio_bans = 1;
  options->log_path = nullptr;
}

xlam_status xlam_train(const xlam_corpus *train, const xlam_corpus *dev,
                       const xlam_embeddings *table, const xlam_train_options *options,
                       xlam_model **out) {
  if (train == nullptr || table == nullptr || options == nullptr || out == nullptr) {
    return invalid_arg("train, table, options, and out are required");
  }
  if (options->n_char_orders > 0 && options->char_orders == nullptr) {
    return invalid_arg("char_orders is null but n_char_orders is positive");
  }
  return wrap([&]() {
    if (dev != nullptr) require_same_space(train, dev);
    xlam::FeatureConfig config;
    config.window = options->window;
    config.use_char = options->use_char != 0;
    if (options->char_orders != nullptr) {
      config.char_orders.assign(options->char_orders,
                                options->char_orders + options->n_char_orders);
    }
    config.char_buckets = options->char_buckets;
    xlam::TrainOptions train_options;
    train_options.epochs = options->epochs;
    train_options.patience = options->patience;
    train_options.seed = options->seed;
    train_options.bio_bans = options->bio_bans != 0;
    std::ofstream log;
    if (options->log_path != nullptr) {
      log.open(options->log_path);
      if (!log) {
        throw xlam::IoError(std::string("cannot open '") + options->log_path + "' for writing");
      }
      train_options.log = &log;
    }
    static const xlam::Corpus kEmpty;
    const xlam::Corpus &dev_corpus = dev != nullptr ? dev->corpus : kEmpty;
    xlam::TaggerModel model = xlam::train_tagger(train->corpus, dev_corpus, table->table,
                                                 train->corpus.label_space, config, train_options);
    *out = new xlam_model{std::move(model)};
    return XLAM_OK;
  });
}

xlam_status xlam_model_save_file(const xlam_model *model, const char *path) {
  if (model == nullptr || path == nullptr) return invalid_arg("model and path are required");
  return wrap([&]() {
    xlam::save_model_file(model->model, path);
    return XLAM_OK;
  });
}

xlam_status xlam_model_load_file(const char *path, xlam_model **out) {
  if (path == nullptr || out == nullptr) return invalid_arg("path and out are required");
  return wrap([&]() {
    *out = new xlam_model{xlam::load_model_file(path)};
    return XLAM_OK;
  });
}

xlam_status xlam_model_text(const xlam_model *model, char **out) {
  if (model == nullptr || out == nullptr) return invalid_arg("model and out are required");
  return wrap([&]() {
    *out = c_copy(xlam::model_text(model->model));
    return XLAM_OK;
  });
}

void xlam_model_free(xlam_model *model) { delete model; }

xlam_status xlam_predict_tokens(const xlam_model *model, const xlam_embeddings *table,
                                const xlam_tokens *tokens, xlam_corpus **out) {
  if (model == nullptr || table == nullptr || tokens == nullptr || out == nullptr) {
    return invalid_arg("model, table, tokens, and out are required");
  }
  return wrap([&]() {
    xlam::Corpus predicted = xlam::predict(model->model, table->table, tokens->tokens);
    *out = new xlam_corpus{std::move(predicted)};
    return XLAM_OK;
  });
}

xlam_status xlam_predict_corpus(const xlam_model *model, const xlam_embeddings *table,
                                const xlam_corpus *corpus, xlam_corpus **out) {
  if (model == nullptr || table == nullptr || corpus == nullptr || out == nullptr) {
    return invalid_arg("model, table, corpus, and out are required");
  }
  return wrap([&]() {
    xlam::Corpus predicted = xlam::predict(model->model, table->table, corpus->corpus);
    *out = new xlam_corpus{std::move(predicted)};
    return XLAM_OK;
  });
}

/* --- evaluation ---------------------------------------------------------- */

xlam_status xlam_evaluate(const xlam_corpus *gold, const xlam_corpus *pred, int full_label_set,
                          char **report_text, char **report_json) {
  if (gold == nullptr || pred == nullptr) return invalid_arg("gold and pred are required");
  return wrap([&]() {
    require_same_space(gold, pred);
    const xlam::LabelSpace &space = gold->corpus.label_space;
    xlam::EvalReport report = xlam::evaluate_corpora(
        gold->corpus, pred->corpus, space,
        full_label_set != 0 ? xlam::LabelSetMode::kFull : xlam::LabelSetMode::kUnion);
    if (report_text != nullptr) *report_text = c_copy(xlam::eval_text(report, space));
    if (report_json != nullptr) *report_json = c_copy(xlam::eval_json(report, space));
    return XLAM_OK;
  });
}

xlam_status xlam_agreement(const xlam_corpus *a, const xlam_corpus *b, double *out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return invalid_arg("both corpora and out are required");
  }
  return wrap([&]() {
    require_same_space(a, b);
    *out = xlam::token_agreement(a->corpus, b->corpus);
    return XLAM_OK;
  });
}

/* --- synthetic data ------------------------------------------------------ */

void xlam_synth_options_init(xlam_synth_options *options) {
  if (options == nullptr) return;
  options->documents = 20;
  options->sentences_per_doc = 10;
  options->min_len = 5;
  options->max_len = 12;
  options->type_probs = nullptr;
  options->n_type_probs = 0;
  options->vocab_size = 200;
  options->swaps = 1;
  options->noise = 0.0;
  options->emb_dim = 16;
  options->seed = 1;
  options->types_csv = nullptr;
}

xlam_status xlam_synth(const xlam_synth_options *options, xlam_corpus **source,
                       xlam_tokens **target, xlam_alignment **alignment,
                       xlam_corpus **gold_target, xlam_embeddings **table) {
  if (options == nullptr) return invalid_arg("options are required");
  if (options->n_type_probs > 0 && options->type_probs == nullptr) {
    return invalid_arg("type_probs is null but n_type_probs is positive");
  }
  return wrap([&]() {
    xlam::LabelSpace space = space_from_csv(options->types_csv);
    xlam::SynthConfig config;
    config.documents = options->documents;
    config.sentences_per_doc = options->sentences_per_doc;
    config.min_len = options->min_len;
    config.max_len = options->max_len;
    if (options->type_probs != nullptr) {
      config.type_probs.assign(options->type_probs, options->type_probs + options->n_type_probs);
    }
    config.vocab_size = options->vocab_size;
    config.swaps = options->swaps;
    config.noise = options->noise;
    config.emb_dim = options->emb_dim;
    config.seed = options->seed;

    xlam::SynthResult result = xlam::generate_bitext(config, space);
    if (table != nullptr) {
      *table = new xlam_embeddings{xlam::synth_embeddings(config, space)};
    }
    if (source != nullptr) *source = new xlam_corpus{std::move(result.source)};
    if (target != nullptr) *target = new xlam_tokens{std::move(result.target_tokens)};
    if (alignment != nullptr) *alignment = new xlam_alignment{std::move(result.alignment)};
    if (gold_target != nullptr) *gold_target = new xlam_corpus{std::move(result.gold_target)};
    return XLAM_OK;
  });
}

} /* extern "C" */
