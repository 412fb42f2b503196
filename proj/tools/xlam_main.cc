// xlam -- cross-lingual argument mining toolkit
//
// Command-line front end. Talks to the library exclusively through the C
// API; every failure surfaces as one diagnostic line on stderr. Exit codes:
// 0 success, 1 runtime failure, 2 usage error.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xlam.h"

namespace {

// Runtime failure carrying the xlam_last_error message.
struct RunError : std::runtime_error {
  explicit RunError(const std::string &msg) : std::runtime_error(msg) {}
};

void check(xlam_status status) {
  if (status != XLAM_OK) {
    throw RunError(xlam_last_error());
  }
}

using CorpusPtr = std::unique_ptr<xlam_corpus, decltype(&xlam_corpus_free)>;
using TokensPtr = std::unique_ptr<xlam_tokens, decltype(&xlam_tokens_free)>;
using AlignmentPtr = std::unique_ptr<xlam_alignment, decltype(&xlam_alignment_free)>;
using EmbeddingsPtr = std::unique_ptr<xlam_embeddings, decltype(&xlam_embeddings_free)>;
using ModelPtr = std::unique_ptr<xlam_model, decltype(&xlam_model_free)>;

struct OwnedString {
  char *value = nullptr;
  ~OwnedString() { xlam_string_free(value); }
  char **out() { return &value; }
  std::string str() const { return value == nullptr ? std::string() : std::string(value); }
};

const char *csv_or_null(const std::string &types) {
  return types.empty() ? nullptr : types.c_str();
}

CorpusPtr parse_corpus(const std::string &path, const std::string &types, bool repair,
                       long *repaired = nullptr) {
  xlam_corpus *corpus = nullptr;
  check(xlam_corpus_parse_file(path.c_str(), csv_or_null(types), repair ? 1 : 0, &corpus,
                               repaired));
  return CorpusPtr(corpus, &xlam_corpus_free);
}

TokensPtr read_tokens(const std::string &path) {
  xlam_tokens *tokens = nullptr;
  check(xlam_tokens_read_file(path.c_str(), &tokens));
  return TokensPtr(tokens, &xlam_tokens_free);
}

EmbeddingsPtr load_embeddings(const std::string &path) {
  xlam_embeddings *table = nullptr;
  long duplicates = 0;
  check(xlam_embeddings_load_file(path.c_str(), &table, &duplicates));
  if (duplicates > 0) {
    std::cerr << "xlam: warning: " << duplicates << " duplicate embedding words ignored\n";
  }
  return EmbeddingsPtr(table, &xlam_embeddings_free);
}

std::vector<std::string> read_id_list(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw RunError("cannot open '" + path + "' for reading");
  }
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

// --- subcommand state ----------------------------------------------------

struct StatsArgs {
  std::string input, types;
  bool json = false;
  bool repair = false;
};

struct ValidateArgs {
  std::string input, types, output;
  bool repair = false;
};

struct SplitArgs {
  std::string input, types, train_out, dev_out, test_out, test_ids_path;
  double dev_fraction = 0.1;
  unsigned long long seed = 1;
};

struct ProjectArgs {
  std::string source, target, alignments, output, report_json, types;
  bool swap = false;
};

struct TrainArgs {
  std::string train, dev, embeddings, model_out, log_path, types;
  int window = 1;
  std::vector<int> char_orders;
  int char_buckets = 4096;
  bool no_char = false;
  int epochs = 50;
  int patience = 10;
  unsigned long long seed = 1;
  bool no_bio_bans = false;
};

struct PredictArgs {
  std::string model, embeddings, tokens_in, conll_in, output, types;
};

struct EvaluateArgs {
  std::string gold, pred, types, per_label_csv;
  bool json = false;
  bool full = false;
  bool agreement_only = false;
};

struct BaselineArgs {
  std::string train, test, output, types;
  unsigned long long seed = 1;
  bool mtx_mode = false;  // drop the last-token-O constraint
  bool print_distribution = false;
};

struct BivcdArgs {
  std::string source, target, output;
  unsigned long long seed = 1;
};

struct SynthArgs {
  std::string out_dir, types;
  int documents = 20;
  int sentences = 10;
  int min_len = 5;
  int max_len = 12;
  std::vector<double> type_probs;
  long vocab = 200;
  int swaps = 1;
  double noise = 0.0;
  int emb_dim = 16;
  unsigned long long seed = 1;
};

struct NeighborsArgs {
  std::string embeddings, word, cosine_with;
  int k = 10;
};

struct PipelineArgs {
  std::string source, target, alignments, embeddings, gold, out_dir, types;
  bool swap = false;
  double dev_fraction = 0.1;
  TrainArgs train;  // reuses the tagger knobs (train/dev/model paths unused)
  unsigned long long seed = 1;
};

// --- subcommand bodies -----------------------------------------------------

int run_stats(const StatsArgs &args) {
  CorpusPtr corpus = parse_corpus(args.input, args.types, args.repair);
  OwnedString report;
  check(args.json ? xlam_corpus_stats_json(corpus.get(), report.out())
                  : xlam_corpus_stats_text(corpus.get(), report.out()));
  std::cout << report.str();
  return 0;
}

int run_validate(const ValidateArgs &args) {
  long repaired = 0;
  CorpusPtr corpus = parse_corpus(args.input, args.types, args.repair, &repaired);
  std::cout << "ok documents=" << xlam_corpus_num_documents(corpus.get())
            << " sentences=" << xlam_corpus_num_sentences(corpus.get())
            << " tokens=" << xlam_corpus_num_tokens(corpus.get());
  if (args.repair) {
    std::cout << " repaired=" << repaired;
  }
  std::cout << '\n';
  if (!args.output.empty()) {
    check(xlam_corpus_write_file(corpus.get(), args.output.c_str()));
  }
  return 0;
}

int run_split(const SplitArgs &args) {
  CorpusPtr corpus = parse_corpus(args.input, args.types, false);
  std::vector<std::string> ids;
  if (!args.test_ids_path.empty()) {
    ids = read_id_list(args.test_ids_path);
  }
  std::vector<const char *> id_ptrs;
  for (const std::string &id : ids) id_ptrs.push_back(id.c_str());
  xlam_corpus *train = nullptr;
  xlam_corpus *dev = nullptr;
  xlam_corpus *test = nullptr;
  check(xlam_corpus_split(corpus.get(), args.dev_fraction,
                          id_ptrs.empty() ? nullptr : id_ptrs.data(),
                          static_cast<long>(id_ptrs.size()), args.seed, &train, &dev, &test));
  CorpusPtr train_p(train, &xlam_corpus_free);
  CorpusPtr dev_p(dev, &xlam_corpus_free);
  CorpusPtr test_p(test, &xlam_corpus_free);
  check(xlam_corpus_write_file(train, args.train_out.c_str()));
  check(xlam_corpus_write_file(dev, args.dev_out.c_str()));
  check(xlam_corpus_write_file(test, args.test_out.c_str()));
  std::cout << "train=" << xlam_corpus_num_documents(train)
            << " dev=" << xlam_corpus_num_documents(dev)
            << " test=" << xlam_corpus_num_documents(test) << '\n';
  return 0;
}

int run_project(const ProjectArgs &args) {
  CorpusPtr source = parse_corpus(args.source, args.types, false);
  TokensPtr target = read_tokens(args.target);
  xlam_alignment *alignment = nullptr;
  long duplicates = 0;
  check(xlam_alignment_parse_file(args.alignments.c_str(), source.get(), target.get(),
                                  args.swap ? 1 : 0, &alignment, &duplicates));
  AlignmentPtr alignment_p(alignment, &xlam_alignment_free);
  if (duplicates > 0) {
    std::cerr << "xlam: warning: " << duplicates << " duplicate alignment links ignored\n";
  }
  xlam_corpus *projected = nullptr;
  OwnedString report_text;
  OwnedString report_json;
  check(xlam_project(source.get(), target.get(), alignment, &projected, report_text.out(),
                     args.report_json.empty() ? nullptr : report_json.out()));
  CorpusPtr projected_p(projected, &xlam_corpus_free);
  check(xlam_corpus_write_file(projected, args.output.c_str()));
  std::cout << report_text.str();
  if (!args.report_json.empty()) {
    std::ofstream out(args.report_json);
    if (!out) throw RunError("cannot open '" + args.report_json + "' for writing");
    out << report_json.str();
  }
  return 0;
}

ModelPtr train_model(const TrainArgs &args, const xlam_corpus *train, const xlam_corpus *dev,
                     const xlam_embeddings *table) {
  xlam_train_options options;
  xlam_train_options_init(&options);
  options.window = args.window;
  options.use_char = args.no_char ? 0 : 1;
  if (!args.char_orders.empty()) {
    options.char_orders = args.char_orders.data();
    options.n_char_orders = static_cast<int>(args.char_orders.size());
  }
  options.char_buckets = args.char_buckets;
  options.epochs = args.epochs;
  options.patience = args.patience;
  options.seed = args.seed;
  options.bio_bans = args.no_bio_bans ? 0 : 1;
  options.log_path = args.log_path.empty() ? nullptr : args.log_path.c_str();
  xlam_model *model = nullptr;
  check(xlam_train(train, dev, table, &options, &model));
  return ModelPtr(model, &xlam_model_free);
}

int run_train(const TrainArgs &args) {
  CorpusPtr train = parse_corpus(args.train, args.types, false);
  CorpusPtr dev(nullptr, &xlam_corpus_free);
  if (!args.dev.empty()) {
    dev = parse_corpus(args.dev, args.types, false);
  }
  EmbeddingsPtr table = load_embeddings(args.embeddings);
  ModelPtr model = train_model(args, train.get(), dev.get(), table.get());
  check(xlam_model_save_file(model.get(), args.model_out.c_str()));
  OwnedString text;
  check(xlam_model_text(model.get(), text.out()));
  std::istringstream lines(text.str());
  std::string line;
  while (std::getline(lines, line) && line.rfind("emission.", 0) != 0) {
    std::cout << line << '\n';
  }
  return 0;
}

int run_predict(const PredictArgs &args) {
  if (args.tokens_in.empty() && args.conll_in.empty()) {
    throw RunError("predict needs --tokens or --conll input");
  }
  xlam_model *model = nullptr;
  check(xlam_model_load_file(args.model.c_str(), &model));
  ModelPtr model_p(model, &xlam_model_free);
  EmbeddingsPtr table = load_embeddings(args.embeddings);
  xlam_corpus *out = nullptr;
  if (!args.tokens_in.empty()) {
    TokensPtr tokens = read_tokens(args.tokens_in);
    check(xlam_predict_tokens(model, table.get(), tokens.get(), &out));
  } else {
    CorpusPtr input = parse_corpus(args.conll_in, args.types, false);
    check(xlam_predict_corpus(model, table.get(), input.get(), &out));
  }
  CorpusPtr out_p(out, &xlam_corpus_free);
  check(xlam_corpus_write_file(out, args.output.c_str()));
  return 0;
}

int run_evaluate(const EvaluateArgs &args) {
  CorpusPtr gold = parse_corpus(args.gold, args.types, false);
  CorpusPtr pred = parse_corpus(args.pred, args.types, false);
  if (args.agreement_only) {
    double agreement = 0.0;
    check(xlam_agreement(gold.get(), pred.get(), &agreement));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", agreement);
    std::cout << "agreement=" << buf << '\n';
    return 0;
  }
  OwnedString text;
  OwnedString json;
  const bool want_json = args.json || !args.per_label_csv.empty();
  check(xlam_evaluate(gold.get(), pred.get(), args.full ? 1 : 0,
                      args.json ? nullptr : text.out(), want_json ? json.out() : nullptr));
  if (!args.per_label_csv.empty()) {
    // Full-precision per-label table, one row per evaluated label.
    auto root = nlohmann::json::parse(json.str());
    std::ofstream csv(args.per_label_csv);
    if (!csv) throw RunError("cannot open " + args.per_label_csv + " for writing");
    csv << "label,precision,recall,f1,gold,pred\n";
    for (const auto &row : root["labels"]) {
      csv << row["label"].get<std::string>() << ',' << row["precision"].dump() << ','
          << row["recall"].dump() << ',' << row["f1"].dump() << ','
          << (row["tp"].get<long>() + row["fn"].get<long>()) << ','
          << (row["tp"].get<long>() + row["fp"].get<long>()) << '\n';
    }
  }
  std::cout << (args.json ? json.str() : text.str());
  return 0;
}

int run_baseline(const BaselineArgs &args) {
  CorpusPtr train = parse_corpus(args.train, args.types, false);
  CorpusPtr test = parse_corpus(args.test, args.types, false);
  xlam_corpus *labeled = nullptr;
  OwnedString dist;
  check(xlam_baseline(train.get(), test.get(), args.mtx_mode ? 0 : 1, args.seed, &labeled,
                      dist.out()));
  CorpusPtr labeled_p(labeled, &xlam_corpus_free);
  check(xlam_corpus_write_file(labeled, args.output.c_str()));
  if (args.print_distribution) {
    std::cout << dist.str();
  }
  return 0;
}

int run_bivcd(const BivcdArgs &args) {
  TokensPtr source = read_tokens(args.source);
  TokensPtr target = read_tokens(args.target);
  xlam_tokens *merged = nullptr;
  check(xlam_bivcd_prep(source.get(), target.get(), args.seed, &merged));
  TokensPtr merged_p(merged, &xlam_tokens_free);
  check(xlam_tokens_write_file(merged, args.output.c_str()));
  return 0;
}

int run_synth(const SynthArgs &args) {
  std::filesystem::create_directories(args.out_dir);
  xlam_synth_options options;
  xlam_synth_options_init(&options);
  options.documents = args.documents;
  options.sentences_per_doc = args.sentences;
  options.min_len = args.min_len;
  options.max_len = args.max_len;
  if (!args.type_probs.empty()) {
    options.type_probs = args.type_probs.data();
    options.n_type_probs = static_cast<int>(args.type_probs.size());
  }
  options.vocab_size = args.vocab;
  options.swaps = args.swaps;
  options.noise = args.noise;
  options.emb_dim = args.emb_dim;
  options.seed = args.seed;
  options.types_csv = csv_or_null(args.types);

  xlam_corpus *source = nullptr;
  xlam_tokens *target = nullptr;
  xlam_alignment *alignment = nullptr;
  xlam_corpus *gold = nullptr;
  xlam_embeddings *table = nullptr;
  check(xlam_synth(&options, &source, &target, &alignment, &gold, &table));
  CorpusPtr source_p(source, &xlam_corpus_free);
  TokensPtr target_p(target, &xlam_tokens_free);
  AlignmentPtr alignment_p(alignment, &xlam_alignment_free);
  CorpusPtr gold_p(gold, &xlam_corpus_free);
  EmbeddingsPtr table_p(table, &xlam_embeddings_free);

  std::filesystem::path dir(args.out_dir);
  check(xlam_corpus_write_file(source, (dir / "source.conll").string().c_str()));
  check(xlam_tokens_write_file(target, (dir / "target.txt").string().c_str()));
  check(xlam_alignment_write_file(alignment, (dir / "alignments.txt").string().c_str()));
  check(xlam_corpus_write_file(gold, (dir / "gold.conll").string().c_str()));
  check(xlam_embeddings_write_file(table, (dir / "embeddings.txt").string().c_str()));
  std::cout << "documents=" << xlam_corpus_num_documents(source)
            << " sentences=" << xlam_corpus_num_sentences(source)
            << " tokens=" << xlam_corpus_num_tokens(source) << '\n';
  return 0;
}

int run_neighbors(const NeighborsArgs &args) {
  EmbeddingsPtr table = load_embeddings(args.embeddings);
  if (!args.cosine_with.empty()) {
    double similarity = 0.0;
    check(xlam_cosine(table.get(), args.word.c_str(), args.cosine_with.c_str(), &similarity));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", similarity);
    std::cout << "cosine=" << buf << '\n';
    return 0;
  }
  OwnedString text;
  check(xlam_neighbors_text(table.get(), args.word.c_str(), args.k, text.out()));
  std::cout << text.str();
  return 0;
}

int run_pipeline(const PipelineArgs &args) {
  std::filesystem::create_directories(args.out_dir);
  std::filesystem::path dir(args.out_dir);

  // Stage 1: project the source annotations onto the target tokens.
  CorpusPtr source = parse_corpus(args.source, args.types, false);
  TokensPtr target = read_tokens(args.target);
  xlam_alignment *alignment = nullptr;
  long duplicates = 0;
  check(xlam_alignment_parse_file(args.alignments.c_str(), source.get(), target.get(),
                                  args.swap ? 1 : 0, &alignment, &duplicates));
  AlignmentPtr alignment_p(alignment, &xlam_alignment_free);
  xlam_corpus *projected = nullptr;
  OwnedString report;
  check(xlam_project(source.get(), target.get(), alignment, &projected, report.out(), nullptr));
  CorpusPtr projected_p(projected, &xlam_corpus_free);
  check(xlam_corpus_write_file(projected, (dir / "projected.conll").string().c_str()));
  {
    std::ofstream out(dir / "projection-report.txt");
    out << report.str();
  }

  // Stage 2: split the projected corpus and train on it.
  xlam_corpus *train = nullptr;
  xlam_corpus *dev = nullptr;
  xlam_corpus *test = nullptr;
  check(xlam_corpus_split(projected, args.dev_fraction, nullptr, 0, args.seed, &train, &dev,
                          &test));
  CorpusPtr train_p(train, &xlam_corpus_free);
  CorpusPtr dev_p(dev, &xlam_corpus_free);
  CorpusPtr test_p(test, &xlam_corpus_free);
  check(xlam_corpus_write_file(train, (dir / "train.conll").string().c_str()));
  check(xlam_corpus_write_file(dev, (dir / "dev.conll").string().c_str()));

  EmbeddingsPtr table = load_embeddings(args.embeddings);
  TrainArgs train_args = args.train;
  train_args.seed = args.seed;
  train_args.log_path = (dir / "train.log").string();
  ModelPtr model =
      train_model(train_args, train, xlam_corpus_num_sentences(dev) > 0 ? dev : nullptr,
                  table.get());
  check(xlam_model_save_file(model.get(), (dir / "model.bin").string().c_str()));

  // Stage 3: predict over the full target side.
  xlam_corpus *predicted = nullptr;
  check(xlam_predict_tokens(model.get(), table.get(), target.get(), &predicted));
  CorpusPtr predicted_p(predicted, &xlam_corpus_free);
  check(xlam_corpus_write_file(predicted, (dir / "predicted.conll").string().c_str()));

  // Stage 4: evaluate against gold labels when available.
  if (!args.gold.empty()) {
    CorpusPtr gold = parse_corpus(args.gold, args.types, false);
    OwnedString eval_text;
    check(xlam_evaluate(gold.get(), predicted, 0, eval_text.out(), nullptr));
    double agreement = 0.0;
    check(xlam_agreement(gold.get(), projected, &agreement));
    std::ofstream out(dir / "eval.txt");
    if (!out) throw RunError("cannot open eval output for writing");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", agreement);
    out << "projection_agreement=" << buf << '\n' << eval_text.str();
    std::cout << "projection_agreement=" << buf << '\n' << eval_text.str();
  } else {
    std::cout << report.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"xlam: cross-lingual argument mining toolkit"};
  app.set_version_flag("--version", xlam_version());
  app.require_subcommand(1);

  StatsArgs stats;
  CLI::App *stats_cmd = app.add_subcommand("stats", "Corpus statistics report");
  stats_cmd->add_option("input", stats.input, "CoNLL corpus")->required();
  stats_cmd->add_option("--types", stats.types, "Component types (csv)");
  stats_cmd->add_flag("--json", stats.json, "Emit JSON");
  stats_cmd->add_flag("--repair", stats.repair, "Repair dangling I- labels while parsing");

  ValidateArgs validate;
  CLI::App *validate_cmd = app.add_subcommand("validate", "Validate corpus structure and labels");
  validate_cmd->add_option("input", validate.input, "CoNLL corpus")->required();
  validate_cmd->add_option("--types", validate.types, "Component types (csv)");
  validate_cmd->add_flag("--repair", validate.repair, "Repair dangling I- labels");
  validate_cmd->add_option("--output", validate.output, "Write the (repaired) corpus here");

  SplitArgs split;
  CLI::App *split_cmd = app.add_subcommand("split", "Document-level train/dev/test split");
  split_cmd->add_option("input", split.input, "CoNLL corpus")->required();
  split_cmd->add_option("--train", split.train_out, "Train output")->required();
  split_cmd->add_option("--dev", split.dev_out, "Dev output")->required();
  split_cmd->add_option("--test", split.test_out, "Test output")->required();
  split_cmd->add_option("--dev-fraction", split.dev_fraction, "Dev share of non-test documents");
  split_cmd->add_option("--test-ids", split.test_ids_path, "File of document ids pinned to test");
  split_cmd->add_option("--seed", split.seed, "Shuffle seed")->envname("XLAM_SEED");
  split_cmd->add_option("--types", split.types, "Component types (csv)");

  ProjectArgs project;
  CLI::App *project_cmd = app.add_subcommand("project", "Project annotations across alignments");
  project_cmd->add_option("--source", project.source, "Labeled source CoNLL")->required();
  project_cmd->add_option("--target", project.target, "Target tokens (one sentence per line)")
      ->required();
  project_cmd->add_option("--alignments", project.alignments, "Pharaoh alignment file")
      ->required();
  project_cmd->add_option("--output", project.output, "Projected CoNLL output")->required();
  project_cmd->add_option("--report-json", project.report_json, "Write the JSON report here");
  project_cmd->add_flag("--swap", project.swap, "Alignment lines are target-source");
  project_cmd->add_option("--types", project.types, "Component types (csv)");

  TrainArgs train;
  CLI::App *train_cmd = app.add_subcommand("train", "Train the sequence tagger");
  train_cmd->add_option("--train", train.train, "Training CoNLL")->required();
  train_cmd->add_option("--dev", train.dev, "Dev CoNLL for early stopping");
  train_cmd->add_option("--embeddings", train.embeddings, "Embedding table")->required();
  train_cmd->add_option("--model", train.model_out, "Model output path")->required();
  train_cmd->add_option("--window", train.window, "Context window radius");
  train_cmd->add_option("--char-orders", train.char_orders, "Character n-gram orders")
      ->delimiter(',');
  train_cmd->add_option("--char-buckets", train.char_buckets, "Character feature buckets");
  train_cmd->add_flag("--no-char", train.no_char, "Disable character features");
  train_cmd->add_option("--epochs", train.epochs, "Maximum epochs");
  train_cmd->add_option("--patience", train.patience, "Early-stopping patience");
  train_cmd->add_option("--seed", train.seed, "Training seed")->envname("XLAM_SEED");
  train_cmd->add_flag("--no-bio-bans", train.no_bio_bans, "Allow invalid BIO transitions");
  train_cmd->add_option("--log", train.log_path, "Write per-epoch training log here");
  train_cmd->add_option("--types", train.types, "Component types (csv)");

  PredictArgs predict;
  CLI::App *predict_cmd = app.add_subcommand("predict", "Label text with a trained model");
  predict_cmd->add_option("--model", predict.model, "Model file")->required();
  predict_cmd->add_option("--embeddings", predict.embeddings, "Embedding table")->required();
  CLI::Option *tokens_opt =
      predict_cmd->add_option("--tokens", predict.tokens_in, "Token input (one sentence per line)");
  predict_cmd->add_option("--conll", predict.conll_in, "CoNLL input (labels ignored)")
      ->excludes(tokens_opt);
  predict_cmd->add_option("--output", predict.output, "Predicted CoNLL output")->required();
  predict_cmd->add_option("--types", predict.types, "Component types for --conll input (csv)");

  EvaluateArgs evaluate;
  CLI::App *evaluate_cmd = app.add_subcommand("evaluate", "Token-level evaluation report");
  evaluate_cmd->add_option("--gold", evaluate.gold, "Gold CoNLL")->required();
  evaluate_cmd->add_option("--pred", evaluate.pred, "Predicted CoNLL")->required();
  evaluate_cmd->add_flag("--json", evaluate.json, "Emit JSON");
  evaluate_cmd->add_flag("--full-label-set", evaluate.full,
                         "Score every label, not just those present");
  evaluate_cmd->add_flag("--agreement", evaluate.agreement_only,
                         "Print only the token agreement fraction");
  evaluate_cmd->add_option("--types", evaluate.types, "Component types (csv)");
  evaluate_cmd->add_option("--per-label-csv", evaluate.per_label_csv,
                           "Write the per-label score table as CSV");

  BaselineArgs baseline;
  CLI::App *baseline_cmd = app.add_subcommand("baseline", "Random baseline with BIO prior");
  baseline_cmd->add_option("--train", baseline.train, "Corpus for distribution estimation")
      ->required();
  baseline_cmd->add_option("--test", baseline.test, "Corpus to label")->required();
  baseline_cmd->add_option("--output", baseline.output, "Labeled output")->required();
  baseline_cmd->add_option("--seed", baseline.seed, "Sampling seed")->envname("XLAM_SEED");
  baseline_cmd->add_flag("--mtx-mode", baseline.mtx_mode,
                         "Do not force sentence-final tokens to O");
  baseline_cmd->add_flag("--print-distribution", baseline.print_distribution,
                         "Print the estimated distribution");
  baseline_cmd->add_option("--types", baseline.types, "Component types (csv)");

  BivcdArgs bivcd;
  CLI::App *bivcd_cmd = app.add_subcommand("bivcd-prep", "Shuffle-merge a bitext for BIVCD");
  bivcd_cmd->add_option("--source", bivcd.source, "Source tokens")->required();
  bivcd_cmd->add_option("--target", bivcd.target, "Target tokens")->required();
  bivcd_cmd->add_option("--output", bivcd.output, "Merged output")->required();
  bivcd_cmd->add_option("--seed", bivcd.seed, "Shuffle seed")->envname("XLAM_SEED");

  SynthArgs synth;
  CLI::App *synth_cmd = app.add_subcommand("synth", "Generate a synthetic parallel corpus");
  synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")->required();
  synth_cmd->add_option("--documents", synth.documents, "Document count");
  synth_cmd->add_option("--sentences", synth.sentences, "Sentences per document");
  synth_cmd->add_option("--min-len", synth.min_len, "Minimum sentence length");
  synth_cmd->add_option("--max-len", synth.max_len, "Maximum sentence length");
  synth_cmd->add_option("--type-probs", synth.type_probs, "Placement probability per type")
      ->delimiter(',');
  synth_cmd->add_option("--vocab", synth.vocab, "Vocabulary size per pseudo-language");
  synth_cmd->add_option("--swaps", synth.swaps, "Adjacent segment swaps on the target side");
  synth_cmd->add_option("--noise", synth.noise, "Fraction of alignment links dropped");
  synth_cmd->add_option("--emb-dim", synth.emb_dim, "Synthetic embedding dimension");
  synth_cmd->add_option("--seed", synth.seed, "Generation seed")->envname("XLAM_SEED");
  synth_cmd->add_option("--types", synth.types, "Component types (csv)");

  NeighborsArgs neighbors;
  CLI::App *neighbors_cmd = app.add_subcommand("neighbors", "Nearest-neighbor diagnostics");
  neighbors_cmd->add_option("--embeddings", neighbors.embeddings, "Embedding table")->required();
  neighbors_cmd->add_option("word", neighbors.word, "Query word")->required();
  neighbors_cmd->add_option("-k,--k", neighbors.k, "Neighbors to list");
  neighbors_cmd->add_option("--cosine", neighbors.cosine_with,
                            "Print only the cosine to this word");

  PipelineArgs pipeline;
  CLI::App *pipeline_cmd =
      app.add_subcommand("pipeline", "project -> train -> predict -> evaluate in one run");
  pipeline_cmd->add_option("--source", pipeline.source, "Labeled source CoNLL")->required();
  pipeline_cmd->add_option("--target", pipeline.target, "Target tokens")->required();
  pipeline_cmd->add_option("--alignments", pipeline.alignments, "Pharaoh alignment file")
      ->required();
  pipeline_cmd->add_option("--embeddings", pipeline.embeddings, "Embedding table")->required();
  pipeline_cmd->add_option("--gold", pipeline.gold, "Gold target CoNLL (enables evaluation)");
  pipeline_cmd->add_option("--out-dir", pipeline.out_dir, "Artifact directory")->required();
  pipeline_cmd->add_flag("--swap", pipeline.swap, "Alignment lines are target-source");
  pipeline_cmd->add_option("--dev-fraction", pipeline.dev_fraction,
                           "Dev share of the projected corpus");
  pipeline_cmd->add_option("--window", pipeline.train.window, "Context window radius");
  pipeline_cmd->add_option("--char-orders", pipeline.train.char_orders,
                           "Character n-gram orders")
      ->delimiter(',');
  pipeline_cmd->add_option("--char-buckets", pipeline.train.char_buckets,
                           "Character feature buckets");
  pipeline_cmd->add_flag("--no-char", pipeline.train.no_char, "Disable character features");
  pipeline_cmd->add_option("--epochs", pipeline.train.epochs, "Maximum epochs");
  pipeline_cmd->add_option("--patience", pipeline.train.patience, "Early-stopping patience");
  pipeline_cmd->add_flag("--no-bio-bans", pipeline.train.no_bio_bans,
                         "Allow invalid BIO transitions");
  pipeline_cmd->add_option("--seed", pipeline.seed, "Seed for split and training")->envname("XLAM_SEED");
  pipeline_cmd->add_option("--types", pipeline.types, "Component types (csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    if (err.get_exit_code() == 0) {
      return app.exit(err);  // --help / --version
    }
    std::cerr << "xlam: " << err.what() << '\n';
    return 2;
  }

  try {
    if (stats_cmd->parsed()) return run_stats(stats);
    if (validate_cmd->parsed()) return run_validate(validate);
    if (split_cmd->parsed()) return run_split(split);
    if (project_cmd->parsed()) return run_project(project);
    if (train_cmd->parsed()) return run_train(train);
    if (predict_cmd->parsed()) return run_predict(predict);
    if (evaluate_cmd->parsed()) return run_evaluate(evaluate);
    if (baseline_cmd->parsed()) return run_baseline(baseline);
    if (bivcd_cmd->parsed()) return run_bivcd(bivcd);
    if (synth_cmd->parsed()) return run_synth(synth);
    if (neighbors_cmd->parsed()) return run_neighbors(neighbors);
    if (pipeline_cmd->parsed()) return run_pipeline(pipeline);
  } catch (const RunError &err) {
    std::cerr << "xlam: " << err.what() << '\n';
    return 1;
  } catch (const std::exception &err) {
    std::cerr << "xlam: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
