#include "arabidx/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "arabidx/batch.hpp"
#include "arabidx/book_index.hpp"
#include "arabidx/corpus.hpp"
#include "arabidx/error.hpp"
#include "arabidx/evaluation.hpp"
#include "arabidx/inverted_index.hpp"
#include "arabidx/io.hpp"
#include "arabidx/ngram.hpp"
#include "arabidx/rooting.hpp"
#include "arabidx/utf8.hpp"
#include "json.hpp"

namespace arabidx::cli {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

enum class Format { text, machine };

// Flag values collected from the command line; applied on top of the config file.
struct Options {
  std::string config_path;
  std::optional<int> jobs;
  std::string format = "text";

  std::optional<std::size_t> words_per_page;
  std::string stoplist;
  bool fold_alef = false;
  bool fold_teh_marbuta = false;
  bool fold_alef_maqsura = false;
  bool strip_article = false;

  std::optional<int> n;
  std::optional<std::size_t> profile_size;
  std::optional<std::size_t> word_limit;
  bool whole_document = false;

  std::optional<double> high_cut;
  std::optional<std::uint64_t> min_freq;
  bool group_roots = false;
  bool force = false;

  std::string weights;
  std::string rank_rule;
  std::optional<std::size_t> root_len;

  std::string store;

  // Subcommand-specific.
  std::string in;
  std::vector<std::string> inputs;
  std::string out;
  std::string export_path;
  std::string label;
  std::string dir;
  std::string corpus;
  bool overwrite = false;
  std::string metric = "manhattan";
  std::string word;
  bool trace = false;
  std::string index_path;
  std::string variant = "positional";
  std::string term;
  std::string terms;
  std::string auto_path;
  std::string gold_path;
  std::string auto_dir;
  std::string gold_dir;
  std::string mode = "term";
  bool match_roots = false;
  std::string report;
};

struct Context {
  const Options& opt;
  RunConfig config;
  Format format = Format::text;
  std::ostream& out;
  std::ostream& err;

  int jobs() const { return config.jobs > 0 ? config.jobs : batch::default_jobs(); }
};

RunConfig resolve_config(const Options& opt) {
  RunConfig config = opt.config_path.empty() ? default_run_config() : load_run_config(opt.config_path);
  auto& norm = config.normalization;
  if (!opt.stoplist.empty()) {
    try {
      norm.stopwords = parse_stoplist(io::read_file(opt.stoplist));
    } catch (const InputError& e) {
      throw ConfigError(e.what());
    }
  }
  norm.fold_alef = norm.fold_alef || opt.fold_alef;
  norm.fold_teh_marbuta = norm.fold_teh_marbuta || opt.fold_teh_marbuta;
  norm.fold_alef_maqsura = norm.fold_alef_maqsura || opt.fold_alef_maqsura;
  norm.strip_definite_article = norm.strip_definite_article || opt.strip_article;
  if (opt.words_per_page) {
    config.pagination.words_per_page = *opt.words_per_page;
    if (config.pagination.mode == PaginationRule::Mode::form_feed) {
      config.pagination.mode = PaginationRule::Mode::automatic;
    }
  }
  if (opt.n) config.profile.n = *opt.n;
  if (opt.profile_size) config.profile.profile_size = *opt.profile_size;
  if (opt.word_limit) config.profile.word_limit = *opt.word_limit;
  if (opt.whole_document) config.profile.word_limit.reset();
  if (opt.high_cut) config.band.high_cut = *opt.high_cut;
  if (opt.min_freq) config.band.low_min_freq = *opt.min_freq;
  if (!opt.weights.empty()) {
    try {
      config.rooting.table = WeightTable::load(opt.weights);
    } catch (const InputError& e) {
      throw ConfigError(e.what());
    }
  }
  if (!opt.rank_rule.empty()) config.rooting.rule = RankRule::parse(opt.rank_rule);
  if (opt.root_len) config.rooting.root_len = *opt.root_len;
  if (!opt.store.empty()) config.profile_store = opt.store;
  if (opt.jobs) config.jobs = *opt.jobs;

  norm.validate();
  config.pagination.validate();
  config.profile.validate();
  config.band.validate();
  if (config.rooting.root_len == 0) throw ConfigError("root length must be positive");
  return config;
}

void emit(Context& ctx, const std::string& text) {
  if (ctx.opt.out.empty()) {
    ctx.out << text;
  } else {
    io::write_file_atomic(ctx.opt.out, text);
  }
}

std::string format_score(Metric metric, double score) {
  if (metric == Metric::manhattan) return std::to_string(static_cast<std::uint64_t>(score));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", score);
  return buf;
}

std::vector<NormalizedDocument> normalize_files(Context& ctx, const std::vector<std::string>& paths) {
  std::vector<RawDocument> raws;
  raws.reserve(paths.size());
  for (const auto& p : paths) raws.push_back(load_raw_document(p));
  return batch::parallel::normalize(raws, ctx.config.normalization, ctx.config.pagination, ctx.jobs());
}

// Query text goes through the same pipeline as documents.
std::vector<std::string> normalize_query(const Context& ctx, const std::string& text) {
  utf8::validate(text);
  RawDocument raw{"query", text, {}, {}};
  PaginationRule rule;
  rule.mode = PaginationRule::Mode::synthetic;
  std::vector<std::string> terms;
  for (Token& t : normalize_document(raw, ctx.config.normalization, rule).tokens) {
    terms.push_back(std::move(t.surface));
  }
  return terms;
}

int cmd_normalize(Context& ctx) {
  const RawDocument raw = load_raw_document(ctx.opt.in);
  const NormalizedDocument doc = normalize_document(raw, ctx.config.normalization, ctx.config.pagination);
  std::string text;
  if (ctx.format == Format::machine) {
    ojson j;
    j["doc_id"] = doc.doc_id;
    j["page_count"] = doc.page_count;
    auto tokens = ojson::array();
    for (const Token& t : doc.tokens) tokens.push_back({t.surface, t.page});
    j["tokens"] = std::move(tokens);
    text = j.dump(1) + "\n";
  } else {
    // One line per page.
    std::uint32_t page = 1;
    bool line_start = true;
    for (const Token& t : doc.tokens) {
      while (page < t.page) {
        text += '\n';
        ++page;
        line_start = true;
      }
      if (!line_start) text += ' ';
      text += t.surface;
      line_start = false;
    }
    while (page < doc.page_count) {
      text += '\n';
      ++page;
    }
    text += '\n';
  }
  emit(ctx, text);
  return 0;
}

int cmd_profile(Context& ctx) {
  const RawDocument raw = load_raw_document(ctx.opt.in);
  const NGramProfile profile =
      build_profile(normalize_document(raw, ctx.config.normalization, ctx.config.pagination), ctx.config.profile);
  std::string text;
  if (ctx.format == Format::machine) {
    ojson j;
    j["source_id"] = profile.source_id;
    j["n"] = profile.n;
    auto entries = ojson::array();
    for (const auto& e : profile.entries) entries.push_back({e.gram, e.frequency});
    j["entries"] = std::move(entries);
    text = j.dump(1) + "\n";
  } else {
    for (std::size_t r = 0; r < profile.entries.size(); ++r) {
      text += std::to_string(r) + '\t' + profile.entries[r].gram + '\t' +
              std::to_string(profile.entries[r].frequency) + '\n';
    }
  }
  emit(ctx, text);
  return 0;
}

int cmd_train(Context& ctx) {
  const ProfileStore store(ctx.config.profile_store);
  std::vector<LoadedClass> classes;

  if (!ctx.opt.corpus.empty()) {
    const CorpusLayout layout = ingest_corpus(ctx.opt.corpus);
    for (const auto& w : layout.warnings) ctx.err << "warning: " << w << '\n';
    LoadedCorpus loaded = load_corpus(layout);
    for (const auto& e : loaded.errors) ctx.err << "error: " << e << '\n';
    classes = std::move(loaded.classes);
  } else {
    if (ctx.opt.label.empty() || ctx.opt.dir.empty()) {
      throw ConfigError("train needs --class and --dir, or --corpus");
    }
    CorpusClass cls{ctx.opt.label, {}};
    if (!fs::is_directory(ctx.opt.dir)) throw InputError("'" + ctx.opt.dir + "' is not a directory");
    for (const auto& f : fs::directory_iterator(ctx.opt.dir)) {
      if (f.is_regular_file()) cls.documents.push_back(f.path());
    }
    std::sort(cls.documents.begin(), cls.documents.end());
    CorpusLayout layout{ctx.opt.dir, {cls}, {}};
    LoadedCorpus loaded = load_corpus(layout);
    for (const auto& e : loaded.errors) ctx.err << "error: " << e << '\n';
    classes = std::move(loaded.classes);
  }

  // Check every label first so a conflict leaves the store untouched.
  if (!ctx.opt.overwrite) {
    for (const auto& cls : classes) {
      if (!cls.documents.empty() && store.contains(cls.label)) throw StoreConflictError(cls.label);
    }
  }
  std::size_t trained = 0;
  for (const auto& cls : classes) {
    if (cls.documents.empty()) continue;
    const auto docs = batch::parallel::normalize(cls.documents, ctx.config.normalization,
                                                 ctx.config.pagination, ctx.jobs());
    const ClassModel model = batch::parallel::train_class(docs, cls.label, ctx.config.profile, ctx.jobs());
    store.save(model, ctx.opt.overwrite);
    ctx.out << "trained " << model.class_label << " from " << model.trained_doc_count << " documents ("
            << model.profile.size() << " grams)\n";
    ++trained;
  }
  if (trained == 0) throw InputError("no readable training documents");
  return 0;
}

int cmd_classify(Context& ctx) {
  const std::vector<ClassModel> store = ProfileStore(ctx.config.profile_store).load_all();
  if (store.empty()) throw NoModelError();
  const Metric metric = parse_metric(ctx.opt.metric);
  const auto docs = normalize_files(ctx, ctx.opt.inputs);
  const auto results = batch::parallel::classify(docs, store, metric, ctx.config.profile, ctx.jobs());

  std::string text;
  if (ctx.format == Format::machine) {
    auto arr = ojson::array();
    for (std::size_t i = 0; i < docs.size(); ++i) {
      ojson j;
      j["doc_id"] = docs[i].doc_id;
      j["metric"] = to_string(metric);
      j["chosen"] = results[i].chosen_class;
      auto scores = ojson::array();
      for (const auto& s : results[i].scores) scores.push_back({s.class_label, s.score});
      j["scores"] = std::move(scores);
      arr.push_back(std::move(j));
    }
    text = arr.dump(1) + "\n";
  } else {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (docs.size() > 1) text += "# " + docs[i].doc_id + '\n';
      for (const auto& s : results[i].scores) text += s.class_label + '\t' + format_score(metric, s.score) + '\n';
    }
  }
  emit(ctx, text);
  return 0;
}

int cmd_root(Context& ctx) {
  std::string word = ctx.opt.word;
  utf8::validate(word);
  if (!is_arabic_word(word)) throw InputError("'" + word + "' is not an Arabic word");
  word = fold_letters(word, ctx.config.normalization);
  const RootResult r = extract_root(word, ctx.config.rooting);
  if (r.too_short) ctx.err << "warning: word shorter than root length; returned unchanged\n";

  std::ostringstream text;
  if (ctx.format == Format::machine) {
    ojson j;
    j["word"] = r.word;
    j["root"] = r.root;
    j["positions"] = r.positions;
    j["too_short"] = r.too_short;
    j["rank_rule"] = ctx.config.rooting.rule.describe();
    if (ctx.opt.trace) {
      auto rows = ojson::array();
      for (const auto& p : r.products) rows.push_back({p.position, p.letter, p.weight, p.rank, p.product});
      j["products"] = std::move(rows);
    }
    text << j.dump(1) << '\n';
  } else {
    text << r.root << '\n';
    if (ctx.opt.trace) {
      text << "pos\tletter\tweight\trank\tproduct\n";
      for (const auto& p : r.products) {
        text << p.position << '\t' << p.letter << '\t' << p.weight << '\t' << p.rank << '\t' << p.product << '\n';
      }
    }
  }
  emit(ctx, text.str());
  return 0;
}

int cmd_book_index(Context& ctx) {
  const RawDocument raw = load_raw_document(ctx.opt.in);
  const NormalizedDocument doc = normalize_document(raw, ctx.config.normalization, ctx.config.pagination);
  BookIndexOptions options;
  options.band = ctx.config.band;
  options.group_roots = ctx.opt.group_roots;
  options.rooting = ctx.config.rooting;
  options.allow_empty = ctx.opt.force;
  const BookIndex index = build_book_index(doc, options);
  if (!ctx.opt.export_path.empty()) io::write_file_atomic(ctx.opt.export_path, serialize_index(index));
  emit(ctx, render_index(raw, index));
  return 0;
}

int cmd_invindex_add(Context& ctx) {
  const fs::path path = ctx.opt.index_path;
  const IndexVariant requested = parse_variant(ctx.opt.variant);
  InvertedIndex index = fs::exists(path) ? InvertedIndex::load(path) : InvertedIndex(requested);
  const auto docs = normalize_files(ctx, ctx.opt.inputs);
  std::size_t added = 0;
  std::size_t duplicates = 0;
  for (const auto& doc : docs) {
    try {
      index.add_document(doc);
      ++added;
    } catch (const DuplicateDocumentError& e) {
      ctx.err << "skipped: " << e.what() << '\n';
      ++duplicates;
    }
  }
  index.persist(path);
  ctx.out << "added " << added << " documents; skipped " << duplicates << " duplicates; index holds "
          << index.doc_count() << " documents\n";
  return duplicates > 0 ? static_cast<int>(ErrorKind::duplicate) : 0;
}

void print_postings(Context& ctx, std::span<const Posting> postings) {
  if (ctx.format == Format::machine) {
    auto arr = ojson::array();
    for (const auto& p : postings) {
      ojson j;
      j["doc_id"] = p.doc_id;
      j["tf"] = p.term_frequency;
      j["positions"] = p.positions;
      arr.push_back(std::move(j));
    }
    ctx.out << arr.dump(1) << '\n';
    return;
  }
  for (const auto& p : postings) {
    ctx.out << p.doc_id << '\t' << p.term_frequency;
    if (!p.positions.empty()) {
      ctx.out << '\t';
      for (std::size_t i = 0; i < p.positions.size(); ++i) ctx.out << (i ? "," : "") << p.positions[i];
    }
    ctx.out << '\n';
  }
}

int cmd_invindex_query(Context& ctx) {
  const InvertedIndex index = InvertedIndex::load(ctx.opt.index_path);
  const auto terms = normalize_query(ctx, ctx.opt.term);
  if (terms.size() > 1) throw InputError("--term takes a single word; use 'invindex phrase' for phrases");
  print_postings(ctx, terms.empty() ? std::span<const Posting>{} : index.query_term(terms.front()));
  return 0;
}

int cmd_invindex_phrase(Context& ctx) {
  const InvertedIndex index = InvertedIndex::load(ctx.opt.index_path);
  const auto terms = normalize_query(ctx, ctx.opt.terms);
  const auto hits = index.query_phrase(terms);
  if (ctx.format == Format::machine) {
    auto arr = ojson::array();
    for (const auto& h : hits) arr.push_back({{"doc_id", h.doc_id}, {"starts", h.starts}});
    ctx.out << arr.dump(1) << '\n';
  } else {
    for (const auto& h : hits) {
      ctx.out << h.doc_id << '\t';
      for (std::size_t i = 0; i < h.starts.size(); ++i) ctx.out << (i ? "," : "") << h.starts[i];
      ctx.out << '\n';
    }
  }
  return 0;
}

int cmd_invindex_stats(Context& ctx) {
  const IndexStats s = InvertedIndex::load(ctx.opt.index_path).stats();
  if (ctx.format == Format::machine) {
    ojson j;
    j["variant"] = to_string(s.variant);
    j["doc_count"] = s.doc_count;
    j["term_count"] = s.term_count;
    j["posting_count"] = s.posting_count;
    j["position_count"] = s.position_count;
    ctx.out << j.dump(1) << '\n';
  } else {
    ctx.out << "variant\t" << to_string(s.variant) << "\ndocuments\t" << s.doc_count << "\nterms\t" << s.term_count
            << "\npostings\t" << s.posting_count << "\npositions\t" << s.position_count << '\n';
  }
  return 0;
}

int cmd_eval(Context& ctx) {
  const EvalMode mode = parse_eval_mode(ctx.opt.mode);
  const RootingConfig* roots = ctx.opt.match_roots ? &ctx.config.rooting : nullptr;

  std::vector<std::pair<std::string, std::string>> pairs;
  if (!ctx.opt.auto_dir.empty() || !ctx.opt.gold_dir.empty()) {
    if (ctx.opt.auto_dir.empty() || ctx.opt.gold_dir.empty()) {
      throw ConfigError("batch evaluation needs both --auto-dir and --gold-dir");
    }
    std::vector<fs::path> gold_files;
    for (const auto& f : fs::directory_iterator(ctx.opt.gold_dir)) {
      if (f.is_regular_file()) gold_files.push_back(f.path());
    }
    std::sort(gold_files.begin(), gold_files.end());
    for (const auto& g : gold_files) {
      const fs::path a = fs::path(ctx.opt.auto_dir) / g.filename();
      if (!fs::exists(a)) {
        ctx.err << "warning: no generated index for " << g.filename().string() << '\n';
        continue;
      }
      pairs.emplace_back(a.string(), g.string());
    }
  } else {
    if (ctx.opt.auto_path.empty() || ctx.opt.gold_path.empty()) {
      throw ConfigError("eval needs --auto and --gold, or --auto-dir and --gold-dir");
    }
    pairs.emplace_back(ctx.opt.auto_path, ctx.opt.gold_path);
  }

  std::vector<EvalReport> reports;
  for (const auto& [a, g] : pairs) reports.push_back(compare_index(load_index(a), load_index(g), mode, roots));
  const EvalSummary summary = aggregate(reports);

  auto ratio_json = [](const std::optional<double>& v) -> ojson { return v ? ojson(*v) : ojson(nullptr); };
  ojson machine;
  machine["mode"] = to_string(mode);
  auto docs = ojson::array();
  for (const auto& r : reports) {
    docs.push_back({{"doc_id", r.doc_id},
                    {"tp", r.tp},
                    {"fp", r.fp},
                    {"fn", r.fn},
                    {"precision", ratio_json(r.precision)},
                    {"recall", ratio_json(r.recall)}});
  }
  machine["documents"] = std::move(docs);
  machine["macro"] = {{"precision", ratio_json(summary.macro_precision)},
                      {"recall", ratio_json(summary.macro_recall)}};
  machine["micro"] = {{"precision", ratio_json(summary.micro_precision)},
                      {"recall", ratio_json(summary.micro_recall)}};
  if (!ctx.opt.report.empty()) io::write_file_atomic(ctx.opt.report, machine.dump(1) + "\n");

  std::string text;
  if (ctx.format == Format::machine) {
    text = machine.dump(1) + "\n";
  } else {
    text = "doc_id\ttp\tfp\tfn\tprecision\trecall\n";
    for (const auto& r : reports) {
      text += r.doc_id + '\t' + std::to_string(r.tp) + '\t' + std::to_string(r.fp) + '\t' + std::to_string(r.fn) +
              '\t' + format_ratio(r.precision) + '\t' + format_ratio(r.recall) + '\n';
    }
    text += "macro\t\t\t\t" + format_ratio(summary.macro_precision) + '\t' + format_ratio(summary.macro_recall) + '\n';
    text += "micro\t" + std::to_string(summary.tp) + '\t' + std::to_string(summary.fp) + '\t' +
            std::to_string(summary.fn) + '\t' + format_ratio(summary.micro_precision) + '\t' +
            format_ratio(summary.micro_recall) + '\n';
  }
  emit(ctx, text);
  return 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  sub->add_option("--jobs", o.jobs, "Worker threads for per-document stages (default: all processors)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
}

void add_normalization(CLI::App* sub, Options& o) {
  sub->add_option("--words-per-page", o.words_per_page, "Synthetic page size when the text has no form feeds");
  sub->add_option("--stoplist", o.stoplist, "Stop-word file, one term per line")->check(CLI::ExistingFile);
  sub->add_flag("--fold-alef", o.fold_alef, "Fold hamza/madda alef forms to bare alef");
  sub->add_flag("--fold-teh-marbuta", o.fold_teh_marbuta, "Fold teh marbuta to heh");
  sub->add_flag("--fold-alef-maqsura", o.fold_alef_maqsura, "Fold alef maqsura to yeh");
  sub->add_flag("--strip-article", o.strip_article, "Remove a leading definite article");
}

void add_profile(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "N-gram size (2-5)");
  sub->add_option("--size", o.profile_size, "Profile size (top grams kept)");
  sub->add_option("--word-limit", o.word_limit, "Only the first N words are profiled");
  sub->add_flag("--whole-document", o.whole_document, "Profile every word");
}

void add_rooting(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "Letter weight table (LETTER<TAB>WEIGHT)")->check(CLI::ExistingFile);
  sub->add_option("--rank-rule", o.rank_rule, "positional | custom:a,b,c");
  sub->add_option("--root-len", o.root_len, "Root length");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arabic document indexing, classification and evaluation"};
  app.name("arabidx");
  app.require_subcommand(1);

  auto* normalize = app.add_subcommand("normalize", "Clean and tokenize a document");
  add_common(normalize, o);
  add_normalization(normalize, o);
  normalize->add_option("--in", o.in, "Input text file")->required();
  normalize->add_option("--out", o.out, "Output file (default: stdout)");

  auto* profile = app.add_subcommand("profile", "Print the N-gram profile of a document");
  add_common(profile, o);
  add_normalization(profile, o);
  add_profile(profile, o);
  profile->add_option("--in", o.in, "Input text file")->required();
  profile->add_option("--out", o.out, "Output file (default: stdout)");

  auto* train = app.add_subcommand("train", "Train class profiles into the profile store");
  add_common(train, o);
  add_normalization(train, o);
  add_profile(train, o);
  train->add_option("--class", o.label, "Class label");
  train->add_option("--dir", o.dir, "Directory of training documents for --class");
  train->add_option("--corpus", o.corpus, "Corpus root: one subdirectory per class");
  train->add_option("--store", o.store, "Profile store directory");
  train->add_flag("--overwrite", o.overwrite, "Replace existing class profiles");

  auto* classify = app.add_subcommand("classify", "Classify documents against the profile store");
  add_common(classify, o);
  add_normalization(classify, o);
  add_profile(classify, o);
  classify->add_option("--in", o.inputs, "Input text files")->required();
  classify->add_option("--metric", o.metric, "manhattan | dice")->check(CLI::IsMember({"manhattan", "dice"}));
  classify->add_option("--store", o.store, "Profile store directory");
  classify->add_option("--out", o.out, "Output file (default: stdout)");

  auto* root = app.add_subcommand("root", "Extract the root of a word");
  add_common(root, o);
  add_rooting(root, o);
  root->add_option("--word", o.word, "Arabic word")->required();
  root->add_flag("--trace", o.trace, "Print the per-letter product table");
  root->add_flag("--fold-alef", o.fold_alef, "Fold hamza/madda alef forms to bare alef");
  root->add_flag("--fold-teh-marbuta", o.fold_teh_marbuta, "Fold teh marbuta to heh");
  root->add_flag("--fold-alef-maqsura", o.fold_alef_maqsura, "Fold alef maqsura to yeh");

  auto* book = app.add_subcommand("book-index", "Append a back-of-book index to a document");
  add_common(book, o);
  add_normalization(book, o);
  add_rooting(book, o);
  book->add_option("--in", o.in, "Input text file")->required();
  book->add_option("--out", o.out, "Rendered output (default: stdout)");
  book->add_option("--export", o.export_path, "Machine-readable index file");
  book->add_option("--high-cut", o.high_cut, "Fraction of most frequent terms dropped");
  book->add_option("--min-freq", o.min_freq, "Terms with frequency <= this are dropped");
  book->add_flag("--group-roots", o.group_roots, "Merge terms sharing a root");
  book->add_flag("--force", o.force, "Emit an empty index instead of failing");

  auto* inv = app.add_subcommand("invindex", "Corpus inverted index");
  inv->require_subcommand(1);
  auto* inv_add = inv->add_subcommand("add", "Add documents");
  add_common(inv_add, o);
  add_normalization(inv_add, o);
  inv_add->add_option("--index", o.index_path, "Index file")->required();
  inv_add->add_option("--in", o.inputs, "Input text files")->required();
  inv_add->add_option("--variant", o.variant, "Variant for a new index")
      ->check(CLI::IsMember({"positional", "document", "document_level"}));
  auto* inv_query = inv->add_subcommand("query", "Look up one term");
  add_common(inv_query, o);
  add_normalization(inv_query, o);
  inv_query->add_option("--index", o.index_path, "Index file")->required();
  inv_query->add_option("--term", o.term, "Term")->required();
  auto* inv_phrase = inv->add_subcommand("phrase", "Phrase search");
  add_common(inv_phrase, o);
  add_normalization(inv_phrase, o);
  inv_phrase->add_option("--index", o.index_path, "Index file")->required();
  inv_phrase->add_option("--terms", o.terms, "Space-separated phrase")->required();
  auto* inv_stats = inv->add_subcommand("stats", "Index statistics");
  add_common(inv_stats, o);
  inv_stats->add_option("--index", o.index_path, "Index file")->required();

  auto* eval = app.add_subcommand("eval", "Precision and recall against gold indexes");
  add_common(eval, o);
  add_rooting(eval, o);
  eval->add_option("--auto", o.auto_path, "Generated index file");
  eval->add_option("--gold", o.gold_path, "Gold index file");
  eval->add_option("--auto-dir", o.auto_dir, "Directory of generated index files");
  eval->add_option("--gold-dir", o.gold_dir, "Directory of gold index files (matched by filename)");
  eval->add_option("--mode", o.mode, "term | page")->check(CLI::IsMember({"term", "page"}));
  eval->add_flag("--match-roots", o.match_roots, "Compare extracted roots instead of surface terms");
  eval->add_option("--report", o.report, "Structured report file");
  eval->add_option("--out", o.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ErrorKind::config);
  }

  try {
    Context ctx{o, resolve_config(o), o.format == "machine" ? Format::machine : Format::text, out, err};
    if (*normalize) return cmd_normalize(ctx);
    if (*profile) return cmd_profile(ctx);
    if (*train) return cmd_train(ctx);
    if (*classify) return cmd_classify(ctx);
    if (*root) return cmd_root(ctx);
    if (*book) return cmd_book_index(ctx);
    if (*inv_add) return cmd_invindex_add(ctx);
    if (*inv_query) return cmd_invindex_query(ctx);
    if (*inv_phrase) return cmd_invindex_phrase(ctx);
    if (*inv_stats) return cmd_invindex_stats(ctx);
    if (*eval) return cmd_eval(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::input);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return static_cast<int>(ErrorKind::config);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("arabidx");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arabidx::cli
