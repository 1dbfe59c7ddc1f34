#include "arabidx/corpus.hpp"

#include <algorithm>
#include <set>

#include "arabidx/error.hpp"
#include "arabidx/io.hpp"
#include "arabidx/utf8.hpp"
#include "json.hpp"

namespace arabidx {

namespace fs = std::filesystem;

std::size_t CorpusLayout::document_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.documents.size();
  return n;
}

CorpusLayout ingest_corpus(const fs::path& root_dir) {
  if (!fs::is_directory(root_dir)) throw InputError("corpus root '" + root_dir.string() + "' is not a directory");
  CorpusLayout layout;
  layout.root_dir = root_dir;
  for (const auto& entry : fs::directory_iterator(root_dir)) {
    if (!entry.is_directory()) continue;
    CorpusClass cls;
    cls.label = entry.path().filename().string();
    for (const auto& file : fs::directory_iterator(entry.path())) {
      if (file.is_regular_file()) cls.documents.push_back(file.path());
    }
    std::sort(cls.documents.begin(), cls.documents.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
    if (cls.documents.empty()) layout.warnings.push_back("class '" + cls.label + "' has no documents");
    layout.classes.push_back(std::move(cls));
  }
  if (layout.classes.empty()) throw InputError("corpus root '" + root_dir.string() + "' has no class directories");
  std::sort(layout.classes.begin(), layout.classes.end(),
            [](const CorpusClass& a, const CorpusClass& b) { return a.label < b.label; });
  return layout;
}

RawDocument load_raw_document(const fs::path& path, std::string doc_id) {
  RawDocument raw;
  raw.text = io::read_file(path);
  try {
    utf8::validate(raw.text);
  } catch (const DecodeError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  raw.doc_id = doc_id.empty() ? path.stem().string() : std::move(doc_id);
  raw.source_path = path.string();
  return raw;
}

LoadedCorpus load_corpus(const CorpusLayout& layout) {
  LoadedCorpus out;
  for (const CorpusClass& cls : layout.classes) {
    LoadedClass loaded{cls.label, {}};
    for (const fs::path& p : cls.documents) {
      try {
        RawDocument raw = load_raw_document(p, cls.label + "/" + p.filename().string());
        raw.category = cls.label;
        loaded.documents.push_back(std::move(raw));
      } catch (const InputError& e) {
        out.errors.emplace_back(e.what());
      }
    }
    out.classes.push_back(std::move(loaded));
  }
  return out;
}

RunConfig default_run_config() {
  RunConfig config;
  config.normalization.stopwords = default_stoplist();
  return config;
}

namespace {

using json = nlohmann::json;

void check_keys(const json& obj, std::string_view section, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError("config section '" + std::string(section) + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown config key '" + (section.empty() ? key : std::string(section) + "." + key) + "'");
    }
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_relative() ? base / path : path;
}

fs::path existing(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError("referenced file '" + path.string() + "' does not exist");
  return path;
}

}  // namespace

RunConfig parse_run_config(std::string_view text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig config = default_run_config();
  try {
    check_keys(j, "", {"normalization", "pagination", "profile", "band", "rooting", "profile_store", "jobs"});
    if (j.contains("normalization")) {
      const json& n = j["normalization"];
      check_keys(n, "normalization",
                 {"stoplist", "fold_alef", "fold_teh_marbuta", "fold_alef_maqsura", "strip_definite_article",
                  "extra_strip_chars"});
      auto& nc = config.normalization;
      if (n.contains("stoplist")) {
        nc.stopwords = parse_stoplist(io::read_file(existing(resolve(base_dir, n["stoplist"].get<std::string>()))));
      }
      if (n.contains("fold_alef")) nc.fold_alef = n["fold_alef"].get<bool>();
      if (n.contains("fold_teh_marbuta")) nc.fold_teh_marbuta = n["fold_teh_marbuta"].get<bool>();
      if (n.contains("fold_alef_maqsura")) nc.fold_alef_maqsura = n["fold_alef_maqsura"].get<bool>();
      if (n.contains("strip_definite_article")) nc.strip_definite_article = n["strip_definite_article"].get<bool>();
      if (n.contains("extra_strip_chars")) {
        for (char32_t cp : utf8::decode(n["extra_strip_chars"].get<std::string>())) nc.strip_chars.insert(cp);
      }
    }
    if (j.contains("pagination")) {
      const json& p = j["pagination"];
      check_keys(p, "pagination", {"mode", "words_per_page"});
      if (p.contains("mode")) {
        const auto mode = p["mode"].get<std::string>();
        if (mode == "auto") {
          config.pagination.mode = PaginationRule::Mode::automatic;
        } else if (mode == "form_feed") {
          config.pagination.mode = PaginationRule::Mode::form_feed;
        } else if (mode == "synthetic") {
          config.pagination.mode = PaginationRule::Mode::synthetic;
        } else {
          throw ConfigError("unknown pagination mode '" + mode + "'");
        }
      }
      if (p.contains("words_per_page")) config.pagination.words_per_page = p["words_per_page"].get<std::size_t>();
    }
    if (j.contains("profile")) {
      const json& p = j["profile"];
      check_keys(p, "profile", {"n", "size", "word_limit"});
      if (p.contains("n")) config.profile.n = p["n"].get<int>();
      if (p.contains("size")) config.profile.profile_size = p["size"].get<std::size_t>();
      if (p.contains("word_limit")) {
        if (p["word_limit"].is_null()) {
          config.profile.word_limit.reset();
        } else {
          config.profile.word_limit = p["word_limit"].get<std::size_t>();
        }
      }
    }
    if (j.contains("band")) {
      const json& b = j["band"];
      check_keys(b, "band", {"high_cut", "min_freq"});
      if (b.contains("high_cut")) config.band.high_cut = b["high_cut"].get<double>();
      if (b.contains("min_freq")) config.band.low_min_freq = b["min_freq"].get<std::uint64_t>();
    }
    if (j.contains("rooting")) {
      const json& r = j["rooting"];
      check_keys(r, "rooting", {"weights", "rank_rule", "root_len"});
      if (r.contains("weights")) {
        config.rooting.table = WeightTable::load(existing(resolve(base_dir, r["weights"].get<std::string>())).string());
      }
      if (r.contains("rank_rule")) config.rooting.rule = RankRule::parse(r["rank_rule"].get<std::string>());
      if (r.contains("root_len")) config.rooting.root_len = r["root_len"].get<std::size_t>();
    }
    if (j.contains("profile_store")) config.profile_store = resolve(base_dir, j["profile_store"].get<std::string>());
    if (j.contains("jobs")) config.jobs = j["jobs"].get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  config.normalization.validate();
  config.pagination.validate();
  config.profile.validate();
  config.band.validate();
  if (config.rooting.root_len == 0) throw ConfigError("root_len must be positive");
  return config;
}

RunConfig load_run_config(const fs::path& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  return parse_run_config(text, path.parent_path());
}

}  // namespace arabidx
