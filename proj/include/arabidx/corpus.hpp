#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "arabidx/book_index.hpp"
#include "arabidx/ngram.hpp"
#include "arabidx/normalize.hpp"
#include "arabidx/rooting.hpp"

namespace arabidx {

struct CorpusClass {
  std::string label;
  std::vector<std::filesystem::path> documents;  // sorted by filename
};

// One class per immediate subdirectory of root_dir.
struct CorpusLayout {
  std::filesystem::path root_dir;
  std::vector<CorpusClass> classes;  // sorted by label
  std::vector<std::string> warnings;

  std::size_t document_count() const;
};

// Throws InputError when root_dir is missing or holds no class directories.
CorpusLayout ingest_corpus(const std::filesystem::path& root_dir);

// Reads and validates a UTF-8 text file. doc_id defaults to the file stem.
RawDocument load_raw_document(const std::filesystem::path& path, std::string doc_id = {});

struct LoadedClass {
  std::string label;
  std::vector<RawDocument> documents;
};

struct LoadedCorpus {
  std::vector<LoadedClass> classes;
  std::vector<std::string> errors;  // unreadable or undecodable files, skipped
};

// doc_ids are "label/filename".
LoadedCorpus load_corpus(const CorpusLayout& layout);

struct RunConfig {
  NormalizationConfig normalization;
  PaginationRule pagination;
  ProfileConfig profile;
  RankingBand band;
  RootingConfig rooting;
  std::filesystem::path profile_store = "profiles";
  int jobs = 0;  // 0: all available processors
};

// Built-in defaults, including the bundled stop-word list.
RunConfig default_run_config();

// Strict JSON config: unknown keys fail with their name; relative paths
// resolve against the config file's directory.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir);

}  // namespace arabidx
