#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arabidx/normalize.hpp"

namespace arabidx {

enum class IndexVariant { document_level, positional };

std::string_view to_string(IndexVariant variant);
IndexVariant parse_variant(std::string_view name);

struct Posting {
  std::string doc_id;
  std::uint64_t term_frequency = 0;
  std::vector<std::uint64_t> positions;  // token ordinals; empty in document_level

  bool operator==(const Posting&) const = default;
};

struct PhraseHit {
  std::string doc_id;
  std::vector<std::uint64_t> starts;

  bool operator==(const PhraseHit&) const = default;
};

struct IndexStats {
  IndexVariant variant = IndexVariant::positional;
  std::size_t doc_count = 0;
  std::size_t term_count = 0;
  std::size_t posting_count = 0;
  std::uint64_t position_count = 0;
};

// Stable FNV-1a 64 hash of the normalized token stream, as 16 hex digits.
std::string content_fingerprint(const NormalizedDocument& doc);

// Corpus-level term -> postings map. Single writer; const members are safe to
// call concurrently when no writer is active.
class InvertedIndex {
 public:
  static constexpr int kFormatVersion = 1;

  explicit InvertedIndex(IndexVariant variant = IndexVariant::positional) : variant_(variant) {}

  IndexVariant variant() const noexcept { return variant_; }
  std::size_t doc_count() const noexcept { return registry_.size(); }
  const std::map<std::string, std::vector<Posting>, std::less<>>& postings() const noexcept {
    return postings_;
  }
  const std::map<std::string, std::string>& registry() const noexcept { return registry_; }

  // Throws DuplicateDocumentError, leaving the index unchanged, when the id or
  // the content fingerprint is already registered.
  void add_document(const NormalizedDocument& doc);

  // Postings sorted by doc_id; empty for unknown terms.
  std::span<const Posting> query_term(std::string_view term) const;

  // Documents with the terms at consecutive ordinals. Positional variant only.
  std::vector<PhraseHit> query_phrase(std::span<const std::string> terms) const;

  IndexStats stats() const;

  std::string serialize() const;
  // Throws LoadError on corrupt input; nothing partial is returned.
  static InvertedIndex deserialize(std::string_view text);

  void persist(const std::filesystem::path& path) const;
  static InvertedIndex load(const std::filesystem::path& path);

  bool operator==(const InvertedIndex& other) const {
    return variant_ == other.variant_ && registry_ == other.registry_ && postings_ == other.postings_;
  }

 private:
  IndexVariant variant_;
  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
  std::map<std::string, std::string> registry_;      // doc_id -> fingerprint
  std::map<std::string, std::string> fingerprints_;  // fingerprint -> doc_id
};

}  // namespace arabidx
