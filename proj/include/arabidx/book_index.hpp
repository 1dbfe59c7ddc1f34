#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arabidx/normalize.hpp"
#include "arabidx/rooting.hpp"

namespace arabidx {

struct TermStats {
  std::string term;
  std::uint64_t frequency = 0;
  std::vector<std::uint32_t> pages;  // ascending, unique

  bool operator==(const TermStats&) const = default;
};

// Drops the ceil(high_cut * |terms|) most frequent terms and every term with
// frequency <= low_min_freq.
struct RankingBand {
  double high_cut = 0.05;
  std::uint64_t low_min_freq = 1;

  void validate() const;
  bool operator==(const RankingBand&) const = default;
};

struct IndexEntry {
  std::string term;
  std::vector<std::uint32_t> pages;

  bool operator==(const IndexEntry&) const = default;
};

struct BookIndex {
  std::string doc_id;
  std::vector<IndexEntry> entries;  // sorted by term
  bool grouped_by_root = false;
  std::uint32_t page_count = 1;
  RankingBand band;

  bool operator==(const BookIndex&) const = default;
};

struct BookIndexOptions {
  RankingBand band;
  bool group_roots = false;
  RootingConfig rooting;
  bool allow_empty = false;  // return an empty index instead of throwing
};

// Frequency descending, term codepoint order on ties.
std::vector<TermStats> term_frequencies(const NormalizedDocument& doc);

// Throws EmptyIndexError when nothing survives.
std::vector<TermStats> apply_band(std::span<const TermStats> stats, const RankingBand& band);

BookIndex build_book_index(const NormalizedDocument& doc, const BookIndexOptions& options = {});

inline constexpr std::string_view kIndexSeparator = "----";
inline constexpr std::string_view kIndexHeader = "فهرس";

// raw.text, then "\n----\nفهرس\n", then one "term: p1, p2" line per entry.
std::string render_index(const RawDocument& raw, const BookIndex& index);

// Inverse of render_index: the original text, or nullopt when no index block is present.
std::optional<std::string> strip_rendered_index(std::string_view rendered);

// Machine-readable export, also the gold-index format.
std::string serialize_index(const BookIndex& index);
BookIndex parse_index(std::string_view text);
BookIndex load_index(const std::string& path);

}  // namespace arabidx
