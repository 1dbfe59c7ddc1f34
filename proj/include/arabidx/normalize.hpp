#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace arabidx {

struct RawDocument {
  std::string doc_id;
  std::string text;  // validated UTF-8
  std::optional<std::string> source_path;
  std::optional<std::string> category;
};

// Symbols removed as word separators; always contains . : ; / \ - + ? < > @ $ % & * ( ) ! ~
std::set<char32_t> default_strip_chars();
// Harakat U+064B..U+0652, tatweel U+0640 and the other Arabic combining marks.
std::set<char32_t> default_diacritics();

struct NormalizationConfig {
  std::set<char32_t> strip_chars = default_strip_chars();
  std::set<char32_t> diacritics = default_diacritics();
  std::set<std::string> stopwords;
  bool fold_alef = false;           // أ إ آ -> ا
  bool fold_teh_marbuta = false;    // ة -> ه
  bool fold_alef_maqsura = false;   // ى -> ي
  bool strip_definite_article = false;

  // Throws ConfigError if the required symbol or mark sets are missing members.
  void validate() const;
};

struct Token {
  std::string surface;
  std::uint32_t page = 1;
  std::size_t ordinal = 0;

  bool operator==(const Token&) const = default;
};

struct NormalizedDocument {
  std::string doc_id;
  std::vector<Token> tokens;
  std::uint32_t page_count = 1;

  bool operator==(const NormalizedDocument&) const = default;
};

struct PaginationRule {
  enum class Mode {
    automatic,  // form feeds when present, otherwise synthetic
    form_feed,
    synthetic,
  };
  Mode mode = Mode::automatic;
  std::size_t words_per_page = 300;

  void validate() const;
};

std::string strip_noise(std::string_view text, const NormalizationConfig& config);

std::vector<std::string> tokenize(std::string_view cleaned);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::set<std::string>& stopwords);

std::string fold_letters(std::string_view token, const NormalizationConfig& config);

// Leading "ال" is removed when at least two letters remain.
std::string strip_article(std::string_view token);

// Splits raw text at U+000C page breaks. Always returns at least one page.
std::vector<std::string_view> split_pages(std::string_view text);

// Full preprocessing: noise removal, tokenization, folding, stop-word removal
// and page attribution. Deterministic in (raw, config, rule).
NormalizedDocument normalize_document(const RawDocument& raw, const NormalizationConfig& config,
                                      const PaginationRule& rule = {});

// One term per line, '#' starts a comment line, blank lines ignored.
std::set<std::string> parse_stoplist(std::string_view text);
std::set<std::string> default_stoplist();

}  // namespace arabidx
