#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arabidx/normalize.hpp"

namespace arabidx {

struct ProfileEntry {
  std::string gram;
  std::uint64_t frequency = 0;

  bool operator==(const ProfileEntry&) const = default;
};

// Rank-ordered grams: frequency descending, ties by gram codepoint order.
struct NGramProfile {
  int n = 3;
  std::vector<ProfileEntry> entries;
  std::string source_id;

  std::size_t size() const noexcept { return entries.size(); }
  bool operator==(const NGramProfile&) const = default;
};

struct ProfileConfig {
  int n = 3;
  std::size_t profile_size = 100;
  std::optional<std::size_t> word_limit = 100;  // nullopt consumes the whole document

  void validate() const;
};

struct ClassModel {
  std::string class_label;
  NGramProfile profile;
  std::size_t trained_doc_count = 0;

  bool operator==(const ClassModel&) const = default;
};

enum class Metric { manhattan, dice };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view name);

struct ClassScore {
  std::string class_label;
  double score = 0.0;

  bool operator==(const ClassScore&) const = default;
};

// scores[0] is the chosen class; the rest follow in ranking order.
struct ClassificationResult {
  std::string chosen_class;
  Metric metric = Metric::manhattan;
  std::vector<ClassScore> scores;

  bool operator==(const ClassificationResult&) const = default;
};

using GramCounts = std::unordered_map<std::string, std::uint64_t>;

// Sliding window of n letters inside a single token. Throws ConfigError for n outside [2,5].
std::vector<std::string> extract_ngrams(std::string_view token, int n);

// Adds the grams of the first word_limit tokens of doc into counts.
void count_ngrams(const NormalizedDocument& doc, const ProfileConfig& config, GramCounts& counts);

NGramProfile profile_from_counts(const GramCounts& counts, int n, std::size_t profile_size,
                                 std::string source_id);

NGramProfile build_profile(const NormalizedDocument& doc, const ProfileConfig& config);

// Out-of-place distance: for every gram of p, |rank in p - rank in q|, or
// missing_penalty (default |p|) when q lacks the gram.
std::uint64_t manhattan_distance(const NGramProfile& p, const NGramProfile& q,
                                 std::optional<std::uint64_t> missing_penalty = std::nullopt);

// 2 * shared / (size_a + size_b).
double dice_coefficient(std::size_t shared, std::size_t size_a, std::size_t size_b);
double dice_similarity(const NGramProfile& p, const NGramProfile& q);

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config);
ClassModel model_from_counts(const GramCounts& counts, std::size_t doc_count, std::string label,
                             const ProfileConfig& config);

ClassificationResult classify_profile(const NGramProfile& profile, std::span<const ClassModel> store,
                                      Metric metric);
ClassificationResult classify(const NormalizedDocument& doc, std::span<const ClassModel> store,
                              Metric metric, const ProfileConfig& config);

std::string serialize_model(const ClassModel& model);
ClassModel parse_model(std::string_view text);

// One file per class, "<label>.profile.json", inside a directory.
class ProfileStore {
 public:
  explicit ProfileStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  bool contains(std::string_view label) const;
  // Throws StoreConflictError when the label exists and overwrite is false.
  void save(const ClassModel& model, bool overwrite = false) const;
  // Snapshot of all models, sorted by label.
  std::vector<ClassModel> load_all() const;

 private:
  std::filesystem::path path_for(std::string_view label) const;

  std::filesystem::path dir_;
};

}  // namespace arabidx
