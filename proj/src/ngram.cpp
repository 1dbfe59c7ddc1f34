#include "arabidx/ngram.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "arabidx/error.hpp"
#include "arabidx/io.hpp"
#include "arabidx/utf8.hpp"
#include "json.hpp"

namespace arabidx {

namespace {

void check_n(int n) {
  if (n < 2 || n > 5) throw ConfigError("n-gram size must be in [2,5], got " + std::to_string(n));
}

void check_label(std::string_view label) {
  if (label.empty() || label == "." || label == ".." ||
      label.find_first_of(std::string_view("/\\\0", 3)) != std::string_view::npos) {
    throw ConfigError("invalid class label '" + std::string(label) + "'");
  }
}

bool rank_before(const ProfileEntry& a, const ProfileEntry& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.gram < b.gram;
}

}  // namespace

void ProfileConfig::validate() const {
  check_n(n);
  if (profile_size == 0) throw ConfigError("profile size must be positive");
  if (word_limit && *word_limit == 0) throw ConfigError("word limit must be positive");
}

std::string_view to_string(Metric metric) {
  return metric == Metric::manhattan ? "manhattan" : "dice";
}

Metric parse_metric(std::string_view name) {
  if (name == "manhattan") return Metric::manhattan;
  if (name == "dice") return Metric::dice;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

std::vector<std::string> extract_ngrams(std::string_view token, int n) {
  check_n(n);
  const std::u32string cps = utf8::decode(token);
  std::vector<std::string> grams;
  const auto width = static_cast<std::size_t>(n);
  if (cps.size() < width) return grams;
  grams.reserve(cps.size() - width + 1);
  for (std::size_t i = 0; i + width <= cps.size(); ++i) {
    grams.push_back(utf8::encode(std::u32string_view(cps).substr(i, width)));
  }
  return grams;
}

void count_ngrams(const NormalizedDocument& doc, const ProfileConfig& config, GramCounts& counts) {
  config.validate();
  std::size_t consumed = doc.tokens.size();
  if (config.word_limit) consumed = std::min(consumed, *config.word_limit);
  for (std::size_t i = 0; i < consumed; ++i) {
    for (std::string& gram : extract_ngrams(doc.tokens[i].surface, config.n)) {
      ++counts[std::move(gram)];
    }
  }
}

NGramProfile profile_from_counts(const GramCounts& counts, int n, std::size_t profile_size,
                                 std::string source_id) {
  NGramProfile profile;
  profile.n = n;
  profile.source_id = std::move(source_id);
  profile.entries.reserve(counts.size());
  for (const auto& [gram, freq] : counts) profile.entries.push_back({gram, freq});
  const std::size_t keep = std::min(profile_size, profile.entries.size());
  std::partial_sort(profile.entries.begin(), profile.entries.begin() + static_cast<std::ptrdiff_t>(keep),
                    profile.entries.end(), rank_before);
  profile.entries.resize(keep);
  return profile;
}

NGramProfile build_profile(const NormalizedDocument& doc, const ProfileConfig& config) {
  GramCounts counts;
  count_ngrams(doc, config, counts);
  return profile_from_counts(counts, config.n, config.profile_size, doc.doc_id);
}

std::uint64_t manhattan_distance(const NGramProfile& p, const NGramProfile& q,
                                 std::optional<std::uint64_t> missing_penalty) {
  if (p.n != q.n) throw IncompatibleProfileError(p.n, q.n);
  std::unordered_map<std::string_view, std::uint64_t> q_rank;
  q_rank.reserve(q.entries.size());
  for (std::size_t r = 0; r < q.entries.size(); ++r) q_rank.emplace(q.entries[r].gram, r);

  const std::uint64_t penalty = missing_penalty.value_or(p.entries.size());
  std::uint64_t total = 0;
  for (std::uint64_t r = 0; r < p.entries.size(); ++r) {
    const auto it = q_rank.find(p.entries[r].gram);
    if (it == q_rank.end()) {
      total += penalty;
    } else {
      total += r > it->second ? r - it->second : it->second - r;
    }
  }
  return total;
}

double dice_coefficient(std::size_t shared, std::size_t size_a, std::size_t size_b) {
  if (size_a + size_b == 0) throw UndefinedSimilarityError();
  return 2.0 * static_cast<double>(shared) / static_cast<double>(size_a + size_b);
}

double dice_similarity(const NGramProfile& p, const NGramProfile& q) {
  if (p.n != q.n) throw IncompatibleProfileError(p.n, q.n);
  std::unordered_set<std::string_view> grams;
  grams.reserve(p.entries.size());
  for (const auto& e : p.entries) grams.insert(e.gram);
  std::size_t shared = 0;
  for (const auto& e : q.entries) shared += grams.contains(e.gram) ? 1 : 0;
  return dice_coefficient(shared, p.entries.size(), q.entries.size());
}

ClassModel model_from_counts(const GramCounts& counts, std::size_t doc_count, std::string label,
                             const ProfileConfig& config) {
  config.validate();
  check_label(label);
  ClassModel model;
  model.profile = profile_from_counts(counts, config.n, config.profile_size, label);
  model.class_label = std::move(label);
  model.trained_doc_count = doc_count;
  return model;
}

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config) {
  if (docs.empty()) throw InputError("cannot train class '" + label + "' from zero documents");
  GramCounts counts;
  for (const auto& doc : docs) count_ngrams(doc, config, counts);
  return model_from_counts(counts, docs.size(), std::move(label), config);
}

ClassificationResult classify_profile(const NGramProfile& profile, std::span<const ClassModel> store,
                                      Metric metric) {
  if (store.empty()) throw NoModelError();
  ClassificationResult result;
  result.metric = metric;
  result.scores.reserve(store.size());
  for (const ClassModel& model : store) {
    if (model.profile.n != profile.n) throw IncompatibleProfileError(profile.n, model.profile.n);
    const double score = metric == Metric::manhattan
                             ? static_cast<double>(manhattan_distance(profile, model.profile))
                             : dice_similarity(profile, model.profile);
    result.scores.push_back({model.class_label, score});
  }
  std::sort(result.scores.begin(), result.scores.end(), [metric](const ClassScore& a, const ClassScore& b) {
    if (a.score != b.score) return metric == Metric::manhattan ? a.score < b.score : a.score > b.score;
    return a.class_label < b.class_label;
  });
  result.chosen_class = result.scores.front().class_label;
  return result;
}

ClassificationResult classify(const NormalizedDocument& doc, std::span<const ClassModel> store,
                              Metric metric, const ProfileConfig& config) {
  if (store.empty()) throw NoModelError();
  return classify_profile(build_profile(doc, config), store, metric);
}

std::string serialize_model(const ClassModel& model) {
  nlohmann::ordered_json j;
  j["label"] = model.class_label;
  j["n"] = model.profile.n;
  j["trained_doc_count"] = model.trained_doc_count;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : model.profile.entries) entries.push_back({e.gram, e.frequency});
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

ClassModel parse_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("malformed profile: ") + e.what(), e.byte);
  }
  try {
    ClassModel model;
    model.class_label = j.at("label").get<std::string>();
    check_label(model.class_label);
    model.profile.n = j.at("n").get<int>();
    check_n(model.profile.n);
    model.trained_doc_count = j.at("trained_doc_count").get<std::size_t>();
    model.profile.source_id = model.class_label;
    for (const auto& row : j.at("entries")) {
      if (!row.is_array() || row.size() != 2) throw InputError("profile entry must be [gram, freq]");
      ProfileEntry e{row[0].get<std::string>(), row[1].get<std::uint64_t>()};
      if (utf8::length(e.gram) != static_cast<std::size_t>(model.profile.n) || e.frequency == 0) {
        throw InputError("profile entry '" + e.gram + "' violates gram length or frequency");
      }
      if (!model.profile.entries.empty() && !rank_before(model.profile.entries.back(), e)) {
        throw InputError("profile entries out of rank order at '" + e.gram + "'");
      }
      model.profile.entries.push_back(std::move(e));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed profile: ") + e.what());
  }
}

ProfileStore::ProfileStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ProfileStore::path_for(std::string_view label) const {
  check_label(label);
  return dir_ / (std::string(label) + ".profile.json");
}

bool ProfileStore::contains(std::string_view label) const {
  return std::filesystem::exists(path_for(label));
}

void ProfileStore::save(const ClassModel& model, bool overwrite) const {
  const auto path = path_for(model.class_label);
  if (!overwrite && std::filesystem::exists(path)) throw StoreConflictError(model.class_label);
  std::filesystem::create_directories(dir_);
  io::write_file_atomic(path, serialize_model(model));
}

std::vector<ClassModel> ProfileStore::load_all() const {
  std::vector<ClassModel> models;
  if (!std::filesystem::is_directory(dir_)) return models;
  constexpr std::string_view kSuffix = ".profile.json";
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.size() <= kSuffix.size() || !name.ends_with(kSuffix)) continue;
    ClassModel model = parse_model(io::read_file(entry.path()));
    if (model.class_label != name.substr(0, name.size() - kSuffix.size())) {
      throw InputError("profile file '" + name + "' holds label '" + model.class_label + "'");
    }
    models.push_back(std::move(model));
  }
  std::sort(models.begin(), models.end(),
            [](const ClassModel& a, const ClassModel& b) { return a.class_label < b.class_label; });
  return models;
}

}  // namespace arabidx
