#include "arabidx/batch.hpp"

#include <omp.h>

#include <exception>
#include <optional>

#include "arabidx/error.hpp"

namespace arabidx::batch {

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

// out[i] = fn(i) for i in [0, n), in parallel. Exceptions are captured per
// slot and the lowest-indexed one is rethrown after the loop.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t n, int jobs, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[i].emplace(fn(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

int default_jobs() { return omp_get_max_threads(); }

namespace serial {

std::vector<NormalizedDocument> normalize(std::span<const RawDocument> raws,
                                          const NormalizationConfig& config,
                                          const PaginationRule& rule) {
  std::vector<NormalizedDocument> out;
  out.reserve(raws.size());
  for (const RawDocument& raw : raws) out.push_back(normalize_document(raw, config, rule));
  return out;
}

std::vector<NGramProfile> build_profiles(std::span<const NormalizedDocument> docs,
                                         const ProfileConfig& config) {
  std::vector<NGramProfile> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(build_profile(doc, config));
  return out;
}

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config) {
  return arabidx::train_class(docs, std::move(label), config);
}

std::vector<ClassificationResult> classify(std::span<const NormalizedDocument> docs,
                                           std::span<const ClassModel> store, Metric metric,
                                           const ProfileConfig& config) {
  if (store.empty()) throw NoModelError();
  std::vector<ClassificationResult> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(arabidx::classify(doc, store, metric, config));
  return out;
}

std::vector<BookIndex> build_book_indexes(std::span<const NormalizedDocument> docs,
                                          const BookIndexOptions& options) {
  std::vector<BookIndex> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(build_book_index(doc, options));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<NormalizedDocument> normalize(std::span<const RawDocument> raws,
                                          const NormalizationConfig& config,
                                          const PaginationRule& rule, int jobs) {
  return map_indexed<NormalizedDocument>(
      raws.size(), jobs, [&](std::size_t i) { return normalize_document(raws[i], config, rule); });
}

std::vector<NGramProfile> build_profiles(std::span<const NormalizedDocument> docs,
                                         const ProfileConfig& config, int jobs) {
  return map_indexed<NGramProfile>(docs.size(), jobs,
                                   [&](std::size_t i) { return build_profile(docs[i], config); });
}

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config, int jobs) {
  config.validate();
  if (docs.empty()) throw InputError("cannot train class '" + label + "' from zero documents");
  GramCounts pooled;
  const auto count = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel num_threads(thread_count(jobs))
  {
    GramCounts local;
#pragma omp for schedule(dynamic) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      count_ngrams(docs[static_cast<std::size_t>(i)], config, local);
    }
#pragma omp critical(arabidx_pool_counts)
    for (auto& [gram, freq] : local) pooled[gram] += freq;
  }
  return model_from_counts(pooled, docs.size(), std::move(label), config);
}

std::vector<ClassificationResult> classify(std::span<const NormalizedDocument> docs,
                                           std::span<const ClassModel> store, Metric metric,
                                           const ProfileConfig& config, int jobs) {
  if (store.empty()) throw NoModelError();
  return map_indexed<ClassificationResult>(docs.size(), jobs, [&](std::size_t i) {
    return arabidx::classify(docs[i], store, metric, config);
  });
}

std::vector<BookIndex> build_book_indexes(std::span<const NormalizedDocument> docs,
                                          const BookIndexOptions& options, int jobs) {
  return map_indexed<BookIndex>(docs.size(), jobs,
                                [&](std::size_t i) { return build_book_index(docs[i], options); });
}

}  // namespace parallel

}  // namespace arabidx::batch
