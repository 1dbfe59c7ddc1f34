#pragma once

#include <span>
#include <string>
#include <vector>

#include "arabidx/book_index.hpp"
#include "arabidx/ngram.hpp"
#include "arabidx/normalize.hpp"

// Per-document batch stages. `serial` is the reference; `parallel` runs the
// same work under OpenMP and must produce identical results. When several
// documents fail, both rethrow the error of the lowest-indexed one.
namespace arabidx::batch {

namespace serial {

std::vector<NormalizedDocument> normalize(std::span<const RawDocument> raws,
                                          const NormalizationConfig& config,
                                          const PaginationRule& rule);

std::vector<NGramProfile> build_profiles(std::span<const NormalizedDocument> docs,
                                         const ProfileConfig& config);

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config);

std::vector<ClassificationResult> classify(std::span<const NormalizedDocument> docs,
                                           std::span<const ClassModel> store, Metric metric,
                                           const ProfileConfig& config);

std::vector<BookIndex> build_book_indexes(std::span<const NormalizedDocument> docs,
                                          const BookIndexOptions& options);

}  // namespace serial

namespace parallel {

// jobs <= 0 uses the OpenMP default thread count.
std::vector<NormalizedDocument> normalize(std::span<const RawDocument> raws,
                                          const NormalizationConfig& config,
                                          const PaginationRule& rule, int jobs = 0);

std::vector<NGramProfile> build_profiles(std::span<const NormalizedDocument> docs,
                                         const ProfileConfig& config, int jobs = 0);

ClassModel train_class(std::span<const NormalizedDocument> docs, std::string label,
                       const ProfileConfig& config, int jobs = 0);

std::vector<ClassificationResult> classify(std::span<const NormalizedDocument> docs,
                                           std::span<const ClassModel> store, Metric metric,
                                           const ProfileConfig& config, int jobs = 0);

std::vector<BookIndex> build_book_indexes(std::span<const NormalizedDocument> docs,
                                          const BookIndexOptions& options, int jobs = 0);

}  // namespace parallel

int default_jobs();

}  // namespace arabidx::batch
