// Serial reference vs OpenMP kernels. Arg(0) is serial, Arg(n) runs parallel with n threads.

#include <benchmark/benchmark.h>

#include "arabidx/batch.hpp"
#include "support/synthetic.hpp"

using namespace arabidx;

namespace {

const std::vector<RawDocument>& raws() {
  static const auto docs = [] {
    const auto corpus = testing::make_class_corpus(99, 40, 0, 2000);
    std::vector<RawDocument> out;
    for (std::size_t c = 0; c < corpus.labels.size(); ++c) {
      for (std::size_t d = 0; d < corpus.train[c].size(); ++d) {
        out.push_back({corpus.labels[c] + std::to_string(d), corpus.train[c][d], {}, {}});
      }
    }
    return out;
  }();
  return docs;
}

const NormalizationConfig& norm() {
  static const auto config = [] {
    NormalizationConfig c;
    c.stopwords = default_stoplist();
    return c;
  }();
  return config;
}

const std::vector<NormalizedDocument>& docs() {
  static const auto out = batch::serial::normalize(raws(), norm(), PaginationRule{});
  return out;
}

ProfileConfig whole_document() {
  ProfileConfig config;
  config.word_limit = std::nullopt;
  return config;
}

void BM_normalize(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = jobs == 0 ? batch::serial::normalize(raws(), norm(), PaginationRule{})
                         : batch::parallel::normalize(raws(), norm(), PaginationRule{}, jobs);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(raws().size()));
}

void BM_build_profiles(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const auto config = whole_document();
  for (auto _ : state) {
    auto out = jobs == 0 ? batch::serial::build_profiles(docs(), config)
                         : batch::parallel::build_profiles(docs(), config, jobs);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs().size()));
}

void BM_train_class(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const auto config = whole_document();
  for (auto _ : state) {
    auto out = jobs == 0 ? batch::serial::train_class(docs(), "all", config)
                         : batch::parallel::train_class(docs(), "all", config, jobs);
    benchmark::DoNotOptimize(out);
  }
}

void BM_classify(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const ProfileConfig config;
  std::vector<ClassModel> store;
  for (std::size_t c = 0; c < 3; ++c) {
    std::span<const NormalizedDocument> slice(docs().data() + c * 40, 40);
    store.push_back(batch::serial::train_class(slice, "c" + std::to_string(c), config));
  }
  for (auto _ : state) {
    auto out = jobs == 0 ? batch::serial::classify(docs(), store, Metric::manhattan, config)
                         : batch::parallel::classify(docs(), store, Metric::manhattan, config, jobs);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs().size()));
}

void BM_book_indexes(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  BookIndexOptions options;
  options.group_roots = true;
  options.allow_empty = true;
  for (auto _ : state) {
    auto out = jobs == 0 ? batch::serial::build_book_indexes(docs(), options)
                         : batch::parallel::build_book_indexes(docs(), options, jobs);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_normalize)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_build_profiles)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_train_class)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_classify)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_book_indexes)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
