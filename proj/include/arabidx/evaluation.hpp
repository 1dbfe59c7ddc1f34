#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "arabidx/book_index.hpp"
#include "arabidx/rooting.hpp"

namespace arabidx {

// Gold indexes share the BookIndex file format.
using GoldIndex = BookIndex;

enum class EvalMode { term_level, page_level };

std::string_view to_string(EvalMode mode);
EvalMode parse_eval_mode(std::string_view name);

// precision/recall are nullopt when their denominator is zero.
struct EvalReport {
  std::string doc_id;
  EvalMode mode = EvalMode::term_level;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::optional<double> precision;
  std::optional<double> recall;

  bool operator==(const EvalReport&) const = default;
};

struct EvalSummary {
  std::size_t documents = 0;
  // Means over the documents where the value is defined.
  std::optional<double> macro_precision;
  std::optional<double> macro_recall;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::optional<double> micro_precision;
  std::optional<double> micro_recall;
};

std::optional<double> precision(std::uint64_t tp, std::uint64_t fp);
std::optional<double> recall(std::uint64_t tp, std::uint64_t fn);

// When match_roots is set, terms are compared by extracted root instead of surface.
EvalReport compare_index(const BookIndex& automatic, const GoldIndex& gold, EvalMode mode,
                         const RootingConfig* match_roots = nullptr);

// Throws EmptyAggregateError on an empty span.
EvalSummary aggregate(std::span<const EvalReport> reports);

// "0.7000" or "n/a".
std::string format_ratio(const std::optional<double>& value);

}  // namespace arabidx
