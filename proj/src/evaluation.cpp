#include "arabidx/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

#include "arabidx/error.hpp"

namespace arabidx {

namespace {

using Key = std::pair<std::string, std::uint32_t>;

std::set<Key> keys_of(const BookIndex& index, EvalMode mode, const RootingConfig* roots) {
  std::set<Key> keys;
  for (const IndexEntry& e : index.entries) {
    std::string term = roots ? extract_root(e.term, *roots).root : e.term;
    if (mode == EvalMode::term_level) {
      keys.emplace(std::move(term), 0);
    } else {
      for (std::uint32_t page : e.pages) keys.emplace(term, page);
    }
  }
  return keys;
}

}  // namespace

std::string_view to_string(EvalMode mode) { return mode == EvalMode::term_level ? "term" : "page"; }

EvalMode parse_eval_mode(std::string_view name) {
  if (name == "term" || name == "term_level") return EvalMode::term_level;
  if (name == "page" || name == "page_level") return EvalMode::page_level;
  throw ConfigError("unknown evaluation mode '" + std::string(name) + "'");
}

std::optional<double> precision(std::uint64_t tp, std::uint64_t fp) {
  if (tp + fp == 0) return std::nullopt;
  return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

std::optional<double> recall(std::uint64_t tp, std::uint64_t fn) {
  if (tp + fn == 0) return std::nullopt;
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

EvalReport compare_index(const BookIndex& automatic, const GoldIndex& gold, EvalMode mode,
                         const RootingConfig* match_roots) {
  if (automatic.doc_id != gold.doc_id) throw IdentityError(gold.doc_id, automatic.doc_id);
  const auto predicted = keys_of(automatic, mode, match_roots);
  const auto reference = keys_of(gold, mode, match_roots);

  EvalReport report;
  report.doc_id = automatic.doc_id;
  report.mode = mode;
  for (const Key& k : predicted) {
    if (reference.contains(k)) {
      ++report.tp;
    } else {
      ++report.fp;
    }
  }
  report.fn = reference.size() - report.tp;
  report.precision = precision(report.tp, report.fp);
  report.recall = recall(report.tp, report.fn);
  return report;
}

EvalSummary aggregate(std::span<const EvalReport> reports) {
  if (reports.empty()) throw EmptyAggregateError();
  EvalSummary s;
  s.documents = reports.size();
  double p_sum = 0.0;
  double r_sum = 0.0;
  std::size_t p_n = 0;
  std::size_t r_n = 0;
  for (const EvalReport& r : reports) {
    s.tp += r.tp;
    s.fp += r.fp;
    s.fn += r.fn;
    if (r.precision) {
      p_sum += *r.precision;
      ++p_n;
    }
    if (r.recall) {
      r_sum += *r.recall;
      ++r_n;
    }
  }
  if (p_n > 0) s.macro_precision = p_sum / static_cast<double>(p_n);
  if (r_n > 0) s.macro_recall = r_sum / static_cast<double>(r_n);
  s.micro_precision = precision(s.tp, s.fp);
  s.micro_recall = recall(s.tp, s.fn);
  return s;
}

std::string format_ratio(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *value);
  return buf;
}

}  // namespace arabidx
