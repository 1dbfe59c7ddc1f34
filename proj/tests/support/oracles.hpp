#pragma once

// Brute-force reference computations. Each one is written independently of
// the library code path it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arabidx/normalize.hpp"
#include "arabidx/utf8.hpp"

namespace arabidx::testing::oracle {

// One-pass table filter: letters kept, marks dropped, anything else a separator.
inline std::string strip(const std::string& text) {
  static const auto table = [] {
    // 0 = separator, 1 = keep, 2 = drop
    std::vector<unsigned char> t(0x10000, 0);
    for (char32_t cp = 0x0621; cp <= 0x063A; ++cp) t[cp] = 1;
    for (char32_t cp = 0x0641; cp <= 0x064A; ++cp) t[cp] = 1;
    for (char32_t cp = 0x064B; cp <= 0x065F; ++cp) t[cp] = 2;
    t[0x0640] = 2;
    t[0x0670] = 2;
    return t;
  }();
  std::u32string out;
  for (char32_t cp : utf8::decode(text)) {
    const unsigned char cls = cp < table.size() ? table[cp] : 0;
    if (cls == 2) continue;
    if (cls == 1) {
      out.push_back(cp);
    } else if (!out.empty() && out.back() != U' ') {
      out.push_back(U' ');
    }
  }
  while (!out.empty() && out.back() == U' ') out.pop_back();
  return utf8::encode(out);
}

inline std::size_t count_runs(const std::string& text) {
  std::size_t runs = 0;
  bool in_run = false;
  for (char c : text) {
    if (c != ' ' && !in_run) ++runs;
    in_run = c != ' ';
  }
  return runs;
}

// Counts each candidate gram by scanning every window of every token.
inline std::map<std::string, std::uint64_t> gram_counts(const std::vector<std::string>& tokens, int n) {
  std::vector<std::u32string> words;
  for (const auto& t : tokens) words.push_back(utf8::decode(t));
  std::set<std::u32string> candidates;
  for (const auto& w : words) {
    for (std::size_t i = 0; i + n <= w.size(); ++i) candidates.insert(w.substr(i, n));
  }
  std::map<std::string, std::uint64_t> counts;
  for (const auto& g : candidates) {
    std::uint64_t c = 0;
    for (const auto& w : words) {
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        bool same = true;
        for (int k = 0; k < n && same; ++k) same = w[i + k] == g[k];
        c += same ? 1 : 0;
      }
    }
    counts[utf8::encode(g)] = c;
  }
  return counts;
}

// Full sort then truncate.
inline std::vector<std::pair<std::string, std::uint64_t>> ranked(const std::map<std::string, std::uint64_t>& counts,
                                                                 std::size_t keep) {
  std::vector<std::pair<std::string, std::uint64_t>> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (v.size() > keep) v.resize(keep);
  return v;
}

inline std::uint64_t manhattan(const std::vector<std::string>& p, const std::vector<std::string>& q,
                               std::uint64_t penalty) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (p[i] == q[j]) {
        total += i > j ? i - j : j - i;
        found = true;
      }
    }
    if (!found) total += penalty;
  }
  return total;
}

// Among all k-subsets of positions, the one with the smallest product sum;
// ties go to the lexicographically smallest position tuple. Products must be
// exactly representable so sums are exact.
inline std::vector<std::size_t> argmin_subset(const std::vector<double>& products, std::size_t k) {
  const std::size_t n = products.size();
  std::vector<std::size_t> best;
  double best_sum = 0.0;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  // prev_permutation over a descending-sorted mask visits subsets in lexicographic order.
  do {
    std::vector<std::size_t> pos;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) {
        pos.push_back(i);
        sum += products[i];
      }
    }
    if (best.empty() || sum < best_sum || (sum == best_sum && pos < best)) {
      best = pos;
      best_sum = sum;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

// occurrence[doc][term] = ordinals, from raw token streams.
using Occurrences = std::map<std::string, std::map<std::string, std::vector<std::uint64_t>>>;

inline Occurrences occurrences(const std::vector<NormalizedDocument>& docs) {
  Occurrences occ;
  for (const auto& d : docs) {
    for (std::size_t i = 0; i < d.tokens.size(); ++i) occ[d.doc_id][d.tokens[i].surface].push_back(i);
  }
  return occ;
}

// Sliding-window phrase scan over each document's token list.
inline std::map<std::string, std::vector<std::uint64_t>> phrase_scan(const std::vector<NormalizedDocument>& docs,
                                                                     const std::vector<std::string>& phrase) {
  std::map<std::string, std::vector<std::uint64_t>> hits;
  for (const auto& d : docs) {
    for (std::size_t s = 0; s + phrase.size() <= d.tokens.size(); ++s) {
      bool ok = true;
      for (std::size_t k = 0; k < phrase.size() && ok; ++k) ok = d.tokens[s + k].surface == phrase[k];
      if (ok) hits[d.doc_id].push_back(s);
    }
  }
  return hits;
}

// Pages on which term occurs, scanning page by page.
inline std::vector<std::uint32_t> pages_of(const NormalizedDocument& doc, const std::string& term) {
  std::vector<std::uint32_t> pages;
  for (std::uint32_t p = 1; p <= doc.page_count; ++p) {
    for (const auto& t : doc.tokens) {
      if (t.page == p && t.surface == term) {
        pages.push_back(p);
        break;
      }
    }
  }
  return pages;
}

}  // namespace arabidx::testing::oracle
