#include "arabidx/book_index.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "arabidx/error.hpp"
#include "arabidx/io.hpp"
#include "json.hpp"

namespace arabidx {

namespace {

bool by_frequency(const TermStats& a, const TermStats& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.term < b.term;
}

std::vector<std::uint32_t> merge_pages(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string marker() {
  std::string m = "\n";
  m += kIndexSeparator;
  m += "\n";
  m += kIndexHeader;
  m += "\n";
  return m;
}

}  // namespace

void RankingBand::validate() const {
  if (!(high_cut >= 0.0 && high_cut < 1.0)) throw ConfigError("high_cut must lie in [0, 1)");
}

std::vector<TermStats> term_frequencies(const NormalizedDocument& doc) {
  std::unordered_map<std::string_view, std::size_t> slot;
  std::vector<TermStats> stats;
  for (const Token& tok : doc.tokens) {
    auto [it, fresh] = slot.try_emplace(tok.surface, stats.size());
    if (fresh) stats.push_back(TermStats{tok.surface, 0, {}});
    TermStats& s = stats[it->second];
    ++s.frequency;
    // Pages are non-decreasing in token order, so appending keeps them sorted.
    if (s.pages.empty() || s.pages.back() != tok.page) s.pages.push_back(tok.page);
  }
  std::sort(stats.begin(), stats.end(), by_frequency);
  return stats;
}

std::vector<TermStats> apply_band(std::span<const TermStats> stats, const RankingBand& band) {
  band.validate();
  // Guard against 0.07 * 100 == 7.000000000000001 style round-up.
  const auto top = static_cast<std::size_t>(
      std::ceil(band.high_cut * static_cast<double>(stats.size()) - 1e-9));
  std::vector<TermStats> kept;
  for (std::size_t i = std::min(top, stats.size()); i < stats.size(); ++i) {
    if (stats[i].frequency > band.low_min_freq) kept.push_back(stats[i]);
  }
  if (kept.empty()) {
    throw EmptyIndexError("no terms survive the frequency band (high_cut=" +
                          std::to_string(band.high_cut) +
                          ", min_freq=" + std::to_string(band.low_min_freq) + ")");
  }
  return kept;
}

BookIndex build_book_index(const NormalizedDocument& doc, const BookIndexOptions& options) {
  BookIndex index;
  index.doc_id = doc.doc_id;
  index.page_count = doc.page_count;
  index.band = options.band;
  index.grouped_by_root = options.group_roots;

  std::vector<TermStats> kept;
  try {
    kept = apply_band(term_frequencies(doc), options.band);
  } catch (const EmptyIndexError&) {
    if (!options.allow_empty) throw;
    return index;
  }

  if (!options.group_roots) {
    index.entries.reserve(kept.size());
    for (TermStats& s : kept) index.entries.push_back({std::move(s.term), std::move(s.pages)});
  } else {
    // kept is frequency-ordered, so the first member seen per root is the headword.
    std::map<std::string, IndexEntry> by_root;
    for (TermStats& s : kept) {
      const std::string root = extract_root(s.term, options.rooting).root;
      auto [it, fresh] = by_root.try_emplace(root, IndexEntry{s.term, {}});
      it->second.pages = merge_pages(it->second.pages, s.pages);
    }
    for (auto& [root, entry] : by_root) index.entries.push_back(std::move(entry));
  }
  std::sort(index.entries.begin(), index.entries.end(),
            [](const IndexEntry& a, const IndexEntry& b) { return a.term < b.term; });
  return index;
}

std::string render_index(const RawDocument& raw, const BookIndex& index) {
  if (raw.doc_id != index.doc_id) throw IdentityError(raw.doc_id, index.doc_id);
  std::string out = raw.text;
  out += marker();
  for (const IndexEntry& e : index.entries) {
    out += e.term;
    out += ':';
    for (std::size_t i = 0; i < e.pages.size(); ++i) {
      out += i == 0 ? " " : ", ";
      out += std::to_string(e.pages[i]);
    }
    out += '\n';
  }
  return out;
}

std::optional<std::string> strip_rendered_index(std::string_view rendered) {
  const std::size_t at = rendered.rfind(marker());
  if (at == std::string_view::npos) return std::nullopt;
  return std::string(rendered.substr(0, at));
}

std::string serialize_index(const BookIndex& index) {
  nlohmann::ordered_json j;
  j["doc_id"] = index.doc_id;
  j["page_count"] = index.page_count;
  j["grouped_by_root"] = index.grouped_by_root;
  j["band"] = {{"high_cut", index.band.high_cut}, {"low_min_freq", index.band.low_min_freq}};
  auto entries = nlohmann::ordered_json::array();
  for (const IndexEntry& e : index.entries) entries.push_back({e.term, e.pages});
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

BookIndex parse_index(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("malformed index file: ") + e.what(), e.byte);
  }
  try {
    BookIndex index;
    index.doc_id = j.at("doc_id").get<std::string>();
    if (j.contains("page_count")) index.page_count = j["page_count"].get<std::uint32_t>();
    if (j.contains("grouped_by_root")) index.grouped_by_root = j["grouped_by_root"].get<bool>();
    if (j.contains("band")) {
      index.band.high_cut = j["band"].at("high_cut").get<double>();
      index.band.low_min_freq = j["band"].at("low_min_freq").get<std::uint64_t>();
    }
    std::uint32_t max_page = 0;
    for (const auto& row : j.at("entries")) {
      if (!row.is_array() || row.size() != 2) throw InputError("index entry must be [term, [pages]]");
      IndexEntry e{row[0].get<std::string>(), row[1].get<std::vector<std::uint32_t>>()};
      std::sort(e.pages.begin(), e.pages.end());
      e.pages.erase(std::unique(e.pages.begin(), e.pages.end()), e.pages.end());
      if (e.pages.empty() || e.pages.front() == 0) {
        throw InputError("index entry '" + e.term + "' needs positive page numbers");
      }
      max_page = std::max(max_page, e.pages.back());
      index.entries.push_back(std::move(e));
    }
    if (!j.contains("page_count")) {
      index.page_count = std::max<std::uint32_t>(1, max_page);
    } else if (max_page > index.page_count) {
      throw InputError("page " + std::to_string(max_page) + " exceeds page_count");
    }
    std::sort(index.entries.begin(), index.entries.end(),
              [](const IndexEntry& a, const IndexEntry& b) { return a.term < b.term; });
    for (std::size_t i = 1; i < index.entries.size(); ++i) {
      if (index.entries[i].term == index.entries[i - 1].term) {
        throw InputError("duplicate index term '" + index.entries[i].term + "'");
      }
    }
    return index;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed index file: ") + e.what());
  }
}

BookIndex load_index(const std::string& path) { return parse_index(io::read_file(path)); }

}  // namespace arabidx
