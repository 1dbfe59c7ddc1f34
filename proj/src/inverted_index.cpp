#include "arabidx/inverted_index.hpp"

#include <algorithm>
#include <cstdio>

#include "arabidx/error.hpp"
#include "arabidx/io.hpp"
#include "json.hpp"

namespace arabidx {

namespace {

bool posting_before(const Posting& p, std::string_view doc_id) { return p.doc_id < doc_id; }

}  // namespace

std::string_view to_string(IndexVariant variant) {
  return variant == IndexVariant::positional ? "positional" : "document_level";
}

IndexVariant parse_variant(std::string_view name) {
  if (name == "positional") return IndexVariant::positional;
  if (name == "document_level" || name == "document") return IndexVariant::document_level;
  throw ConfigError("unknown index variant '" + std::string(name) + "'");
}

std::string content_fingerprint(const NormalizedDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const Token& tok : doc.tokens) {
    for (char c : tok.surface) mix(static_cast<unsigned char>(c));
    mix(0x1F);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void InvertedIndex::add_document(const NormalizedDocument& doc) {
  if (doc.doc_id.empty()) throw InputError("document id must not be empty");
  if (registry_.contains(doc.doc_id)) throw DuplicateDocumentError(doc.doc_id, doc.doc_id);
  std::string fp = content_fingerprint(doc);
  if (auto it = fingerprints_.find(fp); it != fingerprints_.end()) {
    throw DuplicateDocumentError(doc.doc_id, it->second);
  }

  std::map<std::string_view, Posting> local;
  for (const Token& tok : doc.tokens) {
    Posting& p = local[tok.surface];
    ++p.term_frequency;
    if (variant_ == IndexVariant::positional) p.positions.push_back(tok.ordinal);
  }
  for (auto& [term, posting] : local) {
    posting.doc_id = doc.doc_id;
    auto& list = postings_[std::string(term)];
    auto at = std::lower_bound(list.begin(), list.end(), std::string_view(doc.doc_id), posting_before);
    list.insert(at, std::move(posting));
  }
  registry_.emplace(doc.doc_id, fp);
  fingerprints_.emplace(std::move(fp), doc.doc_id);
}

std::span<const Posting> InvertedIndex::query_term(std::string_view term) const {
  const auto it = postings_.find(term);
  if (it == postings_.end()) return {};
  return it->second;
}

std::vector<PhraseHit> InvertedIndex::query_phrase(std::span<const std::string> terms) const {
  if (variant_ != IndexVariant::positional) {
    throw UnsupportedVariantError("phrase queries need a positional index");
  }
  if (terms.size() < 2) throw ConfigError("a phrase query needs at least two terms");

  std::vector<std::span<const Posting>> lists;
  for (const std::string& t : terms) {
    auto list = query_term(t);
    if (list.empty()) return {};
    lists.push_back(list);
  }

  std::vector<PhraseHit> hits;
  for (const Posting& head : lists[0]) {
    std::vector<const Posting*> rest;
    for (std::size_t k = 1; k < lists.size(); ++k) {
      auto it = std::lower_bound(lists[k].begin(), lists[k].end(), std::string_view(head.doc_id),
                                 posting_before);
      if (it == lists[k].end() || it->doc_id != head.doc_id) break;
      rest.push_back(&*it);
    }
    if (rest.size() != lists.size() - 1) continue;

    PhraseHit hit{head.doc_id, {}};
    for (std::uint64_t start : head.positions) {
      bool ok = true;
      for (std::size_t k = 0; k < rest.size() && ok; ++k) {
        ok = std::binary_search(rest[k]->positions.begin(), rest[k]->positions.end(), start + k + 1);
      }
      if (ok) hit.starts.push_back(start);
    }
    if (!hit.starts.empty()) hits.push_back(std::move(hit));
  }
  return hits;
}

IndexStats InvertedIndex::stats() const {
  IndexStats s;
  s.variant = variant_;
  s.doc_count = registry_.size();
  s.term_count = postings_.size();
  for (const auto& [term, list] : postings_) {
    s.posting_count += list.size();
    for (const Posting& p : list) s.position_count += p.positions.size();
  }
  return s;
}

std::string InvertedIndex::serialize() const {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["variant"] = to_string(variant_);
  j["doc_count"] = registry_.size();
  auto registry = nlohmann::ordered_json::array();
  for (const auto& [doc_id, fp] : registry_) registry.push_back({doc_id, fp});
  j["registry"] = std::move(registry);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [term, list] : postings_) {
    auto rows = nlohmann::ordered_json::array();
    for (const Posting& p : list) {
      if (variant_ == IndexVariant::positional) {
        rows.push_back({p.doc_id, p.term_frequency, p.positions});
      } else {
        rows.push_back({p.doc_id, p.term_frequency});
      }
    }
    terms.push_back({term, std::move(rows)});
  }
  j["terms"] = std::move(terms);
  return j.dump(1) + "\n";
}

InvertedIndex InvertedIndex::deserialize(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("corrupt index file: ") + e.what(), e.byte);
  }

  auto fail = [](const std::string& what) -> LoadError { return LoadError("corrupt index file: " + what, 0); };
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kFormatVersion) {
      throw fail("format_version " + std::to_string(version) + " is not supported (expected " +
                 std::to_string(kFormatVersion) + ")");
    }
    InvertedIndex index(parse_variant(j.at("variant").get<std::string>()));
    const bool positional = index.variant_ == IndexVariant::positional;

    for (const auto& row : j.at("registry")) {
      auto doc_id = row.at(0).get<std::string>();
      auto fp = row.at(1).get<std::string>();
      if (!index.fingerprints_.emplace(fp, doc_id).second || !index.registry_.emplace(doc_id, fp).second) {
        throw fail("duplicate registry entry '" + doc_id + "'");
      }
    }
    if (j.at("doc_count").get<std::size_t>() != index.registry_.size()) {
      throw fail("doc_count does not match registry size");
    }

    for (const auto& term_row : j.at("terms")) {
      auto term = term_row.at(0).get<std::string>();
      std::vector<Posting> list;
      for (const auto& prow : term_row.at(1)) {
        Posting p;
        p.doc_id = prow.at(0).get<std::string>();
        p.term_frequency = prow.at(1).get<std::uint64_t>();
        if (positional) p.positions = prow.at(2).get<std::vector<std::uint64_t>>();
        if (!index.registry_.contains(p.doc_id)) throw fail("posting for unregistered '" + p.doc_id + "'");
        if (!list.empty() && !(list.back().doc_id < p.doc_id)) throw fail("postings out of order for '" + term + "'");
        if (p.term_frequency == 0) throw fail("zero term frequency for '" + term + "'");
        if (positional) {
          if (p.positions.size() != p.term_frequency ||
              std::adjacent_find(p.positions.begin(), p.positions.end(),
                                 [](auto a, auto b) { return a >= b; }) != p.positions.end()) {
            throw fail("inconsistent positions for '" + term + "'");
          }
        }
        list.push_back(std::move(p));
      }
      if (list.empty()) throw fail("empty posting list for '" + term + "'");
      if (!index.postings_.emplace(std::move(term), std::move(list)).second) {
        throw fail("duplicate term");
      }
    }
    return index;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
}

void InvertedIndex::persist(const std::filesystem::path& path) const {
  io::write_file_atomic(path, serialize());
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& path) {
  return deserialize(io::read_file(path));
}

}  // namespace arabidx
