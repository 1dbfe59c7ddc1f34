#include "arabidx/normalize.hpp"

#include <algorithm>

#include "arabidx/error.hpp"
#include "arabidx/utf8.hpp"
#include "defaults_data.hpp"

namespace arabidx {

namespace {

constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefHamzaAbove = 0x0623;
constexpr char32_t kAlefHamzaBelow = 0x0625;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kHeh = 0x0647;
constexpr char32_t kAlefMaqsura = 0x0649;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kLam = 0x0644;
constexpr char32_t kFormFeed = 0x000C;

constexpr std::u32string_view kRequiredSymbols = U".:;/\\-+?<>@$%&*()!~";

std::u32string fold(std::u32string word, const NormalizationConfig& config) {
  for (char32_t& cp : word) {
    if (config.fold_alef && (cp == kAlefHamzaAbove || cp == kAlefHamzaBelow || cp == kAlefMadda)) {
      cp = kAlef;
    } else if (config.fold_teh_marbuta && cp == kTehMarbuta) {
      cp = kHeh;
    } else if (config.fold_alef_maqsura && cp == kAlefMaqsura) {
      cp = kYeh;
    }
  }
  return word;
}

}  // namespace

std::set<char32_t> default_strip_chars() {
  std::set<char32_t> chars(kRequiredSymbols.begin(), kRequiredSymbols.end());
  for (char32_t cp : std::u32string_view(U",'\"`^_=|[]{}#")) chars.insert(cp);
  // Arabic comma, semicolon, question mark, full stop, percent and
  // decimal/thousands separators, plus guillemets and common dashes.
  for (char32_t cp : {0x060C, 0x061B, 0x061F, 0x06D4, 0x066A, 0x066B, 0x066C, 0x00AB, 0x00BB,
                      0x2013, 0x2014, 0x2026}) {
    chars.insert(cp);
  }
  return chars;
}

std::set<char32_t> default_diacritics() {
  std::set<char32_t> marks;
  for (char32_t cp = 0x064B; cp <= 0x0652; ++cp) marks.insert(cp);
  for (char32_t cp = 0x0653; cp <= 0x065F; ++cp) marks.insert(cp);
  marks.insert(0x0640);  // tatweel
  marks.insert(0x0670);  // superscript alef
  return marks;
}

void NormalizationConfig::validate() const {
  for (char32_t cp : kRequiredSymbols) {
    if (!strip_chars.contains(cp)) {
      std::string sym;
      utf8::append(sym, cp);
      throw ConfigError("strip_chars must contain '" + sym + "'");
    }
  }
  for (char32_t cp = 0x064B; cp <= 0x0652; ++cp) {
    if (!diacritics.contains(cp)) throw ConfigError("diacritic set must cover U+064B..U+0652");
  }
  if (!diacritics.contains(0x0640)) throw ConfigError("diacritic set must contain tatweel U+0640");
}

void PaginationRule::validate() const {
  if (mode != Mode::form_feed && words_per_page == 0) {
    throw ConfigError("words_per_page must be positive");
  }
}

std::string strip_noise(std::string_view text, const NormalizationConfig& config) {
  const std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (config.diacritics.contains(cp)) continue;
    if (is_arabic_letter(cp) && !config.strip_chars.contains(cp)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      utf8::append(out, cp);
    } else {
      // Everything else (punctuation, digits, Latin, whitespace) separates words.
      pending_space = true;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view cleaned) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    while (pos < cleaned.size() && cleaned[pos] == ' ') ++pos;
    const std::size_t start = pos;
    while (pos < cleaned.size() && cleaned[pos] != ' ') ++pos;
    if (pos > start) tokens.emplace_back(cleaned.substr(start, pos - start));
  }
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const std::set<std::string>& stopwords) {
  if (stopwords.empty()) return tokens;
  std::erase_if(tokens, [&](const std::string& t) { return stopwords.contains(t); });
  return tokens;
}

std::string fold_letters(std::string_view token, const NormalizationConfig& config) {
  if (!config.fold_alef && !config.fold_teh_marbuta && !config.fold_alef_maqsura) {
    return std::string(token);
  }
  return utf8::encode(fold(utf8::decode(token), config));
}

std::string strip_article(std::string_view token) {
  const std::u32string cps = utf8::decode(token);
  if (cps.size() >= 4 && cps[0] == kAlef && cps[1] == kLam) {
    return utf8::encode(std::u32string_view(cps).substr(2));
  }
  return std::string(token);
}

std::vector<std::string_view> split_pages(std::string_view text) {
  std::vector<std::string_view> pages;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (static_cast<char32_t>(text[i]) == kFormFeed) {
      pages.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  pages.push_back(text.substr(start));
  return pages;
}

NormalizedDocument normalize_document(const RawDocument& raw, const NormalizationConfig& config,
                                      const PaginationRule& rule) {
  rule.validate();

  std::set<std::string> stopwords;
  for (const std::string& w : config.stopwords) stopwords.insert(fold_letters(w, config));

  const auto pages = split_pages(raw.text);
  const bool use_breaks =
      rule.mode == PaginationRule::Mode::form_feed ||
      (rule.mode == PaginationRule::Mode::automatic && pages.size() > 1);

  NormalizedDocument doc;
  doc.doc_id = raw.doc_id;

  auto accept = [&](std::string surface, std::uint32_t page) {
    surface = fold_letters(surface, config);
    if (stopwords.contains(surface)) return;
    if (config.strip_definite_article) {
      surface = strip_article(surface);
      if (stopwords.contains(surface)) return;
    }
    const std::size_t ordinal = doc.tokens.size();
    doc.tokens.push_back(Token{std::move(surface), page, ordinal});
  };

  if (use_breaks) {
    for (std::size_t p = 0; p < pages.size(); ++p) {
      for (std::string& t : tokenize(strip_noise(pages[p], config))) {
        accept(std::move(t), static_cast<std::uint32_t>(p + 1));
      }
    }
    doc.page_count = static_cast<std::uint32_t>(pages.size());
  } else {
    for (std::string& t : tokenize(strip_noise(raw.text, config))) accept(std::move(t), 0);
    for (Token& tok : doc.tokens) {
      tok.page = static_cast<std::uint32_t>(tok.ordinal / rule.words_per_page + 1);
    }
    doc.page_count = doc.tokens.empty() ? 1 : doc.tokens.back().page;
  }
  return doc;
}

std::set<std::string> parse_stoplist(std::string_view text) {
  utf8::validate(text);
  std::set<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') words.emplace(line);
    pos = end + 1;
  }
  return words;
}

std::set<std::string> default_stoplist() { return parse_stoplist(data::kDefaultStoplist); }

}  // namespace arabidx
