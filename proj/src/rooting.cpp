#include "arabidx/rooting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "arabidx/error.hpp"
#include "arabidx/io.hpp"
#include "arabidx/utf8.hpp"
#include "defaults_data.hpp"

namespace arabidx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, std::string_view what) {
  // from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

WeightTable WeightTable::parse(std::string_view text) {
  utf8::validate(text);
  WeightTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ConfigError("weight table line " + std::to_string(line_no) + ": expected LETTER<TAB>WEIGHT");
    }
    const std::u32string letter = utf8::decode(trim(line.substr(0, tab)));
    if (letter.size() != 1 || !is_arabic_letter(letter[0])) {
      throw ConfigError("weight table line " + std::to_string(line_no) + ": not a single Arabic letter");
    }
    const double weight = parse_number(trim(line.substr(tab + 1)), "weight");
    if (std::find(kLevels.begin(), kLevels.end(), weight) == kLevels.end()) {
      throw ConfigError("weight table line " + std::to_string(line_no) +
                        ": weight must be one of 5, 3.5, 3, 2, 1, 0");
    }
    table.set(letter[0], weight);
  }
  return table;
}

WeightTable WeightTable::load(const std::string& path) { return parse(io::read_file(path)); }

WeightTable WeightTable::builtin() { return parse(data::kDefaultWeights); }

void WeightTable::set(char32_t letter, double weight) {
  if (!is_arabic_letter(letter)) throw ConfigError("weight key must be an Arabic letter");
  if (!std::isfinite(weight) || weight < 0.0) throw ConfigError("weight must be finite and non-negative");
  weights_[letter] = weight;
}

double WeightTable::weight_of(char32_t letter) const {
  const auto it = weights_.find(letter);
  return it == weights_.end() ? default_weight_ : it->second;
}

WeightTable WeightTable::scaled(double factor) const {
  if (!std::isfinite(factor) || factor <= 0.0) throw ConfigError("scale factor must be positive");
  WeightTable out = *this;
  for (auto& [letter, weight] : out.weights_) weight *= factor;
  out.default_weight_ *= factor;
  return out;
}

double RankRule::rank(std::size_t position, std::size_t length) const {
  const auto i = static_cast<double>(position + 1);
  double r = i;
  if (kind == Kind::custom) {
    r = params[0] * i + params[1] * static_cast<double>(length) + params[2];
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ConfigError("rank rule " + describe() + " yields non-positive rank at position " +
                      std::to_string(position) + " of " + std::to_string(length));
  }
  return r;
}

RankRule RankRule::parse(std::string_view text) {
  if (text == "positional") return RankRule{};
  constexpr std::string_view kCustom = "custom:";
  if (text.starts_with(kCustom)) {
    RankRule rule;
    rule.kind = Kind::custom;
    std::string_view rest = text.substr(kCustom.size());
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t comma = rest.find(',');
      if ((k < 2) == (comma == std::string_view::npos)) {
        throw ConfigError("custom rank rule needs exactly three numbers: custom:a,b,c");
      }
      rule.params[k] = parse_number(trim(rest.substr(0, comma)), "rank parameter");
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return rule;
  }
  throw ConfigError("unknown rank rule '" + std::string(text) + "'");
}

std::string RankRule::describe() const {
  if (kind == Kind::positional) return "positional";
  std::ostringstream out;
  out << "custom:" << params[0] << ',' << params[1] << ',' << params[2];
  return out.str();
}

RootResult extract_root(std::string_view word, const WeightTable& table, const RankRule& rule,
                        std::size_t root_len) {
  if (root_len == 0) throw ConfigError("root length must be positive");
  const std::u32string letters = utf8::decode(word);
  RootResult result;
  result.word = std::string(word);
  result.products.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    LetterProduct lp;
    utf8::append(lp.letter, letters[i]);
    lp.position = i;
    lp.weight = table.weight_of(letters[i]);
    lp.rank = rule.rank(i, letters.size());
    lp.product = lp.weight * lp.rank;
    result.products.push_back(std::move(lp));
  }

  if (letters.size() <= root_len) {
    result.too_short = letters.size() < root_len;
    result.root = result.word;
    result.positions.resize(letters.size());
    std::iota(result.positions.begin(), result.positions.end(), std::size_t{0});
    return result;
  }

  std::vector<std::size_t> order(letters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.products[a].product < result.products[b].product;
  });
  order.resize(root_len);
  std::sort(order.begin(), order.end());
  for (std::size_t pos : order) utf8::append(result.root, letters[pos]);
  result.positions = std::move(order);
  return result;
}

RootResult extract_root(std::string_view word, const RootingConfig& config) {
  return extract_root(word, config.table, config.rule, config.root_len);
}

std::map<std::string, std::vector<std::string>> group_by_root(std::span<const std::string> terms,
                                                              const RootingConfig& config) {
  std::map<std::string, std::vector<std::string>> groups;
  std::set<std::string_view> seen;
  for (const std::string& term : terms) {
    if (!seen.insert(term).second) continue;
    groups[extract_root(term, config).root].push_back(term);
  }
  return groups;
}

}  // namespace arabidx
