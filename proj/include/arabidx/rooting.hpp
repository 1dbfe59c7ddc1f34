#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arabidx {

// Letter weights for root extraction. Unlisted letters get default_weight.
class WeightTable {
 public:
  // The levels a table file may use.
  static constexpr std::array<double, 6> kLevels{5.0, 3.5, 3.0, 2.0, 1.0, 0.0};

  WeightTable() = default;

  // LETTER<TAB>WEIGHT lines; '#' comments. Weights must be one of kLevels.
  static WeightTable parse(std::string_view text);
  static WeightTable load(const std::string& path);
  static WeightTable builtin();

  // Programmatic tables accept any finite non-negative weight.
  void set(char32_t letter, double weight);
  double weight_of(char32_t letter) const;
  double default_weight() const noexcept { return default_weight_; }
  const std::map<char32_t, double>& weights() const noexcept { return weights_; }

  WeightTable scaled(double factor) const;

  bool operator==(const WeightTable&) const = default;

 private:
  std::map<char32_t, double> weights_;
  double default_weight_ = 0.0;
};

// rank(i, len) for a zero-based letter position i in a word of len letters.
//   positional: i + 1
//   custom:     a * (i + 1) + b * len + c
struct RankRule {
  enum class Kind { positional, custom };
  Kind kind = Kind::positional;
  std::array<double, 3> params{1.0, 0.0, 0.0};

  // Throws ConfigError when the rank would be non-positive.
  double rank(std::size_t position, std::size_t length) const;

  // "positional" or "custom:a,b,c".
  static RankRule parse(std::string_view text);
  std::string describe() const;

  bool operator==(const RankRule&) const = default;
};

struct LetterProduct {
  std::string letter;
  std::size_t position = 0;
  double weight = 0.0;
  double rank = 0.0;
  double product = 0.0;

  bool operator==(const LetterProduct&) const = default;
};

struct RootResult {
  std::string word;
  std::string root;
  std::vector<std::size_t> positions;  // selected letter positions, ascending
  std::vector<LetterProduct> products;
  bool too_short = false;  // word shorter than root_len; root == word

  bool operator==(const RootResult&) const = default;
};

struct RootingConfig {
  WeightTable table = WeightTable::builtin();
  RankRule rule;
  std::size_t root_len = 3;
};

// Keeps the root_len letters with the smallest weight * rank products,
// earlier positions winning ties, in original word order.
RootResult extract_root(std::string_view word, const WeightTable& table, const RankRule& rule,
                        std::size_t root_len = 3);
RootResult extract_root(std::string_view word, const RootingConfig& config);

// Root -> member terms in first-seen order; each distinct term appears once.
std::map<std::string, std::vector<std::string>> group_by_root(std::span<const std::string> terms,
                                                              const RootingConfig& config);

}  // namespace arabidx
