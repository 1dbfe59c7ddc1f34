#include <random>

#include "arabidx/error.hpp"
#include "arabidx/rooting.hpp"
#include "arabidx/utf8.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace arabidx;
namespace oracle = arabidx::testing::oracle;

namespace {

// Explicit test table, independent of the bundled default.
WeightTable test_table() {
  return WeightTable::parse(
      "ا\t5\n"
      "و\t3.5\n"
      "ي\t3\n"
      "ت\t2\n"
      "م\t2\n"
      "ن\t1\n"
      "س\t1\n");
}

}  // namespace

TEST_CASE("weight table parsing") {
  const auto table = test_table();
  CHECK(table.weight_of(U'ا') == 5.0);
  CHECK(table.weight_of(U'و') == 3.5);
  CHECK(table.weight_of(U'ك') == 0.0);
  CHECK_THROWS_AS(WeightTable::parse("ا\t4\n"), ConfigError);
  CHECK_THROWS_AS(WeightTable::parse("ا 5\n"), ConfigError);
  CHECK_THROWS_AS(WeightTable::parse("ab\t5\n"), ConfigError);
  CHECK_NOTHROW(WeightTable::parse("# comment\n\nا\t0\n"));

  const auto builtin = WeightTable::builtin();
  CHECK(builtin.weight_of(U'ا') == 5.0);
  CHECK(builtin.weight_of(U'ل') == 1.0);
  for (const auto& [letter, w] : builtin.weights()) {
    CHECK(std::find(WeightTable::kLevels.begin(), WeightTable::kLevels.end(), w) != WeightTable::kLevels.end());
  }
}

TEST_CASE("rank rules") {
  const RankRule positional;
  CHECK(positional.rank(0, 5) == 1.0);
  CHECK(positional.rank(4, 5) == 5.0);
  const auto custom = RankRule::parse("custom:2,0.5,-1");
  CHECK(custom.rank(0, 4) == doctest::Approx(2.0 + 2.0 - 1.0));
  CHECK(custom.describe() == "custom:2,0.5,-1");
  CHECK_THROWS_AS(RankRule::parse("custom:1,2"), ConfigError);
  CHECK_THROWS_AS(RankRule::parse("custom:1,2,3,4"), ConfigError);
  CHECK_THROWS_AS(RankRule::parse("length"), ConfigError);
  CHECK_THROWS_AS(RankRule::parse("custom:-1,0,0").rank(0, 3), ConfigError);
}

TEST_CASE("extract_root selects the smallest products in word order") {
  // Letters weighted [5,0,0,2,1] under the test table: ا ك ب م ن.
  const auto r = extract_root("اكبمن", test_table(), RankRule{}, 3);
  std::vector<double> products;
  for (const auto& p : r.products) products.push_back(p.product);
  CHECK(products == std::vector<double>{5, 0, 0, 8, 5});
  CHECK(r.positions == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.root == "اكب");
  CHECK_FALSE(r.too_short);
  for (const auto& p : r.products) CHECK(p.product == p.weight * p.rank);

  // All-zero weights: the first root_len letters.
  CHECK(extract_root("كبدرز", test_table(), RankRule{}, 3).root == "كبد");
  CHECK(extract_root("كتب", test_table(), RankRule{}, 3).root == "كتب");

  const auto short_word = extract_root("كت", test_table(), RankRule{}, 3);
  CHECK(short_word.too_short);
  CHECK(short_word.root == "كت");

  CHECK(extract_root("مكتوب", test_table(), RankRule{}, 4).root == "مكتب");
}

TEST_CASE("extract_root agrees with exhaustive subset enumeration") {
  const auto table = test_table();
  std::vector<char32_t> alphabet{U'ا', U'و', U'ي', U'ت', U'م', U'ن', U'س', U'ك', U'ب', U'ر'};
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::string word = testing::random_word(rng, alphabet, 3, 9);
    const auto r = extract_root(word, table, RankRule{}, 3);
    std::vector<double> products;
    const auto letters = utf8::decode(word);
    for (std::size_t k = 0; k < letters.size(); ++k) products.push_back(table.weight_of(letters[k]) * (k + 1.0));
    const auto expected = oracle::argmin_subset(products, 3);
    CHECK(r.positions == expected);
    std::u32string root;
    for (auto p : expected) root.push_back(letters[p]);
    CHECK(r.root == utf8::encode(root));
  }
}

TEST_CASE("selection is invariant under weight scaling") {
  const auto table = test_table();
  std::vector<char32_t> alphabet{U'ا', U'و', U'ي', U'ت', U'م', U'ن', U'س', U'ك'};
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::string word = testing::random_word(rng, alphabet, 3, 8);
    const auto base = extract_root(word, table, RankRule{});
    for (double factor : {0.5, 2.0, 8.0}) {
      CHECK(extract_root(word, table.scaled(factor), RankRule{}).positions == base.positions);
    }
  }
}

TEST_CASE("group_by_root") {
  RootingConfig config;
  config.table = test_table();
  // Both reduce to "كتب" under the test table.
  const std::vector<std::string> terms{"كتاب", "كاتب", "كتاب", "درس"};
  const auto groups = group_by_root(terms, config);
  REQUIRE(extract_root("كتاب", config).root == extract_root("كاتب", config).root);
  CHECK(groups.size() == 2);
  CHECK(groups.at(extract_root("كتاب", config).root) == std::vector<std::string>{"كتاب", "كاتب"});
  CHECK(group_by_root(std::vector<std::string>{}, config).empty());

  const std::vector<std::string> distinct{"كبد", "رزق", "فلح"};
  const auto singles = group_by_root(distinct, config);
  CHECK(singles.size() == 3);
  for (const auto& [root, members] : singles) CHECK(members.size() == 1);
}
