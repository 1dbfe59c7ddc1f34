#include <random>

#include "arabidx/error.hpp"
#include "arabidx/normalize.hpp"
#include "arabidx/utf8.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace arabidx;
namespace oracle = arabidx::testing::oracle;

namespace {

const std::string kMixedSample =
    "ذهب الطالبُ إلى المدرسةِ صباحاً.\n"
    "The student went to school at 8:00 AM!\n"
    "\n"
    "قرأَ كتاباً عن التاريخ (الجزء 2) - وكتبَ ملخصاً؛ ثم عاد.\n"
    "\n"
    "Email: test@example.com ـــ النهايـــة";

// Random text mixing letters, marks, punctuation, digits and Latin.
std::string noisy_text(std::mt19937_64& rng, std::size_t len) {
  const std::u32string pool =
      U"ابتثجحخدذرزسشصضطظعغفقكلمنهويءآأؤإئىة"
      U"ًٌٍَُِّْـ"
      U".:;/\\-+?<>@$%&*()!~،؛؟0123456789٠١٢abcXYZ  \n\t\f";
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::u32string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(pool[pick(rng)]);
  return utf8::encode(s);
}

}  // namespace

TEST_CASE("strip_noise removes marks, symbols, digits and Latin") {
  const NormalizationConfig config;
  CHECK(strip_noise("كَتَبَ", config) == "كتب");
  CHECK(strip_noise("100% نجاح!", config) == "نجاح");
  CHECK(strip_noise("", config).empty());
  CHECK(strip_noise("كتب،الولد", config) == "كتب الولد");
}

TEST_CASE("strip_noise on a mixed Arabic/English sample") {
  const NormalizationConfig config;
  const std::string expected = "ذهب الطالب إلى المدرسة صباحا قرأ كتابا عن التاريخ الجزء وكتب ملخصا ثم عاد النهاية";
  CHECK(oracle::strip(kMixedSample) == expected);
  CHECK(strip_noise(kMixedSample, config) == expected);
}

TEST_CASE("strip_noise agrees with the table-lookup filter and is idempotent") {
  const NormalizationConfig config;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::string text = noisy_text(rng, 80);
    const std::string once = strip_noise(text, config);
    CHECK(once == oracle::strip(text));
    CHECK(strip_noise(once, config) == once);
    for (char32_t cp : utf8::decode(once)) CHECK((is_arabic_letter(cp) || cp == U' '));
  }
}

TEST_CASE("invalid UTF-8 is rejected with its byte offset") {
  const NormalizationConfig config;
  try {
    strip_noise(std::string("ab\xC3(", 4), config);
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(utf8::validate("\xED\xA0\x80"), DecodeError);  // surrogate
  CHECK_THROWS_AS(utf8::validate("\xC0\xAF"), DecodeError);      // overlong
  CHECK_THROWS_AS(utf8::validate("\xE0\xA4"), DecodeError);      // truncated
}

TEST_CASE("tokenize splits on single spaces") {
  CHECK(tokenize("ذهب الولد") == std::vector<std::string>{"ذهب", "الولد"});
  CHECK(tokenize("").empty());

  std::mt19937_64 rng(11);
  const auto vocab = testing::random_vocabulary(rng, testing::arabic_letters(), 80);
  std::string cleaned;
  for (int i = 0; i < 200; ++i) {
    if (i) cleaned += ' ';
    cleaned += vocab[static_cast<std::size_t>(i) % vocab.size()];
  }
  const auto tokens = tokenize(cleaned);
  CHECK(oracle::count_runs(cleaned) == 200);
  CHECK(tokens.size() == 200);
  std::string joined;
  for (std::size_t i = 0; i < tokens.size(); ++i) joined += (i ? " " : "") + tokens[i];
  CHECK(joined == cleaned);
}

TEST_CASE("remove_stopwords filters members and keeps order") {
  CHECK(remove_stopwords({"ذهب", "في", "البيت"}, {"في"}) == std::vector<std::string>{"ذهب", "البيت"});
  const std::vector<std::string> words{"ب", "ا", "ت"};
  CHECK(remove_stopwords(words, {}) == words);

  std::mt19937_64 rng(3);
  const auto vocab = testing::random_vocabulary(rng, testing::arabic_letters(), 200);
  const std::set<std::string> stoplist(vocab.begin(), vocab.begin() + 50);
  std::vector<std::string> stream;
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int i = 0; i < 1000; ++i) stream.push_back(vocab[pick(rng)]);
  const auto kept = remove_stopwords(stream, stoplist);
  for (const auto& t : kept) CHECK_FALSE(stoplist.contains(t));
  // Survivors are the non-stop tokens in original order.
  std::vector<std::string> expected;
  for (const auto& t : stream) {
    if (!stoplist.contains(t)) expected.push_back(t);
  }
  CHECK(kept == expected);
}

TEST_CASE("fold_letters applies each toggle and is idempotent") {
  NormalizationConfig config;
  CHECK(fold_letters("أحمد", config) == "أحمد");
  config.fold_alef = true;
  CHECK(fold_letters("أحمد", config) == "احمد");
  CHECK(fold_letters("إسلام", config) == "اسلام");
  CHECK(fold_letters("آمن", config) == "امن");
  config = {};
  config.fold_teh_marbuta = true;
  CHECK(fold_letters("مدرسة", config) == "مدرسه");
  config = {};
  config.fold_alef_maqsura = true;
  CHECK(fold_letters("مستشفى", config) == "مستشفي");

  config.fold_alef = config.fold_teh_marbuta = true;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::string w = testing::random_word(rng, testing::arabic_letters(), 1, 9);
    const std::string once = fold_letters(w, config);
    CHECK(fold_letters(once, config) == once);
    CHECK(fold_letters(w, NormalizationConfig{}) == w);
  }
}

TEST_CASE("definite article stripping is off by default") {
  NormalizationConfig config;
  RawDocument raw{"d", "الكتاب ال الولد", {}, {}};
  auto doc = normalize_document(raw, config);
  REQUIRE(doc.tokens.size() == 3);
  CHECK(doc.tokens[0].surface == "الكتاب");
  config.strip_definite_article = true;
  doc = normalize_document(raw, config);
  REQUIRE(doc.tokens.size() == 3);
  CHECK(doc.tokens[0].surface == "كتاب");
  CHECK(doc.tokens[1].surface == "ال");
  CHECK(doc.tokens[2].surface == "ولد");
}

TEST_CASE("synthetic pagination uses floor(ordinal / W) + 1") {
  std::mt19937_64 rng(1);
  const auto vocab = testing::random_vocabulary(rng, testing::arabic_letters(), 30);
  std::string text;
  for (int i = 0; i < 250; ++i) text += vocab[static_cast<std::size_t>(i) % vocab.size()] + " ";
  PaginationRule rule;
  rule.words_per_page = 100;
  const auto doc = normalize_document({"d", text, {}, {}}, NormalizationConfig{}, rule);
  REQUIRE(doc.tokens.size() == 250);
  CHECK(doc.page_count == 3);
  CHECK(doc.tokens[99].page == 1);
  CHECK(doc.tokens[100].page == 2);
  CHECK(doc.tokens[249].page == 3);

  rule.words_per_page = 0;
  CHECK_THROWS_AS(normalize_document({"d", text, {}, {}}, NormalizationConfig{}, rule), ConfigError);
}

TEST_CASE("form feeds delimit pages") {
  const auto doc = normalize_document({"d", "ا ب\fت\fث ج", {}, {}}, NormalizationConfig{});
  CHECK(doc.page_count == 3);

  // Breaks at known offsets: page of each surviving token, hand-computed.
  const std::string text = "كتب الولد.\nدرس!\fقرأ 12 كتابا\f\fعاد الى البيت";
  NormalizationConfig config;
  config.stopwords = {"الى"};
  const auto d2 = normalize_document({"d2", text, {}, {}}, config);
  CHECK(d2.page_count == 4);
  const std::vector<std::pair<std::string, std::uint32_t>> expected{
      {"كتب", 1}, {"الولد", 1}, {"درس", 1}, {"قرأ", 2}, {"كتابا", 2}, {"عاد", 4}, {"البيت", 4}};
  REQUIRE(d2.tokens.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(d2.tokens[i].surface == expected[i].first);
    CHECK(d2.tokens[i].page == expected[i].second);
    CHECK(d2.tokens[i].ordinal == i);
  }

  // Independent scan: count form feeds before each word's first byte.
  std::size_t cursor = 0;
  for (const auto& tok : d2.tokens) {
    const std::size_t at = text.find(tok.surface, cursor);
    REQUIRE(at != std::string::npos);
    const auto breaks = static_cast<std::uint32_t>(std::count(text.begin(), text.begin() + at, '\f'));
    CHECK(tok.page == breaks + 1);
    cursor = at + tok.surface.size();
  }
}

TEST_CASE("normalized documents satisfy alphabet, stop-word and page invariants") {
  NormalizationConfig config;
  config.stopwords = default_stoplist();
  config.fold_alef = true;
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    std::string text = noisy_text(rng, 600);
    text += " في على";
    const RawDocument raw{"doc" + std::to_string(i), text, {}, {}};
    PaginationRule rule;
    rule.words_per_page = 7;
    const auto doc = normalize_document(raw, config, rule);
    CHECK(doc == normalize_document(raw, config, rule));
    std::uint32_t last_page = 1;
    for (std::size_t k = 0; k < doc.tokens.size(); ++k) {
      const auto& t = doc.tokens[k];
      CHECK(is_arabic_word(t.surface));
      CHECK_FALSE(config.stopwords.contains(t.surface));
      CHECK(t.ordinal == k);
      CHECK(t.page >= last_page);
      CHECK(t.page <= doc.page_count);
      last_page = t.page;
    }
  }
}

TEST_CASE("config validation and the bundled stoplist") {
  NormalizationConfig config;
  CHECK_NOTHROW(config.validate());
  config.strip_chars.erase(U'~');
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config = {};
  config.diacritics.erase(0x0640);
  CHECK_THROWS_AS(config.validate(), ConfigError);

  const auto stop = default_stoplist();
  CHECK(stop.size() > 50);
  CHECK(stop.contains("في"));
  CHECK_FALSE(stop.contains("# Default Arabic stop-word list: particles, prepositions, pronouns and"));
  CHECK(parse_stoplist("# c\nفي\r\n\n  من \n") == std::set<std::string>{"في", "من"});
}
