#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "emolag/errors.hpp"
#include "emolag/rng.hpp"
#include "emolag/textprep.hpp"

using namespace emolag;
using textprep::PrepConfig;
using textprep::preprocess;

namespace {

const std::filesystem::path kData = EMOLAG_DATA_DIR;

PrepConfig shipped_config() {
  PrepConfig cfg;
  textprep::load_stopwords(kData / "stopwords/english.txt", cfg.stopwords);
  cfg.lemmas = textprep::load_lemma_dict(kData / "lemma/english.tsv");
  return cfg;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("the studies/studying golden example") {
  const auto cfg = shipped_config();
  const auto tokens = preprocess("Studies and studying!", cfg);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0] == "study");
  CHECK(tokens[1] == "study");
}

TEST_CASE("links are removed before stripping") {
  const auto cfg = shipped_config();
  const auto tokens = preprocess("Check https://t.co/xyz #corona", cfg);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0] == "check");
  CHECK(tokens[1] == "corona");

  CHECK(preprocess("visit www.example.com today", cfg) ==
        std::vector<std::string>{"visit", "today"});
}

TEST_CASE("hashtag bodies dropped when configured") {
  auto cfg = shipped_config();
  cfg.keep_hashtag_bodies = false;
  const auto tokens = preprocess("stay #corona safe", cfg);
  CHECK(tokens == std::vector<std::string>{"stay", "safe"});
}

TEST_CASE("empty and whitespace inputs") {
  const auto cfg = shipped_config();
  CHECK(preprocess("", cfg).empty());
  CHECK(preprocess("   \t\n ", cfg).empty());
  CHECK(preprocess("123 456 !!", cfg).empty());
}

TEST_CASE("lemmatize falls back to identity") {
  const auto cfg = shipped_config();
  CHECK(textprep::lemmatize("studies", cfg.lemmas) == "study");
  CHECK(textprep::lemmatize("study", cfg.lemmas) == "study");
  CHECK(textprep::lemmatize("covid", cfg.lemmas) == "covid");
}

TEST_CASE("output is lowercase alphabetic, stopword-free, lemma-fixed") {
  const auto cfg = shipped_config();
  Rng rng(31);
  const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789#@.!?:/ \t";
  for (int rep = 0; rep < 200; ++rep) {
    std::string raw;
    const std::size_t len = rng.below(120);
    for (std::size_t i = 0; i < len; ++i) raw += alphabet[rng.below(alphabet.size())];
    for (const auto& tok : preprocess(raw, cfg)) {
      CHECK_FALSE(tok.empty());
      for (const char c : tok) CHECK((c >= 'a' && c <= 'z'));
      CHECK_FALSE(cfg.stopwords.contains(tok));
      CHECK(textprep::lemmatize(tok, cfg.lemmas) == tok);
    }
  }
}

TEST_CASE("preprocess is idempotent on its own output") {
  const auto cfg = shipped_config();
  Rng rng(32);
  const std::vector<std::string> samples = {
      "Studies and studying! https://x.co #CoronaVirus COVID-19 cases RISING 24x7",
      "Total positive cases till date: 120. Stay safe, wash hands!",
      "doctors & nurses are helping patients recover... #gratitude www.news.in",
  };
  for (const auto& raw : samples) {
    const auto once = preprocess(raw, cfg);
    const auto twice = preprocess(join(once), cfg);
    CHECK(once == twice);
  }
  for (int rep = 0; rep < 100; ++rep) {
    std::string raw;
    for (std::size_t i = 0; i < rng.below(80); ++i)
      raw += static_cast<char>('a' + rng.below(26));
    const auto once = preprocess(raw, cfg);
    CHECK(preprocess(join(once), cfg) == once);
  }
}

TEST_CASE("shipped lemma values avoid the shipped stopword set") {
  const auto cfg = shipped_config();
  for (const auto& [surface, lemma] : cfg.lemmas) CHECK_FALSE(cfg.stopwords.contains(lemma));
}

TEST_CASE("non-idempotent lemma dictionary is rejected") {
  const auto dir = std::filesystem::temp_directory_path() / "emolag_lemma_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "bad.tsv";
  {
    std::ofstream out(path);
    out << "walking\twalk\nwalk\twalked\n";
  }
  CHECK_THROWS_AS(textprep::load_lemma_dict(path), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("missing files raise UnreadablePath") {
  textprep::StopwordSet set;
  CHECK_THROWS_AS(textprep::load_stopwords("/no/such/file.txt", set), UnreadablePath);
  CHECK_THROWS_AS(textprep::load_lemma_dict("/no/such/file.tsv"), UnreadablePath);
}
