#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "emolag/corpus.hpp"
#include "emolag/date.hpp"
#include "emolag/errors.hpp"

using namespace emolag;
using corpus::CorpusFormat;
using corpus::Document;
using corpus::RegionSpec;
using corpus::Source;

namespace {

const std::filesystem::path kData = EMOLAG_DATA_DIR;

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "emolag_corpus_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const auto path = temp_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("minimal jsonl record") {
  const auto path = write_file(
      "one.jsonl",
      R"({"id":"1","created_at":"2020-03-15T10:00:00Z","text":"corona","region":"DL"})"
      "\n");
  const auto result = corpus::load_documents(path, CorpusFormat::Jsonl, Source::Tweet);
  REQUIRE(result.documents.size() == 1);
  const auto& d = result.documents.front();
  CHECK(d.id == "1");
  CHECK(d.text == "corona");
  CHECK(d.region == "dl");
  CHECK(d.source == Source::Tweet);
  CHECK(format_timestamp(d.timestamp) == "2020-03-15T10:00:00Z");
  CHECK(result.skipped == 0);
}

TEST_CASE("numeric ids are accepted in jsonl") {
  const auto path = write_file(
      "numid.jsonl",
      R"({"id":12345,"created_at":"2020-03-15T10:00:00Z","text":"corona"})"
      "\n");
  const auto result = corpus::load_documents(path, CorpusFormat::Jsonl, Source::Tweet);
  REQUIRE(result.documents.size() == 1);
  CHECK(result.documents.front().id == "12345");
}

TEST_CASE("malformed records are counted and skipped") {
  const auto path = write_file(
      "three.jsonl",
      R"({"id":"1","created_at":"2020-03-15T10:00:00Z","text":"a"})"
      "\n"
      R"({"id":"2","created_at":"2020-03-15T11:00:00Z"})"
      "\n"
      R"({"id":"3","created_at":"2020-03-15T12:00:00Z","text":"c"})"
      "\n");
  const auto result = corpus::load_documents(path, CorpusFormat::Jsonl, Source::Tweet);
  CHECK(result.documents.size() == 2);
  CHECK(result.skipped == 1);
  REQUIRE_FALSE(result.warnings.empty());
  CHECK(result.warnings.front().find("text") != std::string::npos);
}

TEST_CASE("valid plus skipped equals input record count") {
  std::string lines;
  std::size_t total = 0;
  for (int i = 0; i < 20; ++i) {
    if (i % 3 == 0)
      lines += R"({"id":")" + std::to_string(i) + R"("})" "\n";
    else
      lines += R"({"id":")" + std::to_string(i) +
               R"(","created_at":"2020-03-01T00:00:00Z","text":"t"})" "\n";
    ++total;
  }
  const auto result =
      corpus::load_documents(write_file("mix.jsonl", lines), CorpusFormat::Jsonl, Source::Tweet);
  CHECK(result.documents.size() + result.skipped == total);
}

TEST_CASE("csv with quoting and missing header field") {
  const auto ok = write_file("ok.csv",
                             "id,created_at,text,user_location\n"
                             "7,2020-04-01T08:00:00+05:30,\"hello, \"\"world\"\"\",\"New "
                             "Delhi, India\"\n");
  const auto result = corpus::load_documents(ok, CorpusFormat::Csv, Source::Tweet);
  REQUIRE(result.documents.size() == 1);
  CHECK(result.documents[0].text == "hello, \"world\"");
  CHECK(result.documents[0].user_location == "New Delhi, India");
  // +05:30 shifted back to UTC
  CHECK(format_timestamp(result.documents[0].timestamp) == "2020-04-01T02:30:00Z");

  const auto bad = write_file("bad.csv", "id,when,text\n1,2020-01-01,x\n");
  CHECK_THROWS_AS(corpus::load_documents(bad, CorpusFormat::Csv, Source::Tweet), SchemaError);
}

TEST_CASE("bulletin directory follows the filename convention") {
  const auto dir = temp_dir() / "bulletins";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "2020-04-01_delhi.txt") << "Total positive cases: 120";
    std::ofstream(dir / "2020-04-02_west bengal.txt") << "advisory issued";
    std::ofstream(dir / "notes.txt") << "not a bulletin";
  }
  const auto result =
      corpus::load_documents(dir, CorpusFormat::BulletinTextDir, Source::Bulletin);
  REQUIRE(result.documents.size() == 2);
  CHECK(result.skipped == 1);
  const auto& d = result.documents.front();
  CHECK(d.region == "delhi");
  CHECK(d.source == Source::Bulletin);
  CHECK(d.text == "Total positive cases: 120");
  CHECK(day_of_timestamp(d.timestamp, 0) == *parse_date("2020-04-01"));
  CHECK(result.documents[1].region == "west bengal");
  std::filesystem::remove_all(dir);
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(corpus::load_documents("/no/such/file", CorpusFormat::Jsonl, Source::Tweet),
                  UnreadablePath);
  const auto empty = write_file("empty.jsonl", "\n");
  CHECK_THROWS_AS(corpus::load_documents(empty, CorpusFormat::Jsonl, Source::Tweet),
                  EmptyCorpus);
}

TEST_CASE("query generation covers aliases and the fightscorona tag") {
  RegionSpec odisha{"odisha", {"orissa"}, {}};
  const auto qs = corpus::generate_queries(odisha, std::vector<std::string>{"corona "},
                                           std::vector<std::string>{"coronain"});
  CHECK(std::count(qs.plain_queries.begin(), qs.plain_queries.end(), "corona odisha") == 1);
  CHECK(std::count(qs.plain_queries.begin(), qs.plain_queries.end(), "corona orissa") == 1);
  CHECK(std::count(qs.hashtags.begin(), qs.hashtags.end(), "#coronainodisha") == 1);
  CHECK(std::count(qs.hashtags.begin(), qs.hashtags.end(), "#odishafightscorona") == 1);
  CHECK(std::count(qs.hashtags.begin(), qs.hashtags.end(), "#orissafightscorona") == 1);

  RegionSpec delhi{"delhi", {}, {}};
  const auto qd = corpus::generate_queries(delhi, std::vector<std::string>{"corona "},
                                           std::vector<std::string>{"coronain"});
  CHECK(std::count(qd.hashtags.begin(), qd.hashtags.end(), "#coronaindelhi") == 1);
}

TEST_CASE("query counts before dedup and determinism") {
  RegionSpec region{"goa", {"gooa"}, {}};
  const std::vector<std::string> prefixes{"corona ", "covid "};
  const std::vector<std::string> hashtag_prefixes{"covid"};
  const auto qs = corpus::generate_queries(region, prefixes, hashtag_prefixes);
  // 2 prefixes x 2 names, 1 hashtag prefix x 2 names + 2 fightscorona
  CHECK(qs.plain_queries.size() == 4);
  CHECK(qs.hashtags.size() == 4);
  const auto again = corpus::generate_queries(region, prefixes, hashtag_prefixes);
  CHECK(qs.plain_queries == again.plain_queries);
  CHECK(qs.hashtags == again.hashtags);
  CHECK(std::is_sorted(qs.plain_queries.begin(), qs.plain_queries.end()));
  CHECK(std::is_sorted(qs.hashtags.begin(), qs.hashtags.end()));
  for (const auto& h : qs.hashtags) CHECK(h.front() == '#');

  CHECK_THROWS_AS(corpus::generate_queries(RegionSpec{"", {}, {}}, prefixes, hashtag_prefixes),
                  EmptyRegionSpec);
}

TEST_CASE("multiword names make spaceless hashtags") {
  RegionSpec tn{"tamil nadu", {"tn"}, {}};
  const auto qs = corpus::generate_queries(tn, std::vector<std::string>{"corona "},
                                           std::vector<std::string>{"coronain"});
  CHECK(std::count(qs.plain_queries.begin(), qs.plain_queries.end(), "corona tamil nadu") == 1);
  CHECK(std::count(qs.hashtags.begin(), qs.hashtags.end(), "#coronaintamilnadu") == 1);
}

TEST_CASE("location filter: country gate then region assignment") {
  std::vector<RegionSpec> regions{
      {"delhi", {"dl"}, {"new delhi"}},
      {"maharashtra", {}, {"mumbai", "pune"}},
      {"goa", {}, {}},
  };
  auto doc = [](std::string id, const char* loc) {
    Document d;
    d.id = std::move(id);
    d.timestamp = 1584230400;
    d.source = Source::Tweet;
    d.text = "x";
    if (loc) d.user_location = loc;
    return d;
  };
  std::vector<Document> docs;
  docs.push_back(doc("1", "New Delhi, India"));
  docs.push_back(doc("2", "London, UK"));
  docs.push_back(doc("3", "Mumbai"));  // no country key
  docs.push_back(doc("4", "Chicago, not india actually"));
  docs.push_back(doc("5", "somewhere in india"));
  docs.push_back(doc("6", nullptr));
  docs.push_back(doc("7", "Pune, INDIA"));

  const auto buckets = corpus::filter_by_location(docs, "india", regions);
  REQUIRE(buckets.contains("delhi"));
  CHECK(buckets.at("delhi").size() == 1);
  CHECK(buckets.at("delhi").front().id == "1");
  CHECK(buckets.at("delhi").front().region == "delhi");
  REQUIRE(buckets.contains("maharashtra"));
  CHECK(buckets.at("maharashtra").front().id == "7");
  REQUIRE(buckets.contains(corpus::kNationalBucket));
  // "4" matches the country key word-bounded ("india" appears as a word)
  CHECK(buckets.at(corpus::kNationalBucket).size() == 2);
  CHECK_FALSE(buckets.contains("goa"));  // "chicago" must not match goa
}

TEST_CASE("word-bounded matching") {
  CHECK(corpus::contains_word_bounded("new delhi, india", "india"));
  CHECK(corpus::contains_word_bounded("india", "india"));
  CHECK_FALSE(corpus::contains_word_bounded("indiana, usa", "india"));
  CHECK_FALSE(corpus::contains_word_bounded("chicago", "goa"));
  CHECK(corpus::contains_word_bounded("goa, india", "goa"));
  CHECK(corpus::contains_word_bounded("near new delhi", "new delhi"));
}

TEST_CASE("a location matching two regions lands in both") {
  std::vector<RegionSpec> regions{
      {"delhi", {}, {"new delhi"}},
      {"maharashtra", {}, {"mumbai"}},
  };
  Document d;
  d.id = "x";
  d.source = Source::Tweet;
  d.user_location = "between Delhi and Mumbai, India";
  const auto buckets = corpus::filter_by_location({&d, 1}, "india", regions);
  REQUIRE(buckets.contains("delhi"));
  REQUIRE(buckets.contains("maharashtra"));
  CHECK(buckets.at("delhi").front().id == "x");
  CHECK(buckets.at("maharashtra").front().id == "x");
}

TEST_CASE("filter never assigns without a token match") {
  std::vector<RegionSpec> regions{{"delhi", {"dl"}, {"new delhi"}}};
  std::vector<Document> docs;
  for (int i = 0; i < 50; ++i) {
    Document d;
    d.id = std::to_string(i);
    d.source = Source::Tweet;
    d.user_location = (i % 2) ? "random place, india" : "delhi, india";
    docs.push_back(d);
  }
  const auto buckets = corpus::filter_by_location(docs, "india", regions);
  for (const auto& d : buckets.at("delhi")) {
    const auto loc = d.user_location.value();
    CHECK(loc.find("delhi") != std::string::npos);
  }
}

TEST_CASE("shipped region specs parse") {
  const auto specs = corpus::load_region_specs(kData / "regions/india.txt");
  CHECK(specs.size() >= 10);
  const auto odisha = std::find_if(specs.begin(), specs.end(), [](const RegionSpec& r) {
    return r.canonical_name == "odisha";
  });
  REQUIRE(odisha != specs.end());
  CHECK(std::count(odisha->aliases.begin(), odisha->aliases.end(), "orissa") == 1);
}
