#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "emolag/errors.hpp"
#include "emolag/rng.hpp"
#include "emolag/series.hpp"

using namespace emolag;
using corpus::Document;
using corpus::Source;
using lexicon::CategoryScores;
using series::AggregateMode;
using series::AggregateOptions;
using series::EmotionSeries;
using series::GapPolicy;

namespace {

const Day kMar1 = *parse_date("2020-03-01");

std::pair<Document, CategoryScores> scored_doc(const std::string& id, const char* date,
                                               std::uint32_t raw, std::size_t total,
                                               const std::string& region = "delhi",
                                               Source source = Source::Tweet) {
  Document d;
  d.id = id;
  d.timestamp = static_cast<std::int64_t>(*parse_date(date)) * 86400 + 3600;
  d.region = region;
  d.source = source;
  CategoryScores s;
  if (raw > 0) s.raw["fear"] = raw;
  s.total_tokens = total;
  return {d, s};
}

EmotionSeries series_of(std::vector<double> values, const char* start = "2020-03-01") {
  EmotionSeries s;
  s.region = "delhi";
  s.source = Source::Tweet;
  s.category = "fear";
  s.start_date = *parse_date(start);
  s.values = std::move(values);
  return s;
}

}  // namespace

TEST_CASE("mean of two normalized scores on one day") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-01", 1, 5));   // 0.2
  scored.push_back(scored_doc("2", "2020-03-01", 2, 5));   // 0.4
  const auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
  REQUIRE(s.values.size() == 1);
  CHECK(s.values[0] == doctest::Approx(0.3));
  CHECK(s.start_date == kMar1);
}

TEST_CASE("gap day zero-filled by default, carried when asked") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-01", 1, 4));
  scored.push_back(scored_doc("2", "2020-03-03", 1, 4));
  auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[1] == 0.0);

  AggregateOptions carry;
  carry.gap = GapPolicy::CarryForward;
  s = series::aggregate(scored, "fear", "delhi", Source::Tweet, carry);
  CHECK(s.values[1] == doctest::Approx(0.25));
}

TEST_CASE("pooled mode divides summed raw by summed tokens") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-01", 2, 10));
  scored.push_back(scored_doc("2", "2020-03-01", 1, 5));
  AggregateOptions pooled;
  pooled.mode = AggregateMode::Pooled;
  const auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, pooled);
  REQUIRE(s.values.size() == 1);
  CHECK(s.values[0] == doctest::Approx(3.0 / 15.0));
}

TEST_CASE("selection honours region and source; empty selection throws") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-01", 1, 4, "delhi", Source::Tweet));
  scored.push_back(scored_doc("2", "2020-03-01", 3, 4, "goa", Source::Tweet));
  scored.push_back(scored_doc("3", "2020-03-01", 3, 4, "delhi", Source::Bulletin));
  const auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
  CHECK(s.values[0] == doctest::Approx(0.25));
  CHECK_THROWS_AS(series::aggregate(scored, "fear", "kerala", Source::Tweet, {}),
                  EmptySelection);
}

TEST_CASE("pooled day with zero tokens scores zero") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-01", 0, 0));  // empty document
  series::AggregateOptions pooled;
  pooled.mode = AggregateMode::Pooled;
  const auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, pooled);
  CHECK(s.values[0] == 0.0);
  const auto m = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
  CHECK(m.values[0] == 0.0);  // normalized uses max(total, 1)
}

TEST_CASE("aggregate is permutation invariant") {
  Rng rng(99);
  std::vector<std::pair<Document, CategoryScores>> scored;
  for (int i = 0; i < 60; ++i) {
    const char* dates[] = {"2020-03-01", "2020-03-02", "2020-03-04", "2020-03-07"};
    scored.push_back(scored_doc(std::to_string(i), dates[rng.below(4)],
                                static_cast<std::uint32_t>(rng.below(4)),
                                5 + rng.below(10)));
  }
  const auto base = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
  for (int rep = 0; rep < 5; ++rep) {
    for (std::size_t i = scored.size(); i > 1; --i)
      std::swap(scored[i - 1], scored[rng.below(i)]);
    const auto shuffled = series::aggregate(scored, "fear", "delhi", Source::Tweet, {});
    REQUIRE(shuffled.values.size() == base.values.size());
    for (std::size_t i = 0; i < base.values.size(); ++i)
      CHECK(shuffled.values[i] == doctest::Approx(base.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("difference basics") {
  CHECK(series::difference(series_of({1, 1, 1})).values == std::vector<double>{0, 0});
  CHECK(series::difference(series_of({1, 2, 4})).values == std::vector<double>{1, 2});
  const auto d = series::difference(series_of({1, 2, 4}));
  CHECK(d.start_date == kMar1 + 1);
  CHECK_THROWS_AS(series::difference(series_of({1})), TooShort);
}

TEST_CASE("cumulative sum inverts difference") {
  Rng rng(123);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> values(2 + rng.below(40));
    for (auto& v : values) v = rng.normal();
    const auto d = series::difference(series_of(values));
    CHECK(d.values.size() == values.size() - 1);
    double acc = values[0];
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      acc += d.values[i];
      CHECK(acc == doctest::Approx(values[i + 1]).epsilon(1e-12));
    }
  }
}

TEST_CASE("double difference shrinks by exactly two") {
  const auto s = series_of({5, 3, 8, 2, 9, 4});
  CHECK(series::difference(series::difference(s)).values.size() == s.values.size() - 2);
}

TEST_CASE("align truncates to the intersection") {
  auto a = series_of(std::vector<double>(31, 1.0), "2020-03-01");  // Mar 1-31
  auto b = series_of(std::vector<double>(32, 2.0), "2020-03-15");  // Mar 15 - Apr 15
  const auto pair = series::align(a, b);
  CHECK(pair.n == 17);
  CHECK(pair.y.start_date == *parse_date("2020-03-15"));
  CHECK(pair.x.start_date == *parse_date("2020-03-15"));
  CHECK(pair.y.values.size() == 17);
  CHECK(pair.x.values.size() == 17);
}

TEST_CASE("align is symmetric in covered dates") {
  auto a = series_of({1, 2, 3, 4, 5, 6}, "2020-03-01");
  auto b = series_of({9, 8, 7, 6}, "2020-03-03");
  const auto ab = series::align(a, b);
  const auto ba = series::align(b, a);
  CHECK(ab.n == ba.n);
  CHECK(ab.y.start_date == ba.y.start_date);
  CHECK(ab.y.values == ba.x.values);
}

TEST_CASE("align: identity, disjoint, category mismatch") {
  auto a = series_of({1, 2, 3});
  auto b = series_of({4, 5, 6});
  const auto pair = series::align(a, b);
  CHECK(pair.y.values == a.values);
  CHECK(pair.x.values == b.values);

  auto far = series_of({1, 2, 3}, "2021-01-01");
  CHECK_THROWS_AS(series::align(a, far), NoOverlap);

  auto other = series_of({1, 2, 3});
  other.category = "hope";
  CHECK_THROWS_AS(series::align(a, other), CategoryMismatch);
  CHECK_NOTHROW(series::align(a, other, true));
}

TEST_CASE("explicit window pads the range") {
  std::vector<std::pair<Document, CategoryScores>> scored;
  scored.push_back(scored_doc("1", "2020-03-05", 1, 4));
  AggregateOptions opts;
  opts.window = series::DateRange{*parse_date("2020-03-01"), *parse_date("2020-03-10")};
  const auto s = series::aggregate(scored, "fear", "delhi", Source::Tweet, opts);
  CHECK(s.values.size() == 10);
  CHECK(s.start_date == kMar1);
  CHECK(s.values[4] == doctest::Approx(0.25));
  CHECK(s.values[0] == 0.0);
}
