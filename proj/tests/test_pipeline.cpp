#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "emolag/pipeline.hpp"
#include "emolag/rng.hpp"

using namespace emolag;
using corpus::Document;
using corpus::Source;

namespace {

const std::filesystem::path kData = EMOLAG_DATA_DIR;

struct Fixture {
  textprep::PrepConfig prep;
  lexicon::Lexicon lex;
  std::vector<Document> docs;

  Fixture() : lex(make_lex()) {
    textprep::load_stopwords(kData / "stopwords/english.txt", prep.stopwords);
    prep.lemmas = textprep::load_lemma_dict(kData / "lemma/english.tsv");
    docs = make_docs();
  }

  static lexicon::Lexicon make_lex() {
    const auto base = lexicon::load_lexicon(kData / "lexicon/empath_categories.tsv");
    const auto mods = lexicon::load_modifications(kData / "lexicon/covid_modifications.txt");
    return lexicon::apply_modifications(base, mods);
  }

  static std::vector<Document> make_docs() {
    Rng rng(314);
    const std::vector<std::string> words = {
        "lockdown", "cases",   "positive", "hospital", "vaccine", "fear",  "panic",
        "happy",    "hope",    "minister", "policy",   "today",   "covid", "corona",
        "helping",  "doctors", "died",     "deaths",   "#corona", "Wash",  "hands!",
        "https://t.co/abc",
    };
    std::vector<Document> docs;
    for (int i = 0; i < 400; ++i) {
      Document d;
      d.id = std::to_string(i);
      d.timestamp = 1583020800 + static_cast<std::int64_t>(rng.below(40)) * 86400 +
                    static_cast<std::int64_t>(rng.below(86400));
      d.region = (i % 5 == 0) ? "goa" : "delhi";
      d.source = (i % 3 == 0) ? Source::Bulletin : Source::Tweet;
      std::string text;
      const std::size_t len = 3 + rng.below(25);
      for (std::size_t w = 0; w < len; ++w) {
        if (!text.empty()) text += ' ';
        text += words[rng.below(words.size())];
      }
      d.text = text;
      docs.push_back(std::move(d));
    }
    return docs;
  }
};

}  // namespace

TEST_CASE("parallel scoring is bit-identical to the serial reference") {
  Fixture fx;
  const auto serial = pipeline::score_documents_serial(fx.docs, fx.prep, fx.lex, 330);
  const auto parallel = pipeline::score_documents(fx.docs, fx.prep, fx.lex, 330);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("parallel token counting matches the serial reference") {
  Fixture fx;
  const auto serial = pipeline::count_tokens_serial(fx.docs, fx.prep);
  const auto parallel = pipeline::count_tokens(fx.docs, fx.prep);
  CHECK(serial == parallel);
}

TEST_CASE("score_one agrees with lexicon::score over preprocess") {
  Fixture fx;
  for (const auto& doc : fx.docs) {
    const auto ds = pipeline::score_one(doc, fx.prep, fx.lex, 0);
    const auto tokens = textprep::preprocess(doc.text, fx.prep);
    const auto ref = lexicon::score(tokens, fx.lex);
    CHECK(ds.total_tokens == ref.total_tokens);
    for (std::size_t c = 0; c < fx.lex.size(); ++c)
      CHECK(ds.raw[c] == ref.raw_of(fx.lex.categories()[c]));
  }
}

TEST_CASE("build_all_series equals the serial aggregate reference, bit for bit") {
  Fixture fx;
  const auto scores = pipeline::score_documents(fx.docs, fx.prep, fx.lex, 0);

  std::vector<std::pair<Document, lexicon::CategoryScores>> scored;
  for (const auto& doc : fx.docs) {
    const auto tokens = textprep::preprocess(doc.text, fx.prep);
    scored.emplace_back(doc, lexicon::score(tokens, fx.lex));
  }

  for (const auto mode : {series::AggregateMode::MeanNormalized, series::AggregateMode::Pooled}) {
    series::AggregateOptions opts;
    opts.mode = mode;
    const auto all =
        pipeline::build_all_series(fx.docs, scores, fx.lex, "delhi", Source::Tweet, opts);
    REQUIRE(all.size() == fx.lex.size());
    for (const auto& category : fx.lex.categories()) {
      const auto ref = series::aggregate(scored, category, "delhi", Source::Tweet, opts);
      const auto& got = all.at(category);
      CHECK(got.start_date == ref.start_date);
      CHECK(got.values == ref.values);  // exact: same arithmetic path
    }
  }
}

TEST_CASE("parallel granger batch equals the serial batch") {
  Fixture fx;
  const auto scores = pipeline::score_documents(fx.docs, fx.prep, fx.lex, 0);
  series::AggregateOptions opts;
  const auto bulletin =
      pipeline::build_all_series(fx.docs, scores, fx.lex, "delhi", Source::Bulletin, opts);
  const auto tweets =
      pipeline::build_all_series(fx.docs, scores, fx.lex, "delhi", Source::Tweet, opts);

  const auto serial = econ::granger_pairwise(bulletin, tweets, 4);
  const auto parallel = pipeline::granger_pairwise_parallel(bulletin, tweets, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].category == parallel[i].category);
    CHECK(serial[i].skipped == parallel[i].skipped);
    CHECK(serial[i].skip_reason == parallel[i].skip_reason);
    if (!serial[i].skipped) {
      CHECK(serial[i].result.f_value == parallel[i].result.f_value);
      CHECK(serial[i].result.p_value == parallel[i].result.p_value);
      CHECK(serial[i].result.lag_p == parallel[i].result.lag_p);
      CHECK(serial[i].result.caused == parallel[i].result.caused);
    }
  }
}

TEST_CASE("repeated parallel runs are identical") {
  Fixture fx;
  const auto a = pipeline::score_documents(fx.docs, fx.prep, fx.lex, 0);
  const auto b = pipeline::score_documents(fx.docs, fx.prep, fx.lex, 0);
  CHECK(a == b);
  const auto ca = pipeline::count_tokens(fx.docs, fx.prep);
  const auto cb = pipeline::count_tokens(fx.docs, fx.prep);
  CHECK(ca == cb);
}
