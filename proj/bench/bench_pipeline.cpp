// Serial vs OpenMP timings for the document-level kernels and the
// Granger batch, on a generated corpus. Also asserts that both paths
// agree, since a fast wrong kernel is worthless.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "emolag/pipeline.hpp"
#include "emolag/rng.hpp"

using namespace emolag;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<corpus::Document> make_corpus(std::size_t n_docs) {
  Rng rng(20200301);
  const std::vector<std::string> words = {
      "lockdown", "cases",    "positive", "hospital", "vaccine",  "fear",
      "panic",    "happy",    "hope",     "minister", "policy",   "today",
      "covid",    "corona",   "helping",  "doctors",  "died",     "deaths",
      "#corona",  "Wash",     "hands!",   "https://t.co/abc",     "studies",
      "studying", "business", "economy",  "stay_home", "test",    "negative",
  };
  std::vector<corpus::Document> docs;
  docs.reserve(n_docs);
  for (std::size_t i = 0; i < n_docs; ++i) {
    corpus::Document d;
    d.id = std::to_string(i);
    d.timestamp = 1583020800 + static_cast<std::int64_t>(rng.below(45)) * 86400;
    d.region = "delhi";
    d.source = (i % 4 == 0) ? corpus::Source::Bulletin : corpus::Source::Tweet;
    std::string text;
    const std::size_t len = 8 + rng.below(24);
    for (std::size_t w = 0; w < len; ++w) {
      if (!text.empty()) text += ' ';
      text += words[rng.below(words.size())];
    }
    d.text = std::move(text);
    docs.push_back(std::move(d));
  }
  return docs;
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    f();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n_docs = argc > 1 ? std::stoul(argv[1]) : 60000;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("documents: %zu\n\n", n_docs);

  textprep::PrepConfig prep;
  textprep::load_stopwords(std::string(EMOLAG_DATA_DIR) + "/stopwords/english.txt",
                           prep.stopwords);
  prep.lemmas =
      textprep::load_lemma_dict(std::string(EMOLAG_DATA_DIR) + "/lemma/english.tsv");
  const auto base =
      lexicon::load_lexicon(std::string(EMOLAG_DATA_DIR) + "/lexicon/empath_categories.tsv");
  const auto mods = lexicon::load_modifications(std::string(EMOLAG_DATA_DIR) +
                                                "/lexicon/covid_modifications.txt");
  const auto lex = lexicon::apply_modifications(base, mods);
  const auto docs = make_corpus(n_docs);

  std::vector<pipeline::DocScore> serial_scores, parallel_scores;
  const double t_score_serial = time_best_of(
      3, [&] { serial_scores = pipeline::score_documents_serial(docs, prep, lex, 0); });
  const double t_score_parallel =
      time_best_of(3, [&] { parallel_scores = pipeline::score_documents(docs, prep, lex, 0); });
  if (serial_scores != parallel_scores) {
    std::fprintf(stderr, "FATAL: parallel scoring diverged from the serial reference\n");
    return 1;
  }
  std::printf("score_documents   serial %8.3fs  parallel %8.3fs  speedup %.2fx\n",
              t_score_serial, t_score_parallel, t_score_serial / t_score_parallel);

  std::map<std::string, std::uint64_t> counts_serial, counts_parallel;
  const double t_count_serial =
      time_best_of(3, [&] { counts_serial = pipeline::count_tokens_serial(docs, prep); });
  const double t_count_parallel =
      time_best_of(3, [&] { counts_parallel = pipeline::count_tokens(docs, prep); });
  if (counts_serial != counts_parallel) {
    std::fprintf(stderr, "FATAL: parallel counting diverged from the serial reference\n");
    return 1;
  }
  std::printf("count_tokens      serial %8.3fs  parallel %8.3fs  speedup %.2fx\n",
              t_count_serial, t_count_parallel, t_count_serial / t_count_parallel);

  series::AggregateOptions opts;
  const auto bulletin = pipeline::build_all_series(docs, parallel_scores, lex, "delhi",
                                                   corpus::Source::Bulletin, opts);
  const auto tweets = pipeline::build_all_series(docs, parallel_scores, lex, "delhi",
                                                 corpus::Source::Tweet, opts);
  std::vector<econ::GrangerRecord> rec_serial, rec_parallel;
  const double t_granger_serial =
      time_best_of(5, [&] { rec_serial = econ::granger_pairwise(bulletin, tweets, 4); });
  const double t_granger_parallel = time_best_of(
      5, [&] { rec_parallel = pipeline::granger_pairwise_parallel(bulletin, tweets, 4); });
  if (rec_serial.size() != rec_parallel.size()) {
    std::fprintf(stderr, "FATAL: parallel granger batch diverged\n");
    return 1;
  }
  for (std::size_t i = 0; i < rec_serial.size(); ++i)
    if (rec_serial[i].skipped != rec_parallel[i].skipped ||
        (!rec_serial[i].skipped &&
         rec_serial[i].result.f_value != rec_parallel[i].result.f_value)) {
      std::fprintf(stderr, "FATAL: parallel granger batch diverged at %zu\n", i);
      return 1;
    }
  std::printf("granger_pairwise  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n",
              t_granger_serial, t_granger_parallel, t_granger_serial / t_granger_parallel);

  std::printf("\nall parallel kernels matched their serial references\n");
  return 0;
}
