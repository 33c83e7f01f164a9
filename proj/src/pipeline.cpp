#include "emolag/pipeline.hpp"

#include <algorithm>
#include <unordered_map>

#include "emolag/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace emolag::pipeline {

DocScore score_one(const corpus::Document& doc, const textprep::PrepConfig& cfg,
                   const lexicon::Lexicon& lex, int utc_offset_minutes) {
  const auto tokens = textprep::preprocess(doc.text, cfg);
  DocScore score;
  score.day = day_of_timestamp(doc.timestamp, utc_offset_minutes);
  score.total_tokens = static_cast<std::uint32_t>(tokens.size());
  score.raw.assign(lex.size(), 0);
  lexicon::score_into(tokens, lex, score.raw);
  return score;
}

std::vector<DocScore> score_documents_serial(std::span<const corpus::Document> docs,
                                             const textprep::PrepConfig& cfg,
                                             const lexicon::Lexicon& lex,
                                             int utc_offset_minutes) {
  std::vector<DocScore> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i)
    out[i] = score_one(docs[i], cfg, lex, utc_offset_minutes);
  return out;
}

std::vector<DocScore> score_documents(std::span<const corpus::Document> docs,
                                      const textprep::PrepConfig& cfg,
                                      const lexicon::Lexicon& lex, int utc_offset_minutes) {
  std::vector<DocScore> out(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        score_one(docs[static_cast<std::size_t>(i)], cfg, lex, utc_offset_minutes);
  return out;
}

std::map<std::string, std::uint64_t> count_tokens_serial(
    std::span<const corpus::Document> docs, const textprep::PrepConfig& cfg) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& doc : docs)
    for (const auto& t : textprep::preprocess(doc.text, cfg)) ++counts[t];
  return counts;
}

std::map<std::string, std::uint64_t> count_tokens(std::span<const corpus::Document> docs,
                                                  const textprep::PrepConfig& cfg) {
  // Integer counts merge commutatively, so per-thread maps folded in
  // any order give the same table.
  std::map<std::string, std::uint64_t> counts;
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#ifdef _OPENMP
#pragma omp parallel
  {
    std::unordered_map<std::string, std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (const auto& t : textprep::preprocess(docs[static_cast<std::size_t>(i)].text, cfg))
        ++local[t];
#pragma omp critical(emolag_count_tokens)
    for (const auto& [token, c] : local) counts[token] += c;
  }
#else
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (const auto& t : textprep::preprocess(docs[static_cast<std::size_t>(i)].text, cfg))
      ++counts[t];
#endif
  return counts;
}

std::map<std::string, series::EmotionSeries> build_all_series(
    std::span<const corpus::Document> docs, std::span<const DocScore> scores,
    const lexicon::Lexicon& lex, const std::string& region, corpus::Source source,
    const series::AggregateOptions& opts) {
  if (docs.size() != scores.size())
    throw std::invalid_argument("build_all_series: docs/scores length mismatch");

  std::vector<std::size_t> selected;
  Day lo = 0, hi = 0;
  bool seen = false;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].region != region || docs[i].source != source) continue;
    selected.push_back(i);
    const Day day = scores[i].day;
    lo = seen ? std::min(lo, day) : day;
    hi = seen ? std::max(hi, day) : day;
    seen = true;
  }
  if (!seen)
    throw EmptySelection("no documents for region '" + region + "' source " +
                         corpus::source_name(source));
  if (opts.window) {
    lo = opts.window->first;
    hi = opts.window->last;
  }
  if (hi < lo) throw EmptySelection("empty aggregation window");
  const std::size_t days = static_cast<std::size_t>(hi - lo) + 1;

  std::vector<series::DailyAccum> accums(lex.size(), series::DailyAccum(lo, days));
  for (const std::size_t i : selected) {
    const auto& sc = scores[i];
    const double total = static_cast<double>(sc.total_tokens);
    const double denom = static_cast<double>(sc.total_tokens > 0 ? sc.total_tokens : 1);
    for (std::size_t c = 0; c < lex.size(); ++c) {
      const double raw = static_cast<double>(sc.raw[c]);
      accums[c].add(sc.day, raw / denom, raw, total);
    }
  }

  std::map<std::string, series::EmotionSeries> out;
  for (std::size_t c = 0; c < lex.size(); ++c)
    out[lex.categories()[c]] =
        series::reduce_daily(accums[c], region, source, lex.categories()[c], opts);
  return out;
}

std::vector<econ::GrangerRecord> granger_pairwise_parallel(
    const std::map<std::string, series::EmotionSeries>& bulletin,
    const std::map<std::string, series::EmotionSeries>& tweets, int max_p) {
  struct Pair {
    const std::string* category;
    const series::EmotionSeries* b;
    const series::EmotionSeries* t;
  };
  std::vector<Pair> shared;
  for (const auto& [category, bseries] : bulletin) {
    const auto it = tweets.find(category);
    if (it != tweets.end()) shared.push_back({&category, &bseries, &it->second});
  }

  std::vector<std::vector<econ::GrangerRecord>> slots(shared.size());
  const auto n = static_cast<std::ptrdiff_t>(shared.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& p = shared[static_cast<std::size_t>(i)];
    slots[static_cast<std::size_t>(i)] = econ::granger_category(*p.category, *p.b, *p.t, max_p);
  }

  std::vector<econ::GrangerRecord> records;
  for (auto& slot : slots)
    for (auto& rec : slot) records.push_back(std::move(rec));
  return records;
}

}  // namespace emolag::pipeline
